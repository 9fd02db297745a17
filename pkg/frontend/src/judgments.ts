import { ApiClient } from "./api";
import { clear, el, fmt } from "./dom";
import { ViewState } from "./state";
import type { JudgmentRow, PutJudgmentsResponse, ScalePayload } from "./types";

// Difference-of-attractiveness palette: seven single categories, the
// adjacent-category unions for hesitant answers, and "don't know" (any
// positive difference). Values are (lo, hi) as the server stores them.
export const PALETTE: Array<{ label: string; lo: number; hi: number }> = [
  { label: "A0 no difference", lo: 0, hi: 0 },
  { label: "A1 very weak", lo: 1, hi: 1 },
  { label: "A2 weak", lo: 2, hi: 2 },
  { label: "A3 moderate", lo: 3, hi: 3 },
  { label: "A4 strong", lo: 4, hi: 4 },
  { label: "A5 very strong", lo: 5, hi: 5 },
  { label: "A6 extreme", lo: 6, hi: 6 },
  { label: "A1-2", lo: 1, hi: 2 },
  { label: "A2-3", lo: 2, hi: 3 },
  { label: "A3-4", lo: 3, hi: 4 },
  { label: "A4-5", lo: 4, hi: 5 },
  { label: "A5-6", lo: 5, hi: 6 },
  { label: "don't know", lo: 1, hi: 6 },
];

export function categoryLabel(lo: number, hi: number): string {
  if (lo === 1 && hi === 6) return "?";
  return lo === hi ? `A${lo}` : `A${lo}-${hi}`;
}

const pairKey = (better: string, worse: string) => `${better}|${worse}`;

/**
 * Upper-triangular judgment grid with a category palette, a consistency
 * banner and a live scale-bar column. The grid holds the full judgment set
 * locally and replaces it wholesale on the server per edit, so the banner
 * and bars always reflect the server's verdict, never a local guess.
 */
export class JudgmentGrid {
  private judgments = new Map<string, JudgmentRow>();
  private elements: string[] = [];
  private scale: ScalePayload | null = null;

  constructor(
    private container: HTMLElement,
    private client: ApiClient,
    private state: ViewState,
    private matrixId: string,
  ) {
    const matrix = state.doc?.matrices?.[matrixId];
    if (!matrix) throw new Error(`matrix ${matrixId} is not in the loaded project`);
    this.elements = matrix.elements;
    for (const row of matrix.judgments) {
      this.judgments.set(pairKey(row.better, row.worse), row);
    }
  }

  rows(): JudgmentRow[] {
    return [...this.judgments.values()];
  }

  setJudgment(better: string, worse: string, lo: number, hi: number): void {
    this.judgments.set(pairKey(better, worse), { better, worse, lo, hi });
    this.state.pendingPair = null;
  }

  clearJudgment(better: string, worse: string): void {
    this.judgments.delete(pairKey(better, worse));
    this.state.pendingPair = null;
  }

  async submit(): Promise<PutJudgmentsResponse | null> {
    if (this.state.projectId === null) throw new Error("no project loaded");
    let response: PutJudgmentsResponse;
    try {
      response = await this.client.putJudgments(
        this.state.projectId,
        this.matrixId,
        this.state.version,
        this.rows(),
      );
    } catch (error) {
      if (this.state.absorbConflict(error)) {
        this.render();
        return null;
      }
      throw error;
    }
    this.state.accept(response.version);
    this.state.lastReport = response.consistency;
    this.scale = response.scale;
    this.render();
    return response;
  }

  render(): void {
    clear(this.container);
    if (this.state.conflictPrompt) {
      this.container.appendChild(
        el("div", { className: "banner banner-conflict" },
          "This project changed elsewhere. Reload to continue."),
      );
      return;
    }
    this.container.appendChild(this.renderBanner());
    this.container.appendChild(this.renderGrid());
    this.container.appendChild(this.renderScale());
  }

  private renderBanner(): HTMLElement {
    const report = this.state.lastReport;
    if (!report) {
      return el("div", { className: "banner banner-idle" }, "No judgments submitted yet.");
    }
    if (report.consistent) {
      return el("div", { className: "banner banner-ok" }, "Judgments are consistent.");
    }
    const items = report.conflicts.map(([x, y]) =>
      el("li", { className: "conflict-cell" }, `${x} vs ${y}`),
    );
    return el(
      "div",
      { className: "banner banner-error" },
      el("span", {}, "Judgments are inconsistent. Conflicting cells:"),
      el("ul", { className: "banner-conflicts" }, ...items),
    );
  }

  private renderGrid(): HTMLElement {
    const conflicts = new Set(
      (this.state.lastReport?.conflicts ?? []).map(([x, y]) => pairKey(x, y)),
    );
    const head = el("tr", {}, el("th", {}, ""));
    for (const worse of this.elements.slice(1)) head.appendChild(el("th", {}, worse));

    const body: HTMLElement[] = [head];
    for (let i = 0; i < this.elements.length - 1; i++) {
      const better = this.elements[i];
      const tr = el("tr", {}, el("th", {}, better));
      for (let j = 1; j < this.elements.length; j++) {
        const worse = this.elements[j];
        if (j <= i) {
          tr.appendChild(el("td", { className: "cell-blank" }, ""));
          continue;
        }
        const key = pairKey(better, worse);
        const row = this.judgments.get(key);
        const classes = ["cell"];
        if (conflicts.has(key)) classes.push("conflict");
        if (
          this.state.pendingPair &&
          pairKey(...this.state.pendingPair) === key
        ) classes.push("pending");
        const cell = el(
          "td",
          {
            className: classes.join(" "),
            "data-pair": key,
            onclick: () => {
              this.state.pendingPair = [better, worse];
              this.render();
            },
          },
          row ? categoryLabel(row.lo, row.hi) : "·",
        );
        tr.appendChild(cell);
      }
      body.push(tr);
    }

    const table = el("table", { className: "judgment-grid" }, ...body);
    const parts = el("div", {}, table);
    if (this.state.pendingPair) parts.appendChild(this.renderPalette());
    parts.appendChild(
      el("button", { className: "submit-judgments", onclick: () => void this.submit() },
        "Save judgments"),
    );
    return parts;
  }

  private renderPalette(): HTMLElement {
    const [better, worse] = this.state.pendingPair!;
    const buttons = PALETTE.map((entry) =>
      el(
        "button",
        {
          className: "palette-option",
          "data-lo": entry.lo,
          "data-hi": entry.hi,
          onclick: () => {
            this.setJudgment(better, worse, entry.lo, entry.hi);
            this.render();
          },
        },
        entry.label,
      ),
    );
    buttons.push(
      el(
        "button",
        {
          className: "palette-clear",
          onclick: () => {
            this.clearJudgment(better, worse);
            this.render();
          },
        },
        "clear",
      ),
    );
    return el(
      "div",
      { className: "palette" },
      el("span", {}, `${better} over ${worse}: `),
      ...buttons,
    );
  }

  private renderScale(): HTMLElement {
    if (!this.scale) {
      return el("div", { className: "scale-empty" }, "No scale derived yet.");
    }
    const rows = this.elements.map((element) => {
      const value = this.scale!.value[element];
      const bar = el("div", { className: "scale-bar" });
      bar.style.width = `${value * 100}%`;
      return el(
        "div",
        { className: "scale-row", "data-element": element },
        el("span", { className: "scale-label" }, element),
        el("span", { className: "scale-value" }, fmt(value)),
        el("div", { className: "scale-track" }, bar),
      );
    });
    return el("div", { className: "scale-bars" },
      el("h3", {}, "Current scale"), ...rows);
  }
}
