import { ApiClient } from "./api";
import { clear, el, fmt } from "./dom";
import { ViewState } from "./state";
import type { RankingResponse } from "./types";

/**
 * Ranking table plus a budget what-if slider. The slider only ever issues
 * GET requests with a budget override; nothing is written back unless the
 * user explicitly applies the override, which replaces the whole document
 * under optimistic versioning.
 */
export class RankingView {
  private report: RankingResponse | null = null;
  private error: string | null = null;

  constructor(
    private container: HTMLElement,
    private client: ApiClient,
    private state: ViewState,
  ) {}

  sliderMax(): number {
    const budgets = this.state.doc?.adaptation?.budgets ?? {};
    const top = Math.max(0, ...Object.values(budgets));
    return top > 0 ? Math.ceil(top * 2) : 100;
  }

  async refresh(): Promise<void> {
    if (this.state.projectId === null) throw new Error("no project loaded");
    this.error = null;
    try {
      this.report = await this.client.ranking(
        this.state.projectId,
        this.state.whatIfBudget ?? undefined,
      );
    } catch (err) {
      this.report = null;
      this.error = err instanceof Error ? err.message : String(err);
    }
    this.render();
  }

  async setWhatIf(budget: number | null): Promise<void> {
    this.state.whatIfBudget = budget;
    await this.refresh();
  }

  // Persist the override into every candidate's budget, so the stored
  // ranking matches what the slider showed.
  async applyBudget(): Promise<void> {
    const budget = this.state.whatIfBudget;
    if (budget === null || this.state.projectId === null || !this.state.doc) return;
    const doc = JSON.parse(JSON.stringify(this.state.doc));
    const budgets: Record<string, number> = {};
    for (const candidate of doc.candidates) budgets[candidate.id] = budget;
    doc.adaptation.budgets = budgets;
    try {
      const response = await this.client.replaceProject(
        this.state.projectId,
        this.state.version,
        doc,
      );
      this.state.accept(response.version, doc);
      this.state.whatIfBudget = null;
    } catch (error) {
      if (!this.state.absorbConflict(error)) throw error;
    }
    await this.refresh();
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
    if (this.error) {
      this.container.appendChild(
        el("div", { className: "banner banner-error" }, this.error),
      );
    }
    this.container.appendChild(this.renderSlider());
    if (this.report) this.container.appendChild(this.renderTable(this.report));
  }

  private renderSlider(): HTMLElement {
    const active = this.state.whatIfBudget;
    const slider = el("input", {
      className: "budget-slider",
      type: "range",
      min: 0,
      max: this.sliderMax(),
      step: 1,
      value: active ?? this.sliderMax(),
      oninput: (event: Event) => {
        const raw = (event.target as HTMLInputElement).value;
        void this.setWhatIf(Number(raw));
      },
    }) as HTMLInputElement;
    const label = active === null
      ? "Stored budgets"
      : `What-if budget ${fmt(active)} (not saved)`;
    const controls = el(
      "div",
      { className: "whatif" },
      el("span", { className: "whatif-label" }, label),
      slider,
    );
    if (active !== null) {
      controls.appendChild(
        el("button", { className: "apply-budget", onclick: () => void this.applyBudget() },
          "Apply to project"),
      );
      controls.appendChild(
        el("button", { className: "reset-budget", onclick: () => void this.setWhatIf(null) },
          "Back to stored"),
      );
    }
    return controls;
  }

  private renderTable(report: RankingResponse): HTMLElement {
    const leaves = Object.keys(report.ranking.weights);
    const head = el(
      "tr", {},
      el("th", {}, "candidate"),
      el("th", {}, "overall"),
      ...leaves.map((leaf) => el("th", {}, leaf)),
    );
    const rows = report.ranking.entries.map((entry) =>
      el(
        "tr",
        { className: "ranking-row", "data-candidate": entry.candidate_id },
        el("td", {}, entry.candidate_id),
        el("td", { className: "overall" }, fmt(entry.overall, 4)),
        ...leaves.map((leaf) =>
          el(
            "td",
            { className: "leaf-value", "data-leaf": leaf, title: entry.provenance[leaf] },
            fmt(entry.values[leaf], 4),
          ),
        ),
      ),
    );
    const weightRow = el(
      "tr",
      { className: "weights-row" },
      el("td", {}, "weights"),
      el("td", {}, ""),
      ...leaves.map((leaf) =>
        el("td", { className: "leaf-weight", "data-leaf": leaf },
          fmt(report.ranking.weights[leaf], 4)),
      ),
    );
    return el("table", { className: "ranking-table" }, head, ...rows, weightRow);
  }
}
