import { ApiClient } from "./api";
import { clear, el } from "./dom";
import { renderGap, renderRequirements } from "./gap";
import { JudgmentGrid } from "./judgments";
import { RankingView } from "./ranking";
import { ViewState } from "./state";

const client = new ApiClient(import.meta.env?.VITE_API_BASE ?? "");
const state = new ViewState();

const nav = document.getElementById("nav")!;
const content = document.getElementById("content")!;
const status = document.getElementById("status")!;

async function loadProject(id: string): Promise<void> {
  try {
    state.loadProject(await client.getProject(id));
    status.textContent = `project ${id} v${state.version} (${state.doc!.stage})`;
    renderNav();
    show({ kind: "requirements" });
  } catch (error) {
    status.textContent = error instanceof Error ? error.message : String(error);
  }
}

function renderNav(): void {
  clear(nav);
  if (!state.doc) return;
  const tabs: Array<[string, () => void]> = [
    ["Requirements", () => show({ kind: "requirements" })],
    ["Gap", () => show({ kind: "gap" })],
  ];
  for (const matrixId of Object.keys(state.doc.matrices)) {
    tabs.push([`Judgments: ${matrixId}`, () => show({ kind: "judgments", matrixId })]);
  }
  tabs.push(["Ranking", () => show({ kind: "ranking" })]);
  for (const [label, go] of tabs) {
    nav.appendChild(el("button", { className: "tab", onclick: go }, label));
  }
}

function show(view: ViewState["view"]): void {
  state.view = view;
  state.pendingPair = null;
  clear(content);
  if (!state.doc) return;
  switch (view.kind) {
    case "requirements":
      renderRequirements(content, state.doc);
      break;
    case "gap":
      renderGap(content, state.doc);
      break;
    case "judgments": {
      const grid = new JudgmentGrid(content, client, state, view.matrixId);
      grid.render();
      break;
    }
    case "ranking": {
      const ranking = new RankingView(content, client, state);
      void ranking.refresh();
      break;
    }
  }
}

function boot(): void {
  const input = el("input", {
    className: "project-id",
    placeholder: "project id",
  }) as HTMLInputElement;
  const open = el("button", {
    onclick: () => void loadProject(input.value.trim()),
  }, "Open");
  document.getElementById("loader")!.append(input, open);
}

boot();
