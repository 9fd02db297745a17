import { clear, el, fmt } from "./dom";
import type { ProjectDoc } from "./types";

// Read-only views over the stored document. Both render numbers exactly as
// the server returned them; no derived quantities are computed here.

export function renderRequirements(container: HTMLElement, doc: ProjectDoc): void {
  clear(container);
  const head = el("tr", {},
    el("th", {}, "id"), el("th", {}, "label"), el("th", {}, "weight"));
  const rows = doc.requirements.map((req) =>
    el(
      "tr",
      { className: "requirement-row", "data-requirement": req.id },
      el("td", {}, req.id),
      el("td", {}, req.label ?? ""),
      el("td", { className: "weight" }, fmt(req.weight, 4)),
    ),
  );
  container.appendChild(el("table", { className: "requirements-table" }, head, ...rows));
}

export function renderGap(container: HTMLElement, doc: ProjectDoc): void {
  clear(container);
  const reqIds = doc.requirements.map((r) => r.id);
  const head = el("tr", {}, el("th", {}, "candidate"),
    ...reqIds.map((rid) => el("th", {}, rid)));
  const rows = doc.candidates.map((candidate) => {
    const levels = doc.satisfaction[candidate.id] ?? {};
    return el(
      "tr",
      { className: "gap-row", "data-candidate": candidate.id },
      el("td", {}, candidate.id),
      ...reqIds.map((rid) =>
        el(
          "td",
          { className: "satisfaction", "data-requirement": rid },
          rid in levels ? fmt(levels[rid]) : "—",
        ),
      ),
    );
  });
  const thresholdRows = reqIds.some((rid) => rid in doc.thresholds)
    ? [el(
        "tr",
        { className: "threshold-row" },
        el("td", {}, "target / worst"),
        ...reqIds.map((rid) => {
          const t = doc.thresholds[rid];
          return el("td", {},
            t ? `${fmt(t.target_level)} / ${fmt(t.worst_acceptable)}` : "—");
        }),
      )]
    : [];
  container.appendChild(
    el("table", { className: "gap-table" }, head, ...rows, ...thresholdRows),
  );
}
