// Invariant panel: every number shown is the service's JSON verbatim; the
// panel never recomputes algebra data client-side.

import { BuildReport, CompareResponse } from "./types.js";

export interface PanelRow {
  label: string;
  value: string;
}

export function reportRows(report: BuildReport): PanelRow[] {
  const rows: PanelRow[] = [
    { label: "dimension", value: String(report.dims.total) },
    { label: "simples", value: String(Object.keys(report.dims.P).length) },
    { label: "|det Cartan|", value: String(report.cartan.det_abs) },
  ];
  const cls = report.classifications as Record<string, unknown>;
  for (const key of ["symmetric", "special_quasi_biserial", "special_biserial",
                     "quasi_biserial", "biserial", "multiserial"]) {
    if (key in cls) rows.push({ label: key, value: JSON.stringify(cls[key]) });
  }
  return rows;
}

export function projectiveLines(report: BuildReport): string[] {
  return Object.entries(report.dims.P)
    .sort(([a], [b]) => (a < b ? -1 : 1))
    .map(([vertex, dim]) => {
      const layers = report.loewy[vertex]
        .map((row) => (row.length > 1 ? `{${row.join(",")}}` : row[0] ?? "-"))
        .join(" / ");
      return `P_${vertex} (dim ${dim}): ${layers}`;
    });
}

export function compareRows(cmp: CompareResponse): PanelRow[] {
  return [
    { label: "dimension", value: `${cmp.left.dimension} vs ${cmp.right.dimension}` },
    { label: "simples", value: `${cmp.left.simples} vs ${cmp.right.simples}` },
    { label: "|det Cartan|",
      value: `${cmp.left.cartan_det_abs} vs ${cmp.right.cartan_det_abs}` },
    { label: "equal", value: String(cmp.equal) },
  ];
}
