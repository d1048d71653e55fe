/** Budget-plane figure: optimal fidelity field and the secure boundary. */

import { CsvTable, gridFromRows } from "./csv.js";
import { Fig2Export } from "./export.js";
import {
  axes,
  document,
  el,
  heatmap,
  makeFrame,
  makeTitle,
  overlayLine,
} from "./svg.js";
import { RenderOptions } from "./fig1.js";

export const FIG2_CSV_HEADER = ["lambda", "s", "f_opt", "threshold", "secure"];

const X_LABEL = "alphabet inverse variance lambda";

function yLabel(direction: "ba" | "ab"): string {
  return direction === "ba" ? "steering budget s_ba" : "steering budget s_ab";
}

export function renderFig2(doc: Fig2Export, opts: RenderOptions = {}): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 560;
  const levels = opts.levels ?? 20;
  const { params, data } = doc;
  const f = makeFrame(
    width, height,
    params.lambda_axis.min, params.lambda_axis.max,
    params.s_axis.min, params.s_axis.max,
  );
  let lo = Infinity;
  let hi = -Infinity;
  for (const column of data.grid.f_opt) {
    for (const v of column) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }

  const body = [
    heatmap(f, "field", data.grid.f_opt, lo, hi, levels),
    `<g clip-path="url(#plot-clip)">`,
    overlayLine(f, "secure-boundary", data.overlays.secure_boundary, {
      stroke: "#000",
      "stroke-width": 1.8,
      "stroke-dasharray": "7 4",
    }),
    `</g>`,
    axes(f, X_LABEL, yLabel(params.direction), makeTitle(doc.kind, [])),
  ].join("");

  const meta = el(
    "g",
    {
      id: "figure",
      "data-kind": doc.kind,
      "data-direction": params.direction,
    },
    body,
  );
  return document(f, meta);
}

/** Field-only rendering from the long-format CSV export. */
export function renderFig2Csv(
  table: CsvTable,
  opts: RenderOptions = {},
): string {
  const { x, y, values } = gridFromRows(table, "lambda", "s", "f_opt");
  const f = makeFrame(
    opts.width ?? 720, opts.height ?? 560,
    x[0], x[x.length - 1], y[0], y[y.length - 1],
  );
  let lo = Infinity;
  let hi = -Infinity;
  for (const column of values) {
    for (const v of column) {
      if (v !== null && v < lo) lo = v;
      if (v !== null && v > hi) hi = v;
    }
  }
  const body =
    heatmap(f, "field", values, lo, hi, opts.levels ?? 20) +
    axes(f, X_LABEL, "steering budget s", "budget plane (CSV field only)");
  return document(f, el("g", { id: "figure" }, body));
}
