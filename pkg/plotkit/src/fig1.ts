/** Channel-plane figure: fidelity field, region masks, boundary overlays. */

import { CsvTable, gridFromRows } from "./csv.js";
import { Fig1Export } from "./export.js";
import {
  Frame,
  axes,
  dataCoords,
  document,
  el,
  heatmap,
  makeFrame,
  makeTitle,
  markerPoint,
  overlayLine,
  polylinePoints,
} from "./svg.js";

export interface RenderOptions {
  width?: number;
  height?: number;
  levels?: number;
}

export const FIG1_CSV_HEADER = [
  "tau", "y", "f_avg", "unphysical", "eb", "sb_ba", "sb_ab", "accessible",
  "secure",
];

const X_LABEL = "transmissivity tau";
const Y_LABEL = "added noise y";

function fieldRange(values: (number | null)[][]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const column of values) {
    for (const v of column) {
      if (v === null) continue;
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (lo > hi) return [0, 1];
  return [lo, hi];
}

/** Region between a boundary polyline and the bottom of the plot. */
function regionBelow(
  f: Frame,
  id: string,
  boundary: [number, number][],
  style: Record<string, string | number>,
): string {
  if (boundary.length < 2) return "";
  const closure: [number, number][] = [
    [f.xMax, f.yMin],
    [f.xMin, f.yMin],
  ];
  return el("polygon", {
    id,
    points: polylinePoints(f, [...boundary, ...closure]),
    "data-coords": dataCoords(boundary),
    "clip-path": "url(#plot-clip)",
    ...style,
  });
}

export function renderFig1(doc: Fig1Export, opts: RenderOptions = {}): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 560;
  const levels = opts.levels ?? 20;
  const { params, data } = doc;
  const f = makeFrame(
    width, height,
    params.tau_axis.min, params.tau_axis.max,
    params.y_axis.min, params.y_axis.max,
  );
  const [lo, hi] = fieldRange(data.grid.f_avg);
  const overlays = data.overlays;

  const curveMain: [number, number][] = [];
  const curveClamped: [number, number][] = [];
  for (const [, tau, y, clamped] of overlays.optimal_curve) {
    (clamped ? curveClamped : curveMain).push([tau, y]);
  }
  if (curveMain.length > 0 && curveClamped.length > 0) {
    // share the junction point so the dotted curve stays connected
    curveClamped.unshift(curveMain[curveMain.length - 1]);
  }

  const body = [
    heatmap(f, "field", data.grid.f_avg, lo, hi, levels),
    regionBelow(f, "mask", overlays.accessible_boundary, {
      fill: "#9a9a9a",
      "fill-opacity": "0.55",
      stroke: "none",
    }),
    regionBelow(f, "unphysical", overlays.cp_boundary, {
      fill: "#fff",
      stroke: "none",
    }),
    `<g clip-path="url(#plot-clip)">`,
    overlayLine(f, "eb-boundary", overlays.eb_boundary, {
      stroke: "#444",
      "stroke-width": 1.2,
    }),
    overlayLine(f, "sb-boundary", overlays.sb_boundary, {
      stroke: "#000",
      "stroke-width": 1.8,
    }),
    overlayLine(f, "no-cloning", overlays.no_cloning, {
      stroke: "#000",
      "stroke-width": 1.5,
      "stroke-dasharray": "7 4",
    }),
    overlayLine(f, "optimal-curve", curveMain, {
      stroke: "#c22",
      "stroke-width": 1.5,
      "stroke-dasharray": "2 3",
    }),
    overlayLine(f, "optimal-curve-clamped", curveClamped, {
      stroke: "#c22",
      "stroke-width": 1.5,
      "stroke-dasharray": "2 6",
      "stroke-opacity": "0.6",
    }),
    `</g>`,
    markerPoint(f, "point-optimal", overlays.points.optimal, {
      fill: "#c22",
      stroke: "#000",
      "stroke-width": 1,
    }),
    markerPoint(f, "point-boundary", overlays.points.boundary, {
      fill: "#fff",
      stroke: "#000",
      "stroke-width": 1.5,
    }),
    axes(
      f, X_LABEL, Y_LABEL,
      makeTitle(doc.kind, [
        ["lambda", params.lambda],
        ["s_ba", params.s_ba],
        ["s_ab", params.s_ab],
      ]),
    ),
  ].join("");

  const meta = el(
    "g",
    {
      id: "figure",
      "data-kind": doc.kind,
      "data-lambda": String(params.lambda),
      "data-s-ba": String(params.s_ba),
      "data-s-ab": String(params.s_ab),
      "data-threshold": String(params.threshold),
    },
    body,
  );
  return document(f, meta);
}

/** Field-only rendering from the long-format CSV export. */
export function renderFig1Csv(
  table: CsvTable,
  opts: RenderOptions = {},
): string {
  const { x, y, values } = gridFromRows(table, "tau", "y", "f_avg");
  const f = makeFrame(
    opts.width ?? 720, opts.height ?? 560,
    x[0], x[x.length - 1], y[0], y[y.length - 1],
  );
  const [lo, hi] = fieldRange(values);
  const body =
    heatmap(f, "field", values, lo, hi, opts.levels ?? 20) +
    axes(f, X_LABEL, Y_LABEL, "channel plane (CSV field only)");
  return document(f, el("g", { id: "figure" }, body));
}
