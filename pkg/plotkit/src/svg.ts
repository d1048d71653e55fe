/** SVG assembly: scales, axes, and element helpers. */

import { colorAt, quantize } from "./colormap.js";
import { pngDataUri } from "./png.js";

export interface Frame {
  width: number;
  height: number;
  x0: number;
  y0: number;
  x1: number;
  y1: number;
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export function makeFrame(
  width: number,
  height: number,
  xMin: number,
  xMax: number,
  yMin: number,
  yMax: number,
): Frame {
  return {
    width,
    height,
    x0: 70,
    y0: 42,
    x1: width - 28,
    y1: height - 58,
    xMin,
    xMax,
    yMin,
    yMax,
  };
}

export function px(f: Frame, x: number): number {
  return f.x0 + ((x - f.xMin) / (f.xMax - f.xMin)) * (f.x1 - f.x0);
}

export function py(f: Frame, y: number): number {
  return f.y1 - ((y - f.yMin) / (f.yMax - f.yMin)) * (f.y1 - f.y0);
}

/** Pixel coordinates: fixed two decimals keeps output byte-stable. */
export function fmt(v: number): string {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

function esc(value: string): string {
  return value
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function el(
  tag: string,
  attrs: Record<string, string | number>,
  body = "",
): string {
  const rendered = Object.entries(attrs)
    .map(([k, v]) => ` ${k}="${esc(String(v))}"`)
    .join("");
  return body === ""
    ? `<${tag}${rendered}/>`
    : `<${tag}${rendered}>${body}</${tag}>`;
}

export function polylinePoints(f: Frame, pts: [number, number][]): string {
  return pts.map(([x, y]) => `${fmt(px(f, x))},${fmt(py(f, y))}`).join(" ");
}

/** Raw data-space coordinates, attached so consumers can check geometry. */
export function dataCoords(pts: [number, number][]): string {
  return pts.map(([x, y]) => `${x},${y}`).join(" ");
}

export function overlayLine(
  f: Frame,
  id: string,
  pts: [number, number][],
  style: Record<string, string | number>,
): string {
  if (pts.length < 2) return "";
  return el("polyline", {
    id,
    fill: "none",
    points: polylinePoints(f, pts),
    "data-coords": dataCoords(pts),
    ...style,
  });
}

export function markerPoint(
  f: Frame,
  id: string,
  pt: [number, number],
  style: Record<string, string | number>,
): string {
  return el("circle", {
    id,
    cx: fmt(px(f, pt[0])),
    cy: fmt(py(f, pt[1])),
    r: 4,
    "data-x": String(pt[0]),
    "data-y": String(pt[1]),
    ...style,
  });
}

function tickStep(range: number): number {
  const raw = range / 6;
  const mag = 10 ** Math.floor(Math.log10(raw));
  for (const mult of [1, 2, 2.5, 5, 10]) {
    if (raw <= mult * mag) return mult * mag;
  }
  return 10 * mag;
}

function ticks(lo: number, hi: number): number[] {
  const step = tickStep(hi - lo);
  const out: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-9; v += step) {
    out.push(Math.abs(v) < 1e-12 ? 0 : v);
  }
  return out;
}

function tickLabel(v: number): string {
  return String(Number(v.toPrecision(6)));
}

export function axes(
  f: Frame,
  xLabel: string,
  yLabel: string,
  title: string,
): string {
  const parts: string[] = [];
  parts.push(
    el("rect", {
      x: fmt(f.x0),
      y: fmt(f.y0),
      width: fmt(f.x1 - f.x0),
      height: fmt(f.y1 - f.y0),
      fill: "none",
      stroke: "#000",
      "stroke-width": 1,
    }),
  );
  for (const t of ticks(f.xMin, f.xMax)) {
    const x = fmt(px(f, t));
    parts.push(
      el("line", {
        x1: x, y1: fmt(f.y1), x2: x, y2: fmt(f.y1 + 5),
        stroke: "#000", "stroke-width": 1,
      }),
      el(
        "text",
        { x, y: fmt(f.y1 + 19), "text-anchor": "middle", "font-size": 12 },
        tickLabel(t),
      ),
    );
  }
  for (const t of ticks(f.yMin, f.yMax)) {
    const y = fmt(py(f, t));
    parts.push(
      el("line", {
        x1: fmt(f.x0 - 5), y1: y, x2: fmt(f.x0), y2: y,
        stroke: "#000", "stroke-width": 1,
      }),
      el(
        "text",
        {
          x: fmt(f.x0 - 9), y: fmt(py(f, t) + 4),
          "text-anchor": "end", "font-size": 12,
        },
        tickLabel(t),
      ),
    );
  }
  parts.push(
    el(
      "text",
      {
        x: fmt((f.x0 + f.x1) / 2), y: fmt(f.y1 + 42),
        "text-anchor": "middle", "font-size": 14,
      },
      xLabel,
    ),
    el(
      "text",
      {
        x: 18, y: fmt((f.y0 + f.y1) / 2), "text-anchor": "middle",
        "font-size": 14,
        transform: `rotate(-90 18 ${fmt((f.y0 + f.y1) / 2)})`,
      },
      yLabel,
    ),
    el(
      "text",
      {
        x: fmt((f.x0 + f.x1) / 2), y: 24, "text-anchor": "middle",
        "font-size": 15, "font-weight": "bold",
      },
      title,
    ),
  );
  return parts.join("");
}

/**
 * Banded heatmap raster embedded as a PNG image element.
 *
 * One pixel per grid cell; null cells are painted white. The value
 * domain [lo, hi] is split into `levels` equal color bands.
 */
export function heatmap(
  f: Frame,
  id: string,
  values: (number | null)[][],
  lo: number,
  hi: number,
  levels: number,
): string {
  const nx = values.length;
  const ny = values[0].length;
  const span = hi - lo > 1e-12 ? hi - lo : 1.0;
  const rgba = new Uint8Array(nx * ny * 4);
  for (let row = 0; row < ny; row += 1) {
    const jy = ny - 1 - row;
    for (let i = 0; i < nx; i += 1) {
      const off = (row * nx + i) * 4;
      const v = values[i][jy];
      if (v === null) {
        rgba.set([255, 255, 255, 255], off);
      } else {
        const t = quantize(Math.min(1, Math.max(0, (v - lo) / span)), levels);
        rgba.set([...colorAt(t), 255], off);
      }
    }
  }
  return el("image", {
    id,
    x: fmt(px(f, f.xMin)),
    y: fmt(py(f, f.yMax)),
    width: fmt(f.x1 - f.x0),
    height: fmt(f.y1 - f.y0),
    preserveAspectRatio: "none",
    "image-rendering": "pixelated",
    "data-raster": `${nx}x${ny}`,
    href: pngDataUri(nx, ny, rgba),
  });
}

export function makeTitle(
  kind: string,
  params: [string, number][],
): string {
  if (params.length === 0) return kind;
  const rendered = params
    .map(([k, v]) => `${k}=${Number(v.toPrecision(6))}`)
    .join("  ");
  return `${kind}   ${rendered}`;
}

export function document(f: Frame, body: string): string {
  const clip = el(
    "clipPath",
    { id: "plot-clip" },
    el("rect", {
      x: fmt(f.x0),
      y: fmt(f.y0),
      width: fmt(f.x1 - f.x0),
      height: fmt(f.y1 - f.y0),
    }),
  );
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${f.width}" ` +
    `height="${f.height}" viewBox="0 0 ${f.width} ${f.height}" ` +
    `font-family="sans-serif">` +
    el("rect", { width: f.width, height: f.height, fill: "#fff" }) +
    `<defs>${clip}</defs>` +
    body +
    `</svg>\n`
  );
}
