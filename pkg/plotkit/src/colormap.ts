/** Small viridis-like colormap with banded (filled-contour) quantization. */

export type Rgb = [number, number, number];

// anchor stops sampled from the standard viridis ramp
const STOPS: Rgb[] = [
  [68, 1, 84],
  [72, 40, 120],
  [62, 74, 137],
  [49, 104, 142],
  [38, 130, 142],
  [31, 158, 137],
  [53, 183, 121],
  [109, 205, 89],
  [180, 222, 44],
  [253, 231, 37],
];

export function colorAt(t: number): Rgb {
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (STOPS.length - 1);
  const lo = Math.floor(pos);
  const hi = Math.min(STOPS.length - 1, lo + 1);
  const frac = pos - lo;
  return [0, 1, 2].map((i) =>
    Math.round(STOPS[lo][i] + frac * (STOPS[hi][i] - STOPS[lo][i])),
  ) as Rgb;
}

/** Snap t in [0,1] to the midpoint of one of `levels` equal bands. */
export function quantize(t: number, levels: number): number {
  if (levels <= 1) return 0.5;
  const band = Math.min(levels - 1, Math.floor(t * levels));
  return (band + 0.5) / levels;
}
