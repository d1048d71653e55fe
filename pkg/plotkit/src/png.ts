/** Deterministic PNG encoding for the heatmap raster. */

import { PNG } from "pngjs";

export function encodePng(
  width: number,
  height: number,
  rgba: Uint8Array,
): Buffer {
  if (rgba.length !== width * height * 4) {
    throw new Error(
      `raster size ${rgba.length} does not match ${width}x${height}`,
    );
  }
  const png = new PNG({ width, height });
  png.data = Buffer.from(rgba);
  return PNG.sync.write(png);
}

export function pngDataUri(width: number, height: number, rgba: Uint8Array): string {
  return `data:image/png;base64,${encodePng(width, height, rgba).toString("base64")}`;
}
