import { PNG } from "pngjs";
import { describe, expect, it } from "vitest";

import { colorAt, quantize } from "../src/colormap.js";
import { gridFromRows, parseCsv } from "../src/csv.js";
import { encodePng } from "../src/png.js";
import { fmt } from "../src/svg.js";

describe("csv parsing", () => {
  it("maps empty cells to null and parses numbers", () => {
    const table = parseCsv("a,b\n1,\n0.5,1\n");
    expect(table.header).toEqual(["a", "b"]);
    expect(table.rows).toEqual([[1, null], [0.5, 1]]);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv("a,b\n1\n")).toThrowError(/row 2/);
  });

  it("rejects non-numeric cells", () => {
    expect(() => parseCsv("a\nfoo\n")).toThrowError(/non-numeric/);
  });

  it("rejects empty input", () => {
    expect(() => parseCsv(" \n")).toThrowError(/empty/);
  });

  it("rebuilds a grid from long-format rows", () => {
    const table = parseCsv("x,y,v\n0,0,1\n0,1,2\n1,0,3\n1,1,\n");
    const grid = gridFromRows(table, "x", "y", "v");
    expect(grid.x).toEqual([0, 1]);
    expect(grid.y).toEqual([0, 1]);
    expect(grid.values).toEqual([[1, 2], [3, null]]);
  });
});

describe("colormap", () => {
  it("spans the ramp endpoints", () => {
    expect(colorAt(0)).toEqual([68, 1, 84]);
    expect(colorAt(1)).toEqual([253, 231, 37]);
  });

  it("quantizes to band midpoints", () => {
    expect(quantize(0.0, 20)).toBeCloseTo(0.025, 12);
    expect(quantize(0.999, 20)).toBeCloseTo(0.975, 12);
    expect(quantize(1.0, 20)).toBeCloseTo(0.975, 12);
  });
});

describe("png encoding", () => {
  it("round-trips pixels and is deterministic", () => {
    const rgba = Uint8Array.from([
      255, 0, 0, 255, 0, 255, 0, 255,
      0, 0, 255, 255, 255, 255, 255, 255,
    ]);
    const bytes = encodePng(2, 2, rgba);
    expect(Buffer.compare(bytes, encodePng(2, 2, rgba))).toBe(0);
    const decoded = PNG.sync.read(bytes);
    expect(decoded.width).toBe(2);
    expect(Uint8Array.from(decoded.data)).toEqual(rgba);
  });

  it("rejects a size mismatch", () => {
    expect(() => encodePng(2, 2, new Uint8Array(4))).toThrowError(/raster/);
  });
});

describe("pixel formatting", () => {
  it("avoids negative zero", () => {
    expect(fmt(-0.001)).toBe("0.00");
    expect(fmt(12.3456)).toBe("12.35");
  });
});
