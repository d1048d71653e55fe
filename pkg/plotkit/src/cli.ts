/** Shared command-line driver for the two render entry points. */

import { writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { FIG1_CSV_HEADER, RenderOptions, renderFig1, renderFig1Csv } from "./fig1.js";
import { FIG2_CSV_HEADER, renderFig2, renderFig2Csv } from "./fig2.js";
import { ExportError, loadFig1, loadFig2 } from "./export.js";
import { loadCsv } from "./csv.js";

const USAGE: Record<string, string> = {
  fig1: "usage: render-fig1 --input <fig1a|fig1b export (.json|.csv)> --out <file.svg> [--width N] [--height N] [--levels N]",
  fig2: "usage: render-fig2 --input <fig2a|fig2b export (.json|.csv)> --out <file.svg> [--width N] [--height N] [--levels N]",
};

function positiveInt(raw: string | undefined, name: string): number | undefined {
  if (raw === undefined) return undefined;
  const value = Number(raw);
  if (!Number.isInteger(value) || value <= 0) {
    throw new ExportError(`--${name} must be a positive integer, got ${raw}`);
  }
  return value;
}

export function runCli(which: "fig1" | "fig2", argv: string[]): number {
  let input: string;
  let out: string;
  let opts: RenderOptions;
  try {
    const { values } = parseArgs({
      args: argv,
      options: {
        input: { type: "string", short: "i" },
        out: { type: "string", short: "o" },
        width: { type: "string" },
        height: { type: "string" },
        levels: { type: "string" },
      },
    });
    if (!values.input || !values.out) {
      throw new Error("both --input and --out are required");
    }
    input = values.input;
    out = values.out;
    opts = {
      width: positiveInt(values.width, "width"),
      height: positiveInt(values.height, "height"),
      levels: positiveInt(values.levels, "levels"),
    };
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n${USAGE[which]}\n`);
    return 2;
  }

  try {
    let svg: string;
    if (input.toLowerCase().endsWith(".csv")) {
      svg =
        which === "fig1"
          ? renderFig1Csv(loadCsv(input, FIG1_CSV_HEADER), opts)
          : renderFig2Csv(loadCsv(input, FIG2_CSV_HEADER), opts);
    } else {
      svg =
        which === "fig1"
          ? renderFig1(loadFig1(input), opts)
          : renderFig2(loadFig2(input), opts);
    }
    writeFileSync(out, svg, "utf8");
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
  return 0;
}
