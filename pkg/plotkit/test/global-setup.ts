/** Generates export fixtures once, through the real cvteleport CLI. */

import { execFileSync } from "node:child_process";
import { existsSync, mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

const HERE = fileURLToPath(new URL(".", import.meta.url));
export const FIXTURES = join(HERE, "fixtures");

const COARSE = [
  "--x-min", "0", "--x-max", "2", "--x-step", "0.05",
  "--y-min", "0", "--y-max", "2", "--y-step", "0.05",
];

const CASES: [string, string[]][] = [
  // no axis flags: the genuine default exports
  ["fig1a.json", ["--kind", "fig1a"]],
  ["fig1b.json", ["--kind", "fig1b"]],
  ["fig2a.json", ["--kind", "fig2a"]],
  ["fig2b.json", ["--kind", "fig2b"]],
  // CSV path and degenerate styling stay coarse
  ["fig1a.csv", ["--kind", "fig1a", ...COARSE]],
  [
    "fig2b.csv",
    ["--kind", "fig2b", "--x-min", "0.2", "--x-max", "1", "--x-step", "0.2",
     "--y-min", "0", "--y-max", "1", "--y-step", "0.25"],
  ],
  // degenerate styling case: enormous alphabet, tiny budget, and a view
  // window where the no-cloning contour drops below the physical region
  [
    "fig1a-degenerate.json",
    ["--kind", "fig1a", "--lambda", "50", "--steering", "0.01",
     "--x-min", "1.2", "--x-max", "2", "--x-step", "0.05",
     "--y-min", "0", "--y-max", "2", "--y-step", "0.05"],
  ],
];

export default function setup(): void {
  mkdirSync(FIXTURES, { recursive: true });
  for (const [name, args] of CASES) {
    const path = join(FIXTURES, name);
    if (existsSync(path)) continue;
    execFileSync("cvteleport", ["contour", ...args, "--out", path], {
      stdio: ["ignore", "ignore", "inherit"],
    });
  }
  writeFileSync(join(FIXTURES, "empty.json"), "");
  writeFileSync(join(FIXTURES, "empty.csv"), "\n");
  writeFileSync(
    join(FIXTURES, "bad-version.json"),
    JSON.stringify({ schema_version: 2, kind: "fig1a" }),
  );
}
