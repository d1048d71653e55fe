/** Typed loaders for the cvteleport figure-data exports. */

import { readFileSync } from "node:fs";
import { z } from "zod";

export class ExportError extends Error {}

const axis = z.object({
  min: z.number(),
  max: z.number(),
  step: z.number().positive(),
  count: z.number().int().positive(),
});

const pair = z.tuple([z.number(), z.number()]);
const flagMatrix = z.array(z.array(z.union([z.literal(0), z.literal(1)])));

const fig1Schema = z.object({
  schema_version: z.literal(1),
  kind: z.enum(["fig1a", "fig1b"]),
  params: z.object({
    direction: z.enum(["ba", "ab"]),
    lambda: z.number(),
    s_ba: z.number(),
    s_ab: z.number(),
    threshold: z.number(),
    optimal_clamped: z.boolean(),
    tau_axis: axis,
    y_axis: axis,
  }),
  data: z.object({
    grid: z.object({
      tau: z.array(z.number()),
      y: z.array(z.number()),
      f_avg: z.array(z.array(z.number().nullable())),
      unphysical: flagMatrix,
      eb: flagMatrix,
      sb_ba: flagMatrix,
      sb_ab: flagMatrix,
      accessible: flagMatrix,
      secure: flagMatrix,
    }),
    overlays: z.object({
      cp_boundary: z.array(pair),
      eb_boundary: z.array(pair),
      sb_boundary: z.array(pair),
      accessible_boundary: z.array(pair),
      no_cloning: z.array(pair),
      optimal_curve: z.array(
        z.tuple([z.number(), z.number(), z.number(), z.boolean()]),
      ),
      points: z.object({ optimal: pair, boundary: pair }),
    }),
  }),
});

const fig2Schema = z.object({
  schema_version: z.literal(1),
  kind: z.enum(["fig2a", "fig2b"]),
  params: z.object({
    direction: z.enum(["ba", "ab"]),
    lambda_axis: axis,
    s_axis: axis,
  }),
  data: z.object({
    grid: z.object({
      lambda: z.array(z.number()),
      s: z.array(z.number()),
      f_opt: z.array(z.array(z.number())),
      threshold: z.array(z.number()),
      secure: flagMatrix,
    }),
    overlays: z.object({
      secure_boundary: z.array(pair),
    }),
  }),
});

export type Fig1Export = z.infer<typeof fig1Schema>;
export type Fig2Export = z.infer<typeof fig2Schema>;

function readPayload(path: string): unknown {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new ExportError(`cannot read ${path}: ${(err as Error).message}`);
  }
  if (text.trim() === "") {
    throw new ExportError(`empty input file: ${path}`);
  }
  try {
    return JSON.parse(text);
  } catch {
    throw new ExportError(`${path} is not valid JSON`);
  }
}

function parseWith<T>(schema: z.ZodType<T>, path: string): T {
  const result = schema.safeParse(readPayload(path));
  if (!result.success) {
    const issue = result.error.issues[0];
    const where = issue.path.join(".") || "(root)";
    throw new ExportError(`${path}: ${where}: ${issue.message}`);
  }
  return result.data;
}

export function loadFig1(path: string): Fig1Export {
  return parseWith(fig1Schema, path);
}

export function loadFig2(path: string): Fig2Export {
  return parseWith(fig2Schema, path);
}
