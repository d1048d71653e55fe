import { join } from "node:path";
import { fileURLToPath } from "node:url";

export const FIXTURES = fileURLToPath(new URL("./fixtures", import.meta.url));

export function fixture(name: string): string {
  return join(FIXTURES, name);
}

export function hasElement(svg: string, id: string): boolean {
  return svg.includes(`id="${id}"`);
}

/** Data-space coordinates attached to an overlay element. */
export function coordsOf(svg: string, id: string): [number, number][] {
  const match = svg.match(new RegExp(`id="${id}"[^>]*data-coords="([^"]*)"`));
  if (!match) throw new Error(`no element with id ${id}`);
  return match[1].split(" ").map((token) => {
    const [x, y] = token.split(",").map(Number);
    return [x, y] as [number, number];
  });
}

export function pointOf(svg: string, id: string): [number, number] {
  const match = svg.match(
    new RegExp(`id="${id}"[^>]*data-x="([^"]*)"[^>]*data-y="([^"]*)"`),
  );
  if (!match) throw new Error(`no marker with id ${id}`);
  return [Number(match[1]), Number(match[2])];
}
