/** CSV export reader: fixed header, numeric cells, empty cell = null. */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

import { ExportError } from "./export.js";

export interface CsvTable {
  header: string[];
  rows: (number | null)[][];
}

export function parseCsv(text: string): CsvTable {
  if (text.trim() === "") {
    throw new ExportError("empty CSV input");
  }
  const parsed = Papa.parse<string[]>(text.trim(), {
    delimiter: ",",
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new ExportError(`CSV parse error: ${parsed.errors[0].message}`);
  }
  const [header, ...body] = parsed.data;
  const rows = body.map((cells, i) => {
    if (cells.length !== header.length) {
      throw new ExportError(
        `CSV row ${i + 2} has ${cells.length} cells, expected ${header.length}`,
      );
    }
    return cells.map((cell) => {
      if (cell === "") return null;
      const value = Number(cell);
      if (Number.isNaN(value)) {
        throw new ExportError(`CSV row ${i + 2}: non-numeric cell "${cell}"`);
      }
      return value;
    });
  });
  return { header, rows };
}

export function loadCsv(path: string, expectedHeader: string[]): CsvTable {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new ExportError(`cannot read ${path}: ${(err as Error).message}`);
  }
  const table = parseCsv(text);
  if (table.header.join(",") !== expectedHeader.join(",")) {
    throw new ExportError(
      `${path}: unexpected columns ${table.header.join(",")}`,
    );
  }
  return table;
}

/** Rebuild a column-major value grid from long-format rows. */
export function gridFromRows(
  table: CsvTable,
  xCol: string,
  yCol: string,
  valueCol: string,
): { x: number[]; y: number[]; values: (number | null)[][] } {
  const xi = table.header.indexOf(xCol);
  const yi = table.header.indexOf(yCol);
  const vi = table.header.indexOf(valueCol);
  if (xi < 0 || yi < 0 || vi < 0) {
    throw new ExportError(`missing column among ${xCol},${yCol},${valueCol}`);
  }
  const xs = [...new Set(table.rows.map((r) => r[xi]))] as number[];
  const ys = [...new Set(table.rows.map((r) => r[yi]))] as number[];
  xs.sort((a, b) => a - b);
  ys.sort((a, b) => a - b);
  const xIndex = new Map(xs.map((v, i) => [v, i]));
  const yIndex = new Map(ys.map((v, i) => [v, i]));
  const values: (number | null)[][] = xs.map(() => ys.map(() => null));
  for (const row of table.rows) {
    values[xIndex.get(row[xi] as number)!][yIndex.get(row[yi] as number)!] =
      row[vi];
  }
  return { x: xs, y: ys, values };
}
