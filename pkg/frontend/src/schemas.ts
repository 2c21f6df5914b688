import { readFileSync } from "fs";
import Papa from "papaparse";

/** One parsed CSV: header in file order, rows as raw strings, in file order. */
export interface Table {
  columns: string[];
  rows: string[][];
}

/** Column layout each plot kind consumes. The first column discriminates series. */
export const SCHEMAS = {
  lines: ["scheme", "subcarrier_index", "freq_hz", "rel_gain"],
  heatmap: ["variant", "subcarrier_index", "freq_hz", "angle_deg", "gain"],
  bars: ["structure", "n_rf", "n_td", "n_ps", "power_mw"],
} as const;

export type PlotKind = keyof typeof SCHEMAS;

export class SchemaError extends Error {}
export class EmptyCsvError extends Error {}

export function loadTable(path: string): Table {
  const text = readFileSync(path, "utf-8");
  if (text.trim() === "") {
    throw new EmptyCsvError(`${path}: CSV is empty`);
  }
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new SchemaError(`${path}: ${parsed.errors[0].message}`);
  }
  const data = parsed.data;
  if (data.length === 0) {
    throw new EmptyCsvError(`${path}: CSV is empty`);
  }
  const columns = data[0];
  const rows = data.slice(1);
  if (rows.length === 0) {
    throw new EmptyCsvError(`${path}: CSV has a header but no data rows`);
  }
  return { columns, rows };
}

/**
 * Check the table against the layout a plot kind needs and return one
 * accessor per schema column. Extra columns are tolerated; missing ones
 * are reported together so the caller sees the full gap at once.
 */
export function columnAccessors(table: Table, kind: PlotKind): ((row: string[]) => string)[] {
  const wanted = SCHEMAS[kind];
  const missing = wanted.filter((name) => !table.columns.includes(name));
  if (missing.length > 0) {
    throw new SchemaError(
      `input does not match the ${kind} schema; missing columns: ${missing.join(", ")}`,
    );
  }
  return wanted.map((name) => {
    const index = table.columns.indexOf(name);
    return (row: string[]) => row[index];
  });
}

/** Distinct values of one column, in first-appearance order. */
export function seriesNames(table: Table, accessor: (row: string[]) => string): string[] {
  const seen: string[] = [];
  for (const row of table.rows) {
    const value = accessor(row);
    if (!seen.includes(value)) {
      seen.push(value);
    }
  }
  return seen;
}

export function toNumber(value: string, column: string): number {
  // Number("") is 0; a blank cell must still be an error
  const n = value.trim() === "" ? NaN : Number(value);
  if (!Number.isFinite(n)) {
    throw new SchemaError(`column ${column} holds a non-numeric value: ${value}`);
  }
  return n;
}
