import { describe, expect, it } from "vitest";

import { EmptyCsvError, SchemaError, columnAccessors, loadTable, seriesNames, toNumber } from "../src/schemas.js";
import { fixture, rawCsv } from "./helpers.js";

describe("loadTable", () => {
  it("keeps header and rows in file order", () => {
    const table = loadTable(fixture("fig4-deployment.csv"));
    const raw = rawCsv("fig4-deployment.csv");
    expect(table.columns).toEqual(["scheme", "subcarrier_index", "freq_hz", "rel_gain"]);
    expect(table.rows).toEqual(raw.rows);
    expect(table.rows.length).toBe(4 * 64);
  });

  it("rejects a zero-byte file", () => {
    expect(() => loadTable(fixture("empty.csv"))).toThrow(EmptyCsvError);
  });

  it("rejects a header with no data rows", () => {
    expect(() => loadTable(fixture("header-only.csv"))).toThrow(EmptyCsvError);
  });
});

describe("columnAccessors", () => {
  it("yields one accessor per schema column", () => {
    const table = loadTable(fixture("power-table.csv"));
    const [structure, , , , power] = columnAccessors(table, "bars");
    expect(structure(table.rows[0])).toBe("ps-only");
    expect(power(table.rows[2])).toBe("7290.0");
  });

  it("names every missing column in one diagnostic", () => {
    const table = loadTable(fixture("missing-freq.csv"));
    expect(() => columnAccessors(table, "lines")).toThrow(/missing columns: freq_hz/);
  });

  it("reports a kind pointed at the wrong schema", () => {
    const table = loadTable(fixture("power-table.csv"));
    try {
      columnAccessors(table, "lines");
      expect.unreachable();
    } catch (error) {
      expect(error).toBeInstanceOf(SchemaError);
      const message = (error as Error).message;
      for (const column of ["scheme", "subcarrier_index", "freq_hz", "rel_gain"]) {
        expect(message).toContain(column);
      }
    }
  });

  it("tolerates extra columns", () => {
    const table = loadTable(fixture("fig5-convergence.csv"));
    // heatmap schema is a superset of what lines needs except the names differ
    expect(() => columnAccessors(table, "heatmap")).not.toThrow();
  });
});

describe("seriesNames", () => {
  it("lists distinct values in first-appearance order", () => {
    const table = loadTable(fixture("sweep.csv"));
    const [scheme] = columnAccessors(table, "lines");
    expect(seriesNames(table, scheme)).toEqual(["ideal", "b1", "b2", "b3", "b4"]);
  });
});

describe("toNumber", () => {
  it("parses finite values and rejects the rest", () => {
    expect(toNumber("3.5", "x")).toBe(3.5);
    expect(() => toNumber("many", "x")).toThrow(/column x/);
    expect(() => toNumber("", "x")).toThrow(SchemaError);
  });
});
