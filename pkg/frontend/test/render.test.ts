import { existsSync, mkdtempSync, readFileSync, rmSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";

import { afterAll, describe, expect, it } from "vitest";

import { render } from "../src/render.js";
import { fixture, rawCsv } from "./helpers.js";

const workDir = mkdtempSync(join(tmpdir(), "plotkit-"));
afterAll(() => rmSync(workDir, { recursive: true, force: true }));

describe("render end to end", () => {
  it("renders the three figure CSVs with counts matching the files exactly", () => {
    const cases = [
      { input: "fig4-deployment.csv", kind: "lines" as const, series: ["1", "2", "3", "4"] },
      { input: "fig5-convergence.csv", kind: "heatmap" as const, series: ["ps-only", "td16"] },
      { input: "fig6-broadening.csv", kind: "heatmap" as const, series: ["ps-only", "td16", "td32"] },
    ];
    for (const { input, kind, series } of cases) {
      const output = join(workDir, input.replace(".csv", ".svg"));
      const result = render({ input: fixture(input), kind, output });
      expect(result.rows).toBe(rawCsv(input).rows.length);
      expect(result.series).toEqual(series);
      const svg = readFileSync(output, "utf-8");
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg).toContain(`data-rows="${result.rows}"`);
    }
  });

  it("writes nothing when the CSV is empty", () => {
    const output = join(workDir, "never.svg");
    expect(() => render({ input: fixture("empty.csv"), kind: "lines", output })).toThrow();
    expect(() =>
      render({ input: fixture("header-only.csv"), kind: "lines", output }),
    ).toThrow(/no data rows/);
    expect(existsSync(output)).toBe(false);
  });

  it("writes nothing on a schema mismatch", () => {
    const output = join(workDir, "never2.svg");
    expect(() =>
      render({ input: fixture("missing-freq.csv"), kind: "lines", output }),
    ).toThrow(/missing columns: freq_hz/);
    expect(existsSync(output)).toBe(false);
  });

  it("honors custom labels", () => {
    const output = join(workDir, "labeled.svg");
    render({
      input: fixture("power-table.csv"),
      kind: "bars",
      output,
      title: "Budget",
      yLabel: "mW consumed",
    });
    const svg = readFileSync(output, "utf-8");
    expect(svg).toContain(">Budget</text>");
    expect(svg).toContain(">mW consumed</text>");
  });
});
