import { spawnSync } from "child_process";
import { existsSync, mkdtempSync, rmSync } from "fs";
import { tmpdir } from "os";
import { dirname, join } from "path";
import { fileURLToPath } from "url";

import { afterAll, afterEach, describe, expect, it, vi } from "vitest";

import { cli } from "../src/cli.js";
import { fixture } from "./helpers.js";

const workDir = mkdtempSync(join(tmpdir(), "plotkit-cli-"));
afterAll(() => rmSync(workDir, { recursive: true, force: true }));
afterEach(() => vi.restoreAllMocks());

function quiet() {
  return {
    out: vi.spyOn(console, "log").mockImplementation(() => {}),
    err: vi.spyOn(console, "error").mockImplementation(() => {}),
  };
}

describe("plot command", () => {
  it("renders and reports the output path with counts", async () => {
    const { out } = quiet();
    const output = join(workDir, "power.svg");
    const code = await cli(["plot", "bars", "--in", fixture("power-table.csv"), "--out", output]);
    expect(code).toBe(0);
    expect(existsSync(output)).toBe(true);
    expect(out.mock.calls[0][0]).toContain("3 rows");
    expect(out.mock.calls[0][0]).toContain("ps-only, sparse-td, per-antenna-td");
  });

  it("defaults the output path to the input with .svg", async () => {
    quiet();
    const input = join(workDir, "fig4-deployment.csv");
    spawnSync("cp", [fixture("fig4-deployment.csv"), input]);
    const code = await cli(["plot", "lines", "--in", input]);
    expect(code).toBe(0);
    expect(existsSync(join(workDir, "fig4-deployment.svg"))).toBe(true);
  });

  it("exits 1 on an empty CSV and writes nothing", async () => {
    const { err } = quiet();
    const output = join(workDir, "empty.svg");
    const code = await cli(["plot", "lines", "--in", fixture("empty.csv"), "--out", output]);
    expect(code).toBe(1);
    expect(existsSync(output)).toBe(false);
    expect(err.mock.calls[0][0]).toContain("empty");
  });

  it("exits 1 with the missing-column diagnostic on a schema mismatch", async () => {
    const { err } = quiet();
    const code = await cli([
      "plot", "lines", "--in", fixture("missing-freq.csv"), "--out", join(workDir, "x.svg"),
    ]);
    expect(code).toBe(1);
    expect(err.mock.calls[0][0]).toContain("missing columns: freq_hz");
  });

  it("exits 1 when the input file does not exist", async () => {
    quiet();
    const code = await cli(["plot", "lines", "--in", join(workDir, "ghost.csv")]);
    expect(code).toBe(1);
  });

  it("exits 2 on an unknown kind", async () => {
    quiet();
    expect(await cli(["plot", "pie", "--in", fixture("power-table.csv")])).toBe(2);
  });

  it("exits 2 when --in is missing", async () => {
    quiet();
    expect(await cli(["plot", "bars"])).toBe(2);
  });

  it("exits 2 with no command", async () => {
    quiet();
    expect(await cli([])).toBe(2);
  });
});

describe("built binary", () => {
  const bin = join(dirname(fileURLToPath(import.meta.url)), "..", "dist", "bin.js");

  it.skipIf(!existsSync(bin))("runs the compiled entry point", () => {
    const output = join(workDir, "from-bin.svg");
    const proc = spawnSync(
      "node", [bin, "plot", "heatmap", "--in", fixture("fig6-broadening.csv"), "--out", output],
      { encoding: "utf-8" },
    );
    expect(proc.status).toBe(0);
    expect(proc.stdout).toContain("from-bin.svg");
    expect(existsSync(output)).toBe(true);
  });
});
