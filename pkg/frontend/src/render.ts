import { writeFileSync } from "fs";

import { renderBars } from "./bars.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLines } from "./lines.js";
import { PlotKind, Table, columnAccessors, loadTable, seriesNames } from "./schemas.js";

export interface PlotSpec {
  input: string;
  kind: PlotKind;
  output: string;
  title?: string;
  xLabel?: string;
  yLabel?: string;
}

export interface RenderResult {
  output: string;
  rows: number;
  series: string[];
}

const DEFAULT_LABELS: Record<PlotKind, { title: string; xLabel: string; yLabel: string }> = {
  lines: { title: "Relative gain per subcarrier", xLabel: "Frequency (Hz)", yLabel: "Relative gain" },
  heatmap: { title: "Beam pattern per subcarrier", xLabel: "Angle (deg)", yLabel: "Subcarrier" },
  bars: { title: "Analog network power", xLabel: "Structure", yLabel: "Power (mW)" },
};

function renderTable(table: Table, spec: PlotSpec): string {
  const labels = {
    title: spec.title ?? DEFAULT_LABELS[spec.kind].title,
    xLabel: spec.xLabel ?? DEFAULT_LABELS[spec.kind].xLabel,
    yLabel: spec.yLabel ?? DEFAULT_LABELS[spec.kind].yLabel,
  };
  switch (spec.kind) {
    case "lines":
      return renderLines(table, labels);
    case "heatmap":
      return renderHeatmap(table, labels);
    case "bars":
      return renderBars(table, labels);
  }
}

/**
 * Read the CSV, check it against the schema the plot kind consumes, and
 * write one SVG. Nothing is written unless parsing, validation, and
 * rendering all succeed.
 */
export function render(spec: PlotSpec): RenderResult {
  const table = loadTable(spec.input);
  const [discriminator] = columnAccessors(table, spec.kind);
  const svg = renderTable(table, spec);
  writeFileSync(spec.output, svg + "\n", "utf-8");
  return {
    output: spec.output,
    rows: table.rows.length,
    series: seriesNames(table, discriminator),
  };
}
