import { MARGIN, axisLeft, frame, title } from "./chart.js";
import { PALETTE, el, linearScale, round, svgDocument, text } from "./svg.js";
import { Table, columnAccessors, toNumber } from "./schemas.js";

export interface BarLabels {
  title: string;
  xLabel: string;
  yLabel: string;
}

/**
 * One bar per CSV row, grouped along the x axis by structure name, bar
 * height = power_mw. The raw power string from the CSV is carried on the
 * bar verbatim and printed above it.
 */
export function renderBars(table: Table, labels: BarLabels): string {
  const [structure, , , , power] = columnAccessors(table, "bars");
  const values = table.rows.map((row) => toNumber(power(row), "power_mw"));

  const f = frame();
  const y = linearScale([0, Math.max(...values)], [MARGIN.top + f.plotHeight, MARGIN.top]);
  const slot = f.plotWidth / table.rows.length;
  const barWidth = slot * 0.6;

  const bars = table.rows.map((row, i) => {
    const left = MARGIN.left + i * slot + (slot - barWidth) / 2;
    const topY = y(values[i]);
    const baseY = MARGIN.top + f.plotHeight;
    return el("g", { class: "bar-group" }, [
      el("rect", {
        x: round(left),
        y: round(topY),
        width: round(barWidth),
        height: round(baseY - topY),
        fill: PALETTE[i % PALETTE.length],
        "data-series": structure(row),
        "data-value": power(row),
      }),
      text(left + barWidth / 2, topY - 6, power(row), { "font-size": 11, "text-anchor": "middle" }),
      text(left + barWidth / 2, baseY + 16, structure(row), { "font-size": 11, "text-anchor": "middle" }),
    ]);
  });

  return svgDocument(f.width, f.height, [
    title(f, labels.title),
    axisLeft(f, y, labels.yLabel),
    el("g", { class: "series", "data-rows": table.rows.length }, bars),
    text(MARGIN.left + f.plotWidth / 2, MARGIN.top + f.plotHeight + 38, labels.xLabel, {
      "font-size": 13,
      "text-anchor": "middle",
    }),
  ]);
}
