import { MARGIN, axisBottom, axisLeft, frame, legend, title } from "./chart.js";
import { PALETTE, el, linearScale, round, svgDocument } from "./svg.js";
import { Table, columnAccessors, seriesNames, toNumber } from "./schemas.js";

export interface LineLabels {
  title: string;
  xLabel: string;
  yLabel: string;
}

/**
 * One polyline per distinct `scheme` value: x = freq_hz, y = rel_gain.
 * Rows are consumed in file order, so each polyline's point sequence is
 * exactly the CSV's row sequence for that series.
 */
export function renderLines(table: Table, labels: LineLabels): string {
  const [scheme, , freq, rel] = columnAccessors(table, "lines");
  const names = seriesNames(table, scheme);

  const xs = table.rows.map((row) => toNumber(freq(row), "freq_hz"));
  const ys = table.rows.map((row) => toNumber(rel(row), "rel_gain"));
  const f = frame();
  const x = linearScale([Math.min(...xs), Math.max(...xs)], [MARGIN.left, MARGIN.left + f.plotWidth]);
  const y = linearScale([Math.min(...ys), Math.max(...ys)], [MARGIN.top + f.plotHeight, MARGIN.top]);

  const polylines = names.map((name, i) => {
    const points: string[] = [];
    table.rows.forEach((row, r) => {
      if (scheme(row) === name) {
        points.push(`${round(x(xs[r]))},${round(y(ys[r]))}`);
      }
    });
    return el("polyline", {
      points: points.join(" "),
      fill: "none",
      stroke: PALETTE[i % PALETTE.length],
      "stroke-width": 1.5,
      "data-series": name,
      "data-points": points.length,
    });
  });

  return svgDocument(f.width, f.height, [
    title(f, labels.title),
    axisBottom(f, x, labels.xLabel),
    axisLeft(f, y, labels.yLabel),
    el("g", { class: "series", "data-rows": table.rows.length, "data-series-count": names.length }, polylines),
    legend(names, names.map((_, i) => PALETTE[i % PALETTE.length])),
  ]);
}
