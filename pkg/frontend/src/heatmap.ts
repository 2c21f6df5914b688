import { MARGIN, frame } from "./chart.js";
import { el, round, svgDocument, text } from "./svg.js";
import { Table, columnAccessors, seriesNames, toNumber } from "./schemas.js";

export interface HeatmapLabels {
  title: string;
  xLabel: string;
  yLabel: string;
}

/** Piecewise-linear three-stop color ramp over normalized gain. */
export function rampColor(t: number): string {
  const stops: [number, number, number][] = [[13, 8, 135], [204, 71, 120], [240, 249, 33]];
  const clamped = Math.min(1, Math.max(0, t));
  const segment = clamped < 0.5 ? 0 : 1;
  const local = (clamped - segment * 0.5) * 2;
  const mix = stops[segment].map((c, i) => Math.round(c + (stops[segment + 1][i] - c) * local));
  return `rgb(${mix[0]},${mix[1]},${mix[2]})`;
}

function appearanceIndex(values: string[]): Map<string, number> {
  const order = new Map<string, number>();
  for (const value of values) {
    if (!order.has(value)) {
      order.set(value, order.size);
    }
  }
  return order;
}

/**
 * One panel per distinct `variant` value; inside a panel every CSV row
 * becomes exactly one cell at (angle column, subcarrier row). Cell color
 * encodes gain normalized over the whole file so panels share a scale.
 */
export function renderHeatmap(table: Table, labels: HeatmapLabels): string {
  const [variant, sub, , angle, gain] = columnAccessors(table, "heatmap");
  const names = seriesNames(table, variant);

  const gains = table.rows.map((row) => toNumber(gain(row), "gain"));
  const lo = Math.min(...gains);
  const hi = Math.max(...gains);
  const norm = (g: number) => (hi === lo ? 0.5 : (g - lo) / (hi - lo));

  const panelGap = 34;
  const panelHeight = 180;
  const f = frame(760, MARGIN.top + MARGIN.bottom + panelHeight * names.length + panelGap * (names.length - 1));

  const panels = names.map((name, p) => {
    const indices = table.rows.flatMap((row, r) => (variant(row) === name ? [r] : []));
    const cols = appearanceIndex(indices.map((r) => angle(table.rows[r])));
    const lines = appearanceIndex(indices.map((r) => sub(table.rows[r])));
    const cellW = f.plotWidth / cols.size;
    const cellH = panelHeight / lines.size;
    const top = MARGIN.top + p * (panelHeight + panelGap);

    const cells = indices.map((r) => {
      const row = table.rows[r];
      return el("rect", {
        x: round(MARGIN.left + cols.get(angle(row))! * cellW),
        y: round(top + lines.get(sub(row))! * cellH),
        width: round(cellW + 0.35),
        height: round(cellH + 0.35),
        fill: rampColor(norm(gains[r])),
      });
    });

    const angleKeys = [...cols.keys()];
    return el(
      "g",
      { class: "panel", "data-variant": name, "data-rows": indices.length, "data-subcarriers": lines.size },
      [
        ...cells,
        text(MARGIN.left, top - 7, name, { "font-size": 12 }),
        text(MARGIN.left, top + panelHeight + 14, angleKeys[0], { "font-size": 10 }),
        text(MARGIN.left + f.plotWidth, top + panelHeight + 14, angleKeys[angleKeys.length - 1], {
          "font-size": 10,
          "text-anchor": "end",
        }),
      ],
    );
  });

  return svgDocument(f.width, f.height, [
    text(MARGIN.left + f.plotWidth / 2, 22, labels.title, { "font-size": 15, "text-anchor": "middle" }),
    el("g", { class: "panels", "data-series-count": names.length, "data-rows": table.rows.length }, panels),
    text(MARGIN.left + f.plotWidth / 2, f.height - 16, labels.xLabel, { "font-size": 13, "text-anchor": "middle" }),
    el("g", { transform: `translate(16 ${MARGIN.top + (f.height - MARGIN.top - MARGIN.bottom) / 2}) rotate(-90)` }, [
      text(0, 0, labels.yLabel, { "font-size": 13, "text-anchor": "middle" }),
    ]),
  ]);
}
