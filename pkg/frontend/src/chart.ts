import { Scale, el, formatTick, round, text, ticks } from "./svg.js";

export const MARGIN = { left: 72, right: 24, top: 42, bottom: 54 };

export interface Frame {
  width: number;
  height: number;
  plotWidth: number;
  plotHeight: number;
}

export function frame(width = 720, height = 480): Frame {
  return {
    width,
    height,
    plotWidth: width - MARGIN.left - MARGIN.right,
    plotHeight: height - MARGIN.top - MARGIN.bottom,
  };
}

export function axisBottom(f: Frame, scale: Scale, label: string): string {
  const y = MARGIN.top + f.plotHeight;
  const parts = [
    el("line", { x1: MARGIN.left, y1: round(y), x2: MARGIN.left + f.plotWidth, y2: round(y), stroke: "black" }),
  ];
  for (const value of ticks(scale.domain)) {
    const x = scale(value);
    parts.push(el("line", { x1: round(x), y1: round(y), x2: round(x), y2: round(y + 5), stroke: "black" }));
    parts.push(text(x, y + 18, formatTick(value), { "font-size": 11, "text-anchor": "middle" }));
  }
  parts.push(text(MARGIN.left + f.plotWidth / 2, y + 38, label, { "font-size": 13, "text-anchor": "middle" }));
  return el("g", { class: "axis-x" }, parts);
}

export function axisLeft(f: Frame, scale: Scale, label: string): string {
  const x = MARGIN.left;
  const parts = [
    el("line", { x1: x, y1: MARGIN.top, x2: x, y2: MARGIN.top + f.plotHeight, stroke: "black" }),
  ];
  for (const value of ticks(scale.domain)) {
    const y = scale(value);
    parts.push(el("line", { x1: round(x - 5), y1: round(y), x2: x, y2: round(y), stroke: "black" }));
    parts.push(text(x - 8, y + 4, formatTick(value), { "font-size": 11, "text-anchor": "end" }));
  }
  parts.push(
    el("g", { transform: `translate(16 ${MARGIN.top + f.plotHeight / 2}) rotate(-90)` }, [
      text(0, 0, label, { "font-size": 13, "text-anchor": "middle" }),
    ]),
  );
  return el("g", { class: "axis-y" }, parts);
}

export function title(f: Frame, content: string): string {
  return text(MARGIN.left + f.plotWidth / 2, 22, content, {
    "font-size": 15,
    "text-anchor": "middle",
  });
}

export function legend(names: string[], colors: string[]): string {
  const parts: string[] = [];
  names.forEach((name, i) => {
    const y = MARGIN.top + 8 + i * 16;
    parts.push(el("rect", { x: MARGIN.left + 8, y: round(y - 8), width: 14, height: 8, fill: colors[i] }));
    parts.push(text(MARGIN.left + 26, y, name, { "font-size": 11 }));
  });
  return el("g", { class: "legend" }, parts);
}
