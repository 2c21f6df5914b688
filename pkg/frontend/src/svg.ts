/** Minimal SVG authoring: build elements as strings, no DOM. */

export type Attrs = Record<string, string | number>;

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function el(tag: string, attrs: Attrs, children: string[] = []): string {
  const parts = Object.entries(attrs).map(
    ([key, value]) => `${key}="${escapeXml(String(value))}"`,
  );
  const open = `<${tag}${parts.length ? " " + parts.join(" ") : ""}`;
  if (children.length === 0) {
    return `${open}/>`;
  }
  return `${open}>${children.join("")}</${tag}>`;
}

export function text(x: number, y: number, content: string, attrs: Attrs = {}): string {
  return el("text", { x: round(x), y: round(y), "font-family": "sans-serif", ...attrs }, [
    escapeXml(content),
  ]);
}

export function svgDocument(width: number, height: number, children: string[]): string {
  return el(
    "svg",
    { xmlns: "http://www.w3.org/2000/svg", width, height, viewBox: `0 0 ${width} ${height}` },
    [el("rect", { width, height, fill: "white" }), ...children],
  );
}

/** Fixed-precision coordinate so output is byte-stable across platforms. */
export function round(value: number): string {
  return value.toFixed(2);
}

export const PALETTE = [
  "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0;
  const scale = ((value: number) =>
    span === 0 ? (r0 + r1) / 2 : r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

export function ticks(domain: [number, number], count = 5): number[] {
  const [lo, hi] = domain;
  if (lo === hi) {
    return [lo];
  }
  const rawStep = (hi - lo) / count;
  const magnitude = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 5, 10].map((m) => m * magnitude);
  const step = candidates.find((c) => (hi - lo) / c <= count) ?? candidates[3];
  const start = Math.ceil(lo / step) * step;
  const values: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    values.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return values;
}

export function formatTick(value: number): string {
  if (value !== 0 && (Math.abs(value) >= 1e5 || Math.abs(value) < 1e-3)) {
    return value.toExponential(1);
  }
  return String(Number(value.toPrecision(6)));
}
