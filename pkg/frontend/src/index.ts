export { EmptyCsvError, SCHEMAS, SchemaError, loadTable, seriesNames } from "./schemas.js";
export type { PlotKind, Table } from "./schemas.js";
export { render } from "./render.js";
export type { PlotSpec, RenderResult } from "./render.js";
export { renderLines } from "./lines.js";
export { renderHeatmap } from "./heatmap.js";
export { renderBars } from "./bars.js";
export { cli } from "./cli.js";
