import { readFileSync } from "fs";
import { dirname, join } from "path";
import { fileURLToPath } from "url";

export const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixture(name: string): string {
  return join(FIXTURES, name);
}

/** Independent CSV reader for cross-checks; fixtures contain no quoting. */
export function rawCsv(name: string): { columns: string[]; rows: string[][] } {
  const lines = readFileSync(fixture(name), "utf-8").trim().split("\n");
  return { columns: lines[0].split(","), rows: lines.slice(1).map((line) => line.split(",")) };
}

export function attrValues(svg: string, tag: string, attr: string): string[] {
  // match per element, then require a space before the attr name so e.g.
  // "points" never aliases onto "data-points"
  const out: string[] = [];
  const needle = new RegExp(` ${attr}="([^"]*)"`);
  for (const element of svg.match(new RegExp(`<${tag} [^>]*`, "g")) ?? []) {
    const found = element.match(needle);
    if (found) {
      out.push(found[1]);
    }
  }
  return out;
}

export function countTags(svg: string, tag: string): number {
  return (svg.match(new RegExp(`<${tag}[ />]`, "g")) ?? []).length;
}

/** Inner markup of every <g class="panel"> block (panels hold no nested g). */
export function panelBlocks(svg: string): string[] {
  return svg.match(/<g class="panel".*?<\/g>/g) ?? [];
}
