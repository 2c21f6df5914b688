import yargs from "yargs";

import { EmptyCsvError, SCHEMAS, SchemaError } from "./schemas.js";
import { PlotSpec, render } from "./render.js";

function defaultOutput(input: string): string {
  return input.replace(/\.csv$/i, "") + ".svg";
}

/** Argument handling split from the bin entry so tests can call it in-process. */
export async function cli(argv: string[]): Promise<number> {
  let spec: PlotSpec | undefined;
  const parser = yargs(argv)
    .scriptName("plotkit")
    .usage("$0 plot <kind> --in FILE [--out FILE]")
    .command(
      "plot <kind>",
      "render a scenario CSV to an SVG figure",
      (cmd) =>
        cmd
          .positional("kind", { choices: Object.keys(SCHEMAS) as (keyof typeof SCHEMAS)[], demandOption: true })
          .option("in", { type: "string", demandOption: true, describe: "input CSV path" })
          .option("out", { type: "string", describe: "output SVG path (default: input with .svg)" })
          .option("title", { type: "string" })
          .option("x-label", { type: "string" })
          .option("y-label", { type: "string" }),
      (args) => {
        spec = {
          input: args.in,
          kind: args.kind,
          output: args.out ?? defaultOutput(args.in),
          title: args.title,
          xLabel: args["x-label"],
          yLabel: args["y-label"],
        };
      },
    )
    .demandCommand(1)
    .strict()
    .exitProcess(false)
    .fail((message, error) => {
      throw error ?? new UsageError(message);
    });

  try {
    await parser.parse();
  } catch (error) {
    console.error(`plotkit: ${(error as Error).message}`);
    return 2;
  }
  if (spec === undefined) {
    return 2;
  }

  try {
    const result = render(spec);
    console.log(`${result.output}: ${result.rows} rows, series [${result.series.join(", ")}]`);
    return 0;
  } catch (error) {
    if (error instanceof SchemaError || error instanceof EmptyCsvError) {
      console.error(`plotkit: ${error.message}`);
      return 1;
    }
    if ((error as NodeJS.ErrnoException).code !== undefined) {
      console.error(`plotkit: ${(error as Error).message}`);
      return 1;
    }
    throw error;
  }
}

class UsageError extends Error {}
