#!/usr/bin/env node
/** Command line entry point: read figure-spec JSON files, emit SVG. */

import * as fs from "node:fs";
import * as path from "node:path";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { parseFigureSpec } from "./schema.js";
import { renderFigure } from "./render.js";

export function main(argv: string[]): number {
  const args = yargs(argv)
    .usage("$0 <spec..>", "render figure specs to SVG", (y) =>
      y.positional("spec", {
        describe: "figure spec JSON file(s)",
        type: "string",
        array: true,
        demandOption: true,
      }),
    )
    .option("out", {
      type: "string",
      describe: "output directory (default: alongside each spec)",
    })
    .strict()
    .exitProcess(false)
    .parseSync();

  const specs = args.spec as unknown as string[];
  for (const specPath of specs) {
    let svg: string;
    let spec;
    try {
      spec = parseFigureSpec(fs.readFileSync(specPath, "utf8"));
      svg = renderFigure(spec, path.dirname(path.resolve(specPath)));
    } catch (err) {
      process.stderr.write(`${specPath}: ${(err as Error).message}\n`);
      return 2;
    }
    const outDir = args.out ?? path.dirname(path.resolve(specPath));
    fs.mkdirSync(outDir, { recursive: true });
    const outPath = path.join(outDir, spec.output);
    fs.writeFileSync(outPath, svg);
    process.stdout.write(`wrote ${outPath}\n`);
  }
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js")) {
  process.exit(main(hideBin(process.argv)));
}
