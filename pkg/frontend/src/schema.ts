/** Figure specification: which kind of plot, which CSV inputs, styling. */

import { z } from "zod";

export const FIGURE_KINDS = [
  "snapshot",
  "xt_diagram",
  "energy_series",
  "eoc_loglog",
  "envelope_overlay",
] as const;

export const figureSpecSchema = z
  .object({
    kind: z.enum(FIGURE_KINDS),
    inputs: z
      .object({
        snapshots: z.string().optional(),
        scalars: z.string().optional(),
        eoc: z.string().optional(),
        envelope: z.string().optional(),
      })
      .strict(),
    styling: z
      .object({
        title: z.string().optional(),
        xlabel: z.string().optional(),
        ylabel: z.string().optional(),
        xlim: z.tuple([z.number(), z.number()]).optional(),
        ylim: z.tuple([z.number(), z.number()]).optional(),
        field: z.enum(["u", "psi", "w", "p"]).optional(),
        time: z.number().optional(),
      })
      .strict()
      .default({}),
    output: z.string(),
  })
  .strict();

export type FigureSpec = z.infer<typeof figureSpecSchema>;

/** Which CSV inputs each figure kind requires. */
export const REQUIRED_INPUTS: Record<
  (typeof FIGURE_KINDS)[number],
  (keyof FigureSpec["inputs"])[]
> = {
  snapshot: ["snapshots"],
  xt_diagram: ["snapshots"],
  energy_series: ["scalars"],
  eoc_loglog: ["eoc"],
  envelope_overlay: ["snapshots", "envelope"],
};

export function parseFigureSpec(text: string): FigureSpec {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new Error(`figure spec is not valid JSON: ${(err as Error).message}`);
  }
  const spec = figureSpecSchema.parse(raw);
  for (const key of REQUIRED_INPUTS[spec.kind]) {
    if (!spec.inputs[key]) {
      throw new Error(`figure kind '${spec.kind}' requires inputs.${key}`);
    }
  }
  return spec;
}
