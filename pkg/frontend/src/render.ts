/** Dispatch a parsed figure spec to its renderer, resolving input paths. */

import * as path from "node:path";

import { FigureSpec } from "./schema.js";
import { readEnvelope, readEoc, readScalars, readSnapshots } from "./csv.js";
import {
  renderEnergySeries,
  renderEnvelopeOverlay,
  renderEocLoglog,
  renderSnapshot,
  renderXtDiagram,
} from "./figures.js";

export function renderFigure(spec: FigureSpec, baseDir: string): string {
  const resolve = (p: string) => path.resolve(baseDir, p);
  switch (spec.kind) {
    case "snapshot":
      return renderSnapshot(readSnapshots(resolve(spec.inputs.snapshots!)), spec.styling);
    case "xt_diagram":
      return renderXtDiagram(readSnapshots(resolve(spec.inputs.snapshots!)), spec.styling);
    case "energy_series":
      return renderEnergySeries(readScalars(resolve(spec.inputs.scalars!)), spec.styling);
    case "eoc_loglog":
      return renderEocLoglog(readEoc(resolve(spec.inputs.eoc!)), spec.styling);
    case "envelope_overlay":
      return renderEnvelopeOverlay(
        readSnapshots(resolve(spec.inputs.snapshots!)),
        readEnvelope(resolve(spec.inputs.envelope!)),
        spec.styling,
      );
  }
}
