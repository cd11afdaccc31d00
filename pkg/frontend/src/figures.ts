/** The five figure kinds, each a pure function from parsed CSV rows to
 * an SVG string.  No numerics beyond axis transforms and one
 * least-squares slope fit for the log-log order annotation. */

import {
  EnvelopeRow,
  ScalarRow,
  SnapshotRow,
  EocRow,
  selectSnapshot,
  snapshotTimes,
} from "./csv.js";
import {
  HEIGHT,
  MARGIN,
  PALETTE,
  Scale,
  SvgCanvas,
  WIDTH,
  fmt,
  linearScale,
  logScale,
  padDomain,
} from "./svg.js";

export interface Styling {
  title?: string;
  xlabel?: string;
  ylabel?: string;
  xlim?: [number, number];
  ylim?: [number, number];
  field?: "u" | "psi" | "w" | "p";
  time?: number;
}

const PLOT_X: [number, number] = [MARGIN.left, WIDTH - MARGIN.right];
const PLOT_Y: [number, number] = [HEIGHT - MARGIN.bottom, MARGIN.top];

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (Number.isFinite(v)) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (lo > hi) throw new Error("no finite values to plot");
  return [lo, hi];
}

function scales(
  xs: number[],
  ys: number[],
  styling: Styling,
): { sx: Scale; sy: Scale } {
  const xd = styling.xlim ?? extent(xs);
  const yd = styling.ylim ?? padDomain(...extent(ys));
  return {
    sx: linearScale(xd, PLOT_X),
    sy: linearScale(yd, PLOT_Y),
  };
}

export function renderSnapshot(rows: SnapshotRow[], styling: Styling): string {
  const field = styling.field ?? "u";
  const snap = selectSnapshot(rows, styling.time);
  const xs = snap.map((r) => r.x);
  const ys = snap.map((r) => r[field]);
  const { sx, sy } = scales(xs, ys, styling);
  const svg = new SvgCanvas(
    styling.title ?? `${field} at t = ${fmt(snap[0].time)}`,
  );
  svg.axes(sx, sy, styling.xlabel ?? "x", styling.ylabel ?? field);
  svg.polyline(xs.map(sx), ys.map(sy), PALETTE[0]);
  return svg.render();
}

/** Two-color diverging map for the space-time diagram. */
function heatColor(v: number, lo: number, hi: number): string {
  const t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
  const r = Math.round(255 * Math.min(1, 2 * t));
  const b = Math.round(255 * Math.min(1, 2 * (1 - t)));
  const g = Math.round(80 + 100 * (1 - Math.abs(2 * t - 1)));
  return `rgb(${r},${g},${b})`;
}

export function renderXtDiagram(rows: SnapshotRow[], styling: Styling): string {
  const field = styling.field ?? "u";
  const times = snapshotTimes(rows);
  if (times.length < 2) {
    throw new Error("xt_diagram needs at least two snapshot times");
  }
  const xs = selectSnapshot(rows, times[0]).map((r) => r.x);
  const values = rows.map((r) => r[field]);
  const [lo, hi] = extent(values);
  const sx = linearScale(styling.xlim ?? extent(xs), PLOT_X);
  const sy = linearScale([times[0], times[times.length - 1]], PLOT_Y);
  const svg = new SvgCanvas(styling.title ?? `${field}(x, t)`);
  const cellW = (PLOT_X[1] - PLOT_X[0]) / xs.length;
  const cellH = (PLOT_Y[0] - PLOT_Y[1]) / times.length;
  for (let k = 0; k < times.length; k++) {
    const snap = selectSnapshot(rows, times[k]);
    // y decreases upward; row k spans one cadence slot
    const yTop = sy(times[k]) - cellH;
    for (let i = 0; i < snap.length; i++) {
      svg.rect(
        sx(snap[i].x) - cellW / 2,
        yTop,
        cellW + 0.5,
        cellH + 0.5,
        heatColor(snap[i][field], lo, hi),
      );
    }
  }
  svg.axes(sx, sy, styling.xlabel ?? "x", styling.ylabel ?? "t");
  svg.text(WIDTH - MARGIN.right, MARGIN.top - 6,
    `${fmt(lo)} .. ${fmt(hi)}`, { anchor: "end", size: 11 });
  return svg.render();
}

export function renderEnergySeries(
  rows: ScalarRow[],
  styling: Styling,
): string {
  const ts = rows.map((r) => r.time);
  const es = rows.map((r) => r.energy_error);
  const { sx, sy } = scales(ts, es, styling);
  const svg = new SvgCanvas(styling.title ?? "total energy drift");
  svg.axes(sx, sy, styling.xlabel ?? "t", styling.ylabel ?? "E(t) - E(0)");
  if (sy.domain[0] < 0 && sy.domain[1] > 0) {
    svg.polyline([PLOT_X[0], PLOT_X[1]], [sy(0), sy(0)], "#999", {
      width: 1,
      dash: "4 3",
    });
  }
  svg.polyline(ts.map(sx), es.map(sy), PALETTE[0]);
  return svg.render();
}

/** Least-squares slope of log10(e) against log10(h). */
export function loglogSlope(hs: number[], es: number[]): number {
  const lx = hs.map(Math.log10);
  const ly = es.map(Math.log10);
  const n = lx.length;
  const mx = lx.reduce((a, b) => a + b, 0) / n;
  const my = ly.reduce((a, b) => a + b, 0) / n;
  let num = 0;
  let den = 0;
  for (let i = 0; i < n; i++) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) ** 2;
  }
  return num / den;
}

export function renderEocLoglog(rows: EocRow[], styling: Styling): string {
  const names = [...new Set(rows.map((r) => r.error_name))];
  const svg = new SvgCanvas(styling.title ?? "convergence");
  const all = rows.filter((r) => r.error_value > 0 && r.axis_value > 0);
  if (all.length === 0) throw new Error("eoc file has no positive errors");
  const sx = logScale(extent(all.map((r) => r.axis_value)), PLOT_X);
  const sy = logScale(extent(all.map((r) => r.error_value)), PLOT_Y);
  svg.axes(sx, sy, styling.xlabel ?? "parameter", styling.ylabel ?? "error");
  const legend: { label: string; color: string }[] = [];
  names.forEach((name, j) => {
    const series = all.filter((r) => r.error_name === name);
    const hs = series.map((r) => r.axis_value);
    const es = series.map((r) => r.error_value);
    const color = PALETTE[j % PALETTE.length];
    svg.polyline(hs.map(sx), es.map(sy), color);
    series.forEach((r) => svg.circle(sx(r.axis_value), sy(r.error_value), 3, color));
    const slope = loglogSlope(hs, es);
    legend.push({ label: `${name}: slope ${fmt(slope)}`, color });
  });
  svg.legend(legend);
  return svg.render();
}

export function renderEnvelopeOverlay(
  snapshots: SnapshotRow[],
  envelope: EnvelopeRow[],
  styling: Styling,
): string {
  const snap = selectSnapshot(snapshots, styling.time);
  const t = snap[0].time;
  const env = envelope.filter((r) => Math.abs(r.time - t) < 1e-12);
  if (env.length === 0) {
    throw new Error(`envelope file has no rows at t = ${fmt(t)}`);
  }
  const xs = snap.map((r) => r.x);
  const ys = snap.map((r) => r.u);
  const { sx, sy } = scales(
    xs,
    ys.concat(env.map((r) => r.a_plus), env.map((r) => r.a_minus)),
    styling,
  );
  const svg = new SvgCanvas(styling.title ?? `oscillation envelope, t = ${fmt(t)}`);
  svg.axes(sx, sy, styling.xlabel ?? "x", styling.ylabel ?? "u");
  svg.polyline(xs.map(sx), ys.map(sy), PALETTE[0], { width: 1 });
  svg.polyline(env.map((r) => sx(r.x)), env.map((r) => sy(r.a_minus)),
    PALETTE[1], { width: 2, dash: "6 3" });
  svg.polyline(env.map((r) => sx(r.x)), env.map((r) => sy(r.a_plus)),
    PALETTE[1], { width: 2, dash: "6 3" });
  svg.legend([
    { label: "computed u", color: PALETTE[0] },
    { label: "asymptotic envelope", color: PALETTE[1], dash: "6 3" },
  ]);
  return svg.render();
}

/** Fraction of snapshot cells inside [a_minus - tol, a_plus + tol],
 * evaluated on the envelope's x-range.  Exported for testing that a
 * rendered overlay actually brackets the oscillations. */
export function envelopeContainment(
  snapshots: SnapshotRow[],
  envelope: EnvelopeRow[],
  tol = 0.1,
  time?: number,
): number {
  const snap = selectSnapshot(snapshots, time);
  const t = snap[0].time;
  const env = envelope.filter((r) => Math.abs(r.time - t) < 1e-12);
  if (env.length === 0) throw new Error("no envelope rows at snapshot time");
  const xs = env.map((r) => r.x);
  const lo = Math.min(...xs);
  const hi = Math.max(...xs);
  let total = 0;
  let inside = 0;
  for (const r of snap) {
    if (r.x < lo || r.x > hi) continue;
    // nearest envelope sample (columns share the solver's cell centers)
    let best = env[0];
    for (const e of env) {
      if (Math.abs(e.x - r.x) < Math.abs(best.x - r.x)) best = e;
    }
    total += 1;
    if (r.u >= best.a_minus - tol && r.u <= best.a_plus + tol) inside += 1;
  }
  if (total === 0) throw new Error("snapshot and envelope do not overlap");
  return inside / total;
}
