/** Typed readers for the solver's CSV contracts.
 *
 * Schema violations raise with an explicit column-level message so a
 * mismatched file is diagnosed rather than silently mis-plotted.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

export interface SnapshotRow {
  time: number;
  cell_index: number;
  x: number;
  u: number;
  psi: number;
  w: number;
  p: number;
}

export interface ScalarRow {
  time: number;
  dt: number;
  max_speed: number;
  total_energy: number;
  energy_error: number;
  e_a: number;
  e_l2_paper: number;
  e_l2_weighted: number;
}

export interface EocRow {
  axis_value: number;
  error_name: string;
  error_value: number;
  order: number | null;
}

export interface EnvelopeRow {
  time: number;
  x: number;
  a_minus: number;
  a_plus: number;
}

const SNAPSHOT_COLUMNS = ["time", "cell_index", "x", "u", "psi", "w", "p"];
const SCALAR_COLUMNS = [
  "time",
  "dt",
  "max_speed",
  "total_energy",
  "energy_error",
  "e_a",
  "e_l2_paper",
  "e_l2_weighted",
];
const EOC_COLUMNS = ["axis_value", "error_name", "error_value", "order"];
const ENVELOPE_COLUMNS = ["time", "x", "a_minus", "a_plus"];

function parseRows(path: string, expected: string[]): Record<string, string>[] {
  const text = readFileSync(path, "utf8");
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`${path}: parse error at row ${e.row}: ${e.message}`);
  }
  const got = parsed.meta.fields ?? [];
  for (const col of expected) {
    if (!got.includes(col)) {
      throw new Error(
        `${path}: missing column '${col}' (found: ${got.join(", ")})`,
      );
    }
  }
  for (const col of got) {
    if (!expected.includes(col)) {
      throw new Error(`${path}: unexpected column '${col}'`);
    }
  }
  return parsed.data;
}

function num(path: string, row: number, col: string, raw: string): number {
  const v = Number(raw);
  if (raw === "" || Number.isNaN(v)) {
    throw new Error(`${path}: row ${row}, column '${col}': not a number: '${raw}'`);
  }
  return v;
}

export function readSnapshots(path: string): SnapshotRow[] {
  return parseRows(path, SNAPSHOT_COLUMNS).map((r, i) => ({
    time: num(path, i, "time", r.time),
    cell_index: num(path, i, "cell_index", r.cell_index),
    x: num(path, i, "x", r.x),
    u: num(path, i, "u", r.u),
    psi: num(path, i, "psi", r.psi),
    w: num(path, i, "w", r.w),
    p: num(path, i, "p", r.p),
  }));
}

export function readScalars(path: string): ScalarRow[] {
  return parseRows(path, SCALAR_COLUMNS).map((r, i) => ({
    time: num(path, i, "time", r.time),
    dt: num(path, i, "dt", r.dt),
    max_speed: num(path, i, "max_speed", r.max_speed),
    total_energy: num(path, i, "total_energy", r.total_energy),
    energy_error: num(path, i, "energy_error", r.energy_error),
    // oracle columns may be nan for cases without an exact solution
    e_a: Number(r.e_a),
    e_l2_paper: Number(r.e_l2_paper),
    e_l2_weighted: Number(r.e_l2_weighted),
  }));
}

export function readEoc(path: string): EocRow[] {
  return parseRows(path, EOC_COLUMNS).map((r, i) => ({
    axis_value: num(path, i, "axis_value", r.axis_value),
    error_name: r.error_name,
    error_value: num(path, i, "error_value", r.error_value),
    order: r.order === "" ? null : num(path, i, "order", r.order),
  }));
}

export function readEnvelope(path: string): EnvelopeRow[] {
  return parseRows(path, ENVELOPE_COLUMNS).map((r, i) => ({
    time: num(path, i, "time", r.time),
    x: num(path, i, "x", r.x),
    a_minus: num(path, i, "a_minus", r.a_minus),
    a_plus: num(path, i, "a_plus", r.a_plus),
  }));
}

/** Distinct snapshot times in file order. */
export function snapshotTimes(rows: SnapshotRow[]): number[] {
  const seen: number[] = [];
  for (const r of rows) {
    if (seen.length === 0 || seen[seen.length - 1] !== r.time) {
      if (!seen.includes(r.time)) seen.push(r.time);
    }
  }
  return seen;
}

/** Rows of the snapshot closest to the requested time (default: last). */
export function selectSnapshot(
  rows: SnapshotRow[],
  time?: number,
): SnapshotRow[] {
  const times = snapshotTimes(rows);
  if (times.length === 0) throw new Error("snapshot file has no rows");
  let pick = times[times.length - 1];
  if (time !== undefined) {
    pick = times.reduce((a, b) =>
      Math.abs(b - time) < Math.abs(a - time) ? b : a,
    );
  }
  return rows.filter((r) => r.time === pick);
}
