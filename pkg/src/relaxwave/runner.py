"""Experiment driver: execute configs, collect records, write CSVs."""

from __future__ import annotations

import math
import os
from dataclasses import asdict

import numpy as np

from .catalog import Setup
from .config import RunConfig, resolve
from .core import IU, BoundaryKind, ConfigError, Field
from .diagnostics import (RunRecord, amplitude_error, eoc, l2_error,
                          total_energy)
from .initial_data import prepare_initial
from .oracles import TAU_MINUS, TAU_PLUS, dsw_envelope, exact_traveling_wave
from .scheme import run as scheme_run


def _record_times(t_final: float, cadence: float | None) -> np.ndarray:
    if cadence is None:
        return np.array([t_final])
    n = int(math.floor(t_final / cadence + 1e-9))
    times = cadence * np.arange(1, n + 1)
    return np.unique(np.append(times[times < t_final], t_final))


def _exact_fn(setup: Setup):
    if setup.preset.oracle != "traveling_wave" or setup.profile.speed is None:
        return None
    period = (setup.grid.length
              if setup.boundary is BoundaryKind.PERIODIC else None)

    def exact(x, t):
        return exact_traveling_wave(setup.profile, x, t, period=period)
    return exact


def execute(config: RunConfig, force_reference: bool = False) -> RunRecord:
    """Run one experiment and return its full record."""
    setup = resolve(config)
    field = prepare_initial(setup.profile, setup.grid, setup.params,
                            setup.flux, boundary=setup.boundary)
    exact = _exact_fn(setup)
    target_amp = float(np.max(field.cells[IU]))
    record = RunRecord(config=asdict(config), x=setup.grid.centers)

    def scalars_at(fld: Field, dt: float, max_speed: float) -> dict:
        e = total_energy(fld, setup.params, setup.flux)
        row = {"time": fld.time, "dt": dt, "max_speed": max_speed,
               "total_energy": e,
               "e_a": amplitude_error(fld, target_amp)}
        if exact is not None:
            row["e_l2_paper"] = l2_error(fld, exact)
            row["e_l2_weighted"] = l2_error(fld, exact, weighted=True)
        else:
            row["e_l2_paper"] = math.nan
            row["e_l2_weighted"] = math.nan
        return row

    record.times.append(0.0)
    record.snapshots.append(field.cells.copy())
    record.scalars.append(scalars_at(field, 0.0, 0.0))

    def callback(fld: Field, rep) -> None:
        record.times.append(fld.time)
        record.snapshots.append(fld.cells.copy())
        record.scalars.append(scalars_at(fld, rep.dt, rep.max_speed))

    scheme_run(field, setup.params, setup.flux, setup.t_final,
               record_times=_record_times(setup.t_final, config.cadence),
               callback=callback, force_reference=force_reference)
    e0 = record.scalars[0]["total_energy"]
    for row in record.scalars:
        row["energy_error"] = row["total_energy"] - e0
    return record


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def write_snapshots_csv(record: RunRecord, path: str) -> None:
    with open(path, "w") as fh:
        fh.write("time,cell_index,x,u,psi,w,p\n")
        for t, snap in zip(record.times, record.snapshots):
            for i in range(snap.shape[1]):
                fh.write(",".join([_fmt(t), str(i), _fmt(record.x[i]),
                                   _fmt(snap[0, i]), _fmt(snap[1, i]),
                                   _fmt(snap[2, i]), _fmt(snap[3, i])]) + "\n")


def write_scalars_csv(record: RunRecord, path: str) -> None:
    cols = ["time", "dt", "max_speed", "total_energy", "energy_error",
            "e_a", "e_l2_paper", "e_l2_weighted"]
    with open(path, "w") as fh:
        fh.write(",".join(cols) + "\n")
        for row in record.scalars:
            fh.write(",".join(_fmt(row[c]) for c in cols) + "\n")


def write_eoc_csv(rows, path: str) -> None:
    """rows: iterables of (axis_value, error_name, error_value, order)."""
    with open(path, "w") as fh:
        fh.write("axis_value,error_name,error_value,order\n")
        for axis_value, error_name, error_value, order in rows:
            fh.write(",".join([_fmt(axis_value), error_name,
                               _fmt(error_value),
                               "" if order is None else _fmt(order)]) + "\n")


def write_envelope_csv(record: RunRecord, path: str) -> None:
    """Asymptotic envelope A-(x/t), A+(x/t) sampled at the final snapshot's
    cell centers inside the self-similar fan."""
    t = record.times[-1]
    if t <= 0:
        raise ConfigError("envelope output needs t_final > 0")
    with open(path, "w") as fh:
        fh.write("time,x,a_minus,a_plus\n")
        for x in record.x:
            xi = x / t
            if TAU_MINUS <= xi <= TAU_PLUS:
                am, ap = dsw_envelope(xi)
                fh.write(",".join([_fmt(t), _fmt(x), _fmt(am),
                                   _fmt(ap)]) + "\n")


def write_outputs(record: RunRecord, out_dir: str,
                  envelope: bool = False) -> None:
    os.makedirs(out_dir, exist_ok=True)
    write_snapshots_csv(record, os.path.join(out_dir, "snapshots.csv"))
    write_scalars_csv(record, os.path.join(out_dir, "scalars.csv"))
    if envelope:
        write_envelope_csv(record, os.path.join(out_dir, "envelope.csv"))


_AXES = ("alpha", "beta", "n_cells", "alpha_with_scaled_beta")


def sweep_configs(base: RunConfig, axis: str, values) -> list:
    """Derive one RunConfig per axis value."""
    if axis not in _AXES:
        raise ConfigError(f"sweep axis must be one of {_AXES}")
    out = []
    for v in values:
        kw = asdict(base)
        if axis == "alpha":
            kw["alpha"] = float(v)
        elif axis == "beta":
            kw["beta"] = float(v)
        elif axis == "n_cells":
            kw["n_cells"] = int(v)
        else:
            kw["alpha"] = float(v)
            kw["beta"] = "auto"
        out.append(RunConfig(**kw))
    return out


def _sweep_scale(axis: str, value: float) -> float:
    # h must shrink with increasing resolution/stiffness for positive orders
    if axis in ("alpha", "alpha_with_scaled_beta"):
        return 1.0 / value
    if axis == "n_cells":
        return 1.0 / value
    return value


def sweep(base: RunConfig, axis: str, values, workers: int = 1,
          force_reference: bool = False) -> tuple:
    """Run the axis sweep; returns (records, eoc_rows).

    eoc_rows follow the eoc.csv schema with one block per error metric:
    the L-infinity-in-time energy error always, the final-time l2 error
    when the case has a traveling-wave oracle.
    """
    configs = sweep_configs(base, axis, values)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(execute, configs))
    else:
        records = [execute(c, force_reference=force_reference)
                   for c in configs]

    rows = []
    metrics = {"energy_linf": [
        max(abs(s["energy_error"]) for s in r.scalars) for r in records]}
    if not math.isnan(records[0].scalars[-1]["e_l2_paper"]):
        metrics["e_l2_paper"] = [r.scalars[-1]["e_l2_paper"]
                                 for r in records]
    for name, errs in metrics.items():
        hs = [_sweep_scale(axis, v) for v in values]
        orders = [None]
        valid = all(e > 0 for e in errs)
        if valid and len(errs) >= 2:
            orders += eoc(list(zip(hs, errs)))
        else:
            orders = [None] * len(errs)
        for v, e, o in zip(values, errs, orders):
            rows.append((v, name, e, o))
    return records, rows
