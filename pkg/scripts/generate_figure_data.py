#!/usr/bin/env python3
"""Produce the CSV bundles consumed by the plotting frontend.

Runs a trimmed version of each showcase experiment and writes the
standard snapshots/scalars/eoc/envelope CSV files, one directory per
figure.  Everything is deterministic; re-running overwrites in place.

Usage:
    python3 scripts/generate_figure_data.py [--out DIR] [--fast]
"""

import argparse
import os
import sys

from relaxwave.config import RunConfig
from relaxwave.runner import (
    execute,
    sweep,
    write_eoc_csv,
    write_outputs,
)


def soliton_snapshot(out_dir: str, fast: bool) -> None:
    cfg = RunConfig(case="soliton1", t_final=1.0 if fast else 4.0,
                    cadence=0.5)
    rec = execute(cfg)
    write_outputs(rec, os.path.join(out_dir, "soliton1"))


def two_soliton_series(out_dir: str, fast: bool) -> None:
    cfg = RunConfig(case="soliton2", t_final=2.0 if fast else 5.0,
                    alpha=2e3, beta=1e-6, cadence=0.1)
    rec = execute(cfg)
    write_outputs(rec, os.path.join(out_dir, "soliton2"))


def two_soliton_eoc(out_dir: str, fast: bool) -> None:
    base = RunConfig(case="soliton2", t_final=1.0 if fast else 5.0,
                     alpha=2e3, beta=1e-6, cadence=0.05)
    values = [250, 500, 1000] if fast else [250, 500, 1000, 2000]
    records, rows = sweep(base, "n_cells", values)
    dest = os.path.join(out_dir, "soliton2_eoc")
    os.makedirs(dest, exist_ok=True)
    write_eoc_csv(rows, os.path.join(dest, "eoc.csv"))


def riemann_fan(out_dir: str, fast: bool) -> None:
    cfg = RunConfig(case="riemann_dsw", x_left=-4.0, x_right=1.0,
                    n_cells=2000 if fast else 4000,
                    t_final=0.4 if fast else 0.75, cadence=0.05)
    rec = execute(cfg)
    write_outputs(rec, os.path.join(out_dir, "riemann_dsw"), envelope=True)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="out/figure-data")
    ap.add_argument("--fast", action="store_true",
                    help="smaller runs for smoke testing")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for job in (soliton_snapshot, two_soliton_series, two_soliton_eoc,
                riemann_fan):
        print(f"running {job.__name__} ...", flush=True)
        job(args.out, args.fast)
    print(f"figure data written under {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
