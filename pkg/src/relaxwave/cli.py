"""Command line front door.

Subcommands: run, sweep, cases, check.  Exit codes: 0 success, 2 config
error, 3 numerical failure (non-finite state), 4 oracle/domain error.
"""

from __future__ import annotations

import os
import sys
from dataclasses import replace

import click

from .catalog import case_names, get_preset
from .config import parse_config
from .core import BlowupError, ConfigError, DomainError
from .runner import execute, sweep as run_sweep, write_eoc_csv, write_outputs

EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_ORACLE = 4


def _load(config_path: str):
    try:
        with open(config_path) as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}")


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    if isinstance(exc, ConfigError):
        sys.exit(EXIT_CONFIG)
    if isinstance(exc, BlowupError):
        sys.exit(EXIT_NUMERIC)
    sys.exit(EXIT_ORACLE)


@click.group()
def main() -> None:
    """Relaxation-system solver for dispersive scalar balance laws."""


@main.command("run")
@click.argument("config_path", type=click.Path())
@click.option("--out", "out_dir", default=None, help="output directory")
@click.option("--cadence", type=float, default=None,
              help="output interval in simulated time")
def run_cmd(config_path: str, out_dir: str | None,
            cadence: float | None) -> None:
    """Execute one experiment and write snapshots.csv / scalars.csv."""
    try:
        config = _load(config_path)
        if cadence is not None:
            config = replace(config, cadence=cadence)
        if out_dir is not None:
            config = replace(config, directory=out_dir)
        record = execute(config)
        write_outputs(record, config.directory,
                      envelope=config.case == "riemann_dsw")
        final = record.scalars[-1]
        click.echo(f"t = {record.times[-1]:g}  "
                   f"energy_error = {final['energy_error']:.6g}  "
                   f"-> {config.directory}")
    except (ConfigError, BlowupError, DomainError) as exc:
        _fail(exc)


@main.command("sweep")
@click.argument("config_path", type=click.Path())
@click.option("--axis", required=True,
              type=click.Choice(["alpha", "beta", "n_cells",
                                 "alpha_with_scaled_beta"]))
@click.option("--values", required=True,
              help="comma-separated axis values")
@click.option("--out", "out_dir", default=None, help="output directory")
@click.option("--workers", type=int, default=1)
@click.option("--cadence", type=float, default=None)
def sweep_cmd(config_path: str, axis: str, values: str,
              out_dir: str | None, workers: int,
              cadence: float | None) -> None:
    """Run a parameter sweep and write eoc.csv plus per-run outputs."""
    try:
        config = _load(config_path)
        if cadence is not None:
            config = replace(config, cadence=cadence)
        if out_dir is not None:
            config = replace(config, directory=out_dir)
        vals = [float(v) for v in values.split(",") if v.strip()]
        if not vals:
            raise ConfigError("--values must list at least one number")
        records, rows = run_sweep(config, axis, vals, workers=workers)
        os.makedirs(config.directory, exist_ok=True)
        for v, record in zip(vals, records):
            tag = f"{axis}_{v:g}".replace(".", "p").replace("-", "m")
            write_outputs(record, os.path.join(config.directory, tag))
        write_eoc_csv(rows, os.path.join(config.directory, "eoc.csv"))
        for v, name, e, o in rows:
            order = "" if o is None else f"  order = {o:.3f}"
            click.echo(f"{axis} = {v:g}  {name} = {e:.6g}{order}")
    except (ConfigError, BlowupError, DomainError) as exc:
        _fail(exc)


@main.command("cases")
def cases_cmd() -> None:
    """List the catalog presets with their default parameters."""
    for name in case_names():
        p = get_preset(name)
        click.echo(f"{name:15s} flux={p.flux_name:8s} "
                   f"I=[{p.domain[0]:g},{p.domain[1]:g}] N={p.n_cells} "
                   f"T={p.t_final:g} alpha={p.alpha:g} beta={p.beta:g} "
                   f"gamma={p.gamma:g} eps={p.epsilon:g} "
                   f"bc={p.boundary.value}")


@main.command("check")
def check_cmd() -> None:
    """Fast self-test of the analytic oracles."""
    import math as m

    from .oracles import (dsw_envelope, dsw_modulus, elliptic_E, elliptic_K,
                          jacobi_dn)
    try:
        checks = [
            ("K(0) = pi/2", abs(elliptic_K(0.0) - m.pi / 2) < 1e-12),
            ("E(1) = 1", abs(elliptic_E(1.0) - 1.0) < 1e-12),
            ("dn(1, 1) = sech(1)",
             abs(jacobi_dn(1.0, 1.0) - 1.0 / m.cosh(1.0)) < 1e-10),
            ("modulus(-1) = 0", abs(dsw_modulus(-1.0)) < 1e-8),
            ("modulus(2/3) = 1", abs(dsw_modulus(2.0 / 3.0) - 1.0) < 1e-8),
            ("A+ - A- = 2 s^2 at xi = 0",
             abs((lambda e, s: e[1] - e[0] - 2 * s * s)(
                 dsw_envelope(0.0), dsw_modulus(0.0))) < 1e-10),
        ]
    except DomainError as exc:
        _fail(exc)
        return
    bad = False
    for label, ok in checks:
        click.echo(f"{'ok  ' if ok else 'FAIL'} {label}")
        bad = bad or not ok
    if bad:
        sys.exit(EXIT_ORACLE)


if __name__ == "__main__":
    main()
