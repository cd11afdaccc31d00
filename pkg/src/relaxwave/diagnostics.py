"""Scalar observables and convergence analytics."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .core import IU, DomainError, Field, FluxModel, ModelParams
from .model import entropy


@dataclass
class RunRecord:
    """Output of one run: snapshots and per-instant scalars.

    times are strictly increasing, starting at 0 and ending at t_final.
    snapshots[k] is a (4, N) copy of the state at times[k]; scalars[k]
    is a dict with at least dt, max_speed and total_energy.
    """

    config: dict
    x: np.ndarray
    times: list = dc_field(default_factory=list)
    snapshots: list = dc_field(default_factory=list)
    scalars: list = dc_field(default_factory=list)


def total_energy(field: Field, params: ModelParams,
                 flux: FluxModel) -> float:
    """Midpoint-rule integral of the entropy density over the domain."""
    return float(np.sum(entropy(field.cells, params, flux)) * field.grid.dx)


def amplitude_error(field: Field, target_amp: float) -> float:
    """|max_i u_i - target|, using the raw grid maximum."""
    return abs(float(np.max(field.cells[IU])) - target_amp)


def l2_error(field: Field, exact, weighted: bool = False) -> float:
    """Root-sum-square of u against exact(x, t).

    The default is the unweighted cell sum; weighted=True multiplies by
    sqrt(dx) for the physically scaled L2 norm.
    """
    diff = field.cells[IU] - np.asarray(exact(field.grid.centers, field.time),
                                        dtype=float)
    val = float(np.sqrt(np.sum(diff * diff)))
    return val * np.sqrt(field.grid.dx) if weighted else val


def shock_position(field: Field, u_left: float, u_right: float) -> float:
    """x of the first mid-level crossing, scanning left to right, with
    linear interpolation between the bracketing cell centers."""
    mid = 0.5 * (u_left + u_right)
    u = field.cells[IU]
    x = field.grid.centers
    g = (u[:-1] - mid) * (u[1:] - mid)
    idx = np.nonzero(g <= 0.0)[0]
    idx = idx[u[idx] != u[idx + 1]] if idx.size else idx
    if idx.size == 0:
        raise DomainError("u never crosses the mid-level")
    i = int(idx[0])
    frac = (mid - u[i]) / (u[i + 1] - u[i])
    return float(x[i] + frac * (x[i + 1] - x[i]))


def eoc(pairs) -> list:
    """Experimental orders from adjacent (parameter, error) pairs."""
    pairs = list(pairs)
    if len(pairs) < 2:
        raise DomainError("eoc needs at least two (parameter, error) pairs")
    orders = []
    for (h0, e0), (h1, e1) in zip(pairs[:-1], pairs[1:]):
        if e0 <= 0 or e1 <= 0:
            raise DomainError("eoc requires positive errors")
        orders.append(np.log(e0 / e1) / np.log(h0 / h1))
    return orders


def energy_error_series(record: RunRecord) -> np.ndarray:
    """Signed series E(t_k) - E(t_0) from the recorded scalars."""
    e = np.array([s["total_energy"] for s in record.scalars])
    return e - e[0]
