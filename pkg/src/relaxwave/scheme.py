"""Two-step Lax-Wendroff scheme with semi-implicit relaxation source.

One step is

  1. predictor: interface half-states from cell averages and flux
     differences, with the stiff source handled implicitly through a
     closed-form 2x2 solve in (psi, w);
  2. corrector: conservative update with a trapezoidal source built from
     the half-states;
  3. optional explicit diffusion on the (u, psi, p) components.

The time step obeys dt = cfl * dx / (lambda_max + 2 eps / dx).

`step` is the plain numpy reference implementation, valid for any flux.
`run` dispatches to the compiled kernel in _kernels for polynomial fluxes
and falls back to repeated `step` calls otherwise; both paths produce the
same floating-point trajectory up to round-off reassociation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .core import (IU, IPSI, IW, IP, BlowupError, BoundaryKind,
                   DegenerateStateError, Field, FluxModel, ModelParams)
from .model import eigenvalues


@dataclass(frozen=True)
class StepReport:
    """Bookkeeping for a completed step (or fused block of steps)."""

    dt: float
    max_speed: float
    n_steps: int = 1


def fill_ghosts(cells: np.ndarray, boundary: BoundaryKind) -> np.ndarray:
    """Return a (4, N+2) array with one ghost cell on each side."""
    n = cells.shape[1]
    ext = np.empty((4, n + 2))
    ext[:, 1:-1] = cells
    if boundary is BoundaryKind.PERIODIC:
        ext[:, 0] = cells[:, -1]
        ext[:, -1] = cells[:, 0]
    else:
        # zero gradient for u, psi, w; odd reflection pins p = 0 on the wall
        ext[:3, 0] = cells[:3, 0]
        ext[:3, -1] = cells[:3, -1]
        ext[IP, 0] = -cells[IP, 0]
        ext[IP, -1] = -cells[IP, -1]
    return ext


def compute_dt(field: Field, params: ModelParams, flux: FluxModel) -> tuple:
    """CFL time step and the max signal speed it came from."""
    lam = float(np.max(np.abs(eigenvalues(field.cells, params, flux))))
    dx = field.grid.dx
    denom = lam + 2.0 * params.epsilon / dx
    if denom <= 0.0:
        raise DegenerateStateError("no wave speeds and no diffusion")
    return params.cfl * dx / denom, lam


def implicit_source_solve(rhs: np.ndarray, dt: float,
                          params: ModelParams) -> np.ndarray:
    """Solve (I - dt/2 S) X = rhs for the source matrix S.

    Only psi and w couple; u and p pass through.  The 2x2 system has
    determinant 1 + dt^2 alpha / (4 beta) >= 1, so it is never singular.
    """
    a, b = params.alpha, params.beta
    det = 1.0 + dt * dt * a / (4.0 * b)
    out = rhs.copy()
    out[IPSI] = (rhs[IPSI] - 0.5 * dt * a * rhs[IW]) / det
    out[IW] = (rhs[IW] + 0.5 * dt / b * rhs[IPSI]) / det
    return out


def _phys_flux(cells: np.ndarray, params: ModelParams,
               flux: FluxModel) -> np.ndarray:
    from .model import flux_vector
    return flux_vector(cells, params, flux)


def predictor(ext: np.ndarray, dt: float, dx: float, params: ModelParams,
              flux: FluxModel) -> np.ndarray:
    """Half-time interface states, shape (4, N+1), from the ghosted array."""
    fx = _phys_flux(ext, params, flux)
    rhs = 0.5 * (ext[:, :-1] + ext[:, 1:]) - dt / (2.0 * dx) * (
        fx[:, 1:] - fx[:, :-1])
    return implicit_source_solve(rhs, dt, params)


def corrector(cells: np.ndarray, half: np.ndarray, dt: float, dx: float,
              params: ModelParams, flux: FluxModel) -> np.ndarray:
    """Conservative update plus trapezoidal source from interface states."""
    from .model import source_vector
    fx = _phys_flux(half, params, flux)
    src = source_vector(half[:, :-1] + half[:, 1:], params)
    return cells - dt / dx * (fx[:, 1:] - fx[:, :-1]) + 0.5 * dt * src


def diffusion_step(cells: np.ndarray, dt: float, dx: float,
                   params: ModelParams, boundary: BoundaryKind) -> np.ndarray:
    """Explicit second-difference diffusion on the u, psi, p rows."""
    if params.epsilon == 0.0:
        return cells
    ext = fill_ghosts(cells, boundary)
    mu = dt * params.epsilon / (dx * dx)
    out = cells.copy()
    for k in (IU, IPSI, IP):
        out[k] = cells[k] + mu * (ext[k, 2:] - 2.0 * ext[k, 1:-1]
                                  + ext[k, :-2])
    return out


def step(field: Field, params: ModelParams, flux: FluxModel,
         dt: float | None = None) -> StepReport:
    """Advance the field by one step in place."""
    if dt is None:
        dt, lam = compute_dt(field, params, flux)
    else:
        lam = float(np.max(np.abs(eigenvalues(field.cells, params, flux))))
    dx = field.grid.dx
    ext = fill_ghosts(field.cells, field.boundary)
    half = predictor(ext, dt, dx, params, flux)
    new = corrector(field.cells, half, dt, dx, params, flux)
    new = diffusion_step(new, dt, dx, params, field.boundary)
    if not np.all(np.isfinite(new)):
        raise BlowupError(f"non-finite state at t = {field.time + dt:.6g}")
    field.cells[:] = new
    field.time += dt
    return StepReport(dt=dt, max_speed=lam)


_MAX_STEPS = 200_000_000


def advance_to(field: Field, params: ModelParams, flux: FluxModel,
               t_stop: float, force_reference: bool = False) -> StepReport:
    """Advance the field to t_stop in place, fused when possible.

    Uses the compiled kernel for polynomial fluxes unless
    `force_reference` asks for the plain numpy path.
    """
    if t_stop <= field.time:
        return StepReport(dt=0.0, max_speed=0.0, n_steps=0)
    if flux.poly is not None and not force_reference:
        c1, c2, c3 = flux.poly
        bc = (_kernels.BC_PERIODIC
              if field.boundary is BoundaryKind.PERIODIC
              else _kernels.BC_PSEUDO_NEUMANN)
        u, psi, w, p = (np.ascontiguousarray(field.cells[k])
                        for k in range(4))
        t, n, last_dt, last_speed, ok = _kernels.advance(
            u, psi, w, p, field.time, t_stop, field.grid.dx,
            params.alpha, params.beta, float(params.sgn_gamma),
            params.v_beta ** 2, params.epsilon, params.cfl,
            c1, c2, c3, bc, _MAX_STEPS)
        field.cells[IU], field.cells[IPSI] = u, psi
        field.cells[IW], field.cells[IP] = w, p
        field.time = t
        if not ok:
            raise BlowupError(f"non-finite state at t = {t:.6g}")
        return StepReport(dt=last_dt, max_speed=last_speed, n_steps=n)
    total = 0
    rep = StepReport(dt=0.0, max_speed=0.0)
    while field.time < t_stop and total < _MAX_STEPS:
        dt, lam = compute_dt(field, params, flux)
        if field.time + dt >= t_stop:
            dt = t_stop - field.time
            rep = step(field, params, flux, dt=dt)
            field.time = t_stop
            total += 1
            break
        rep = step(field, params, flux, dt=dt)
        total += 1
    return StepReport(dt=rep.dt, max_speed=rep.max_speed, n_steps=total)


def run(field: Field, params: ModelParams, flux: FluxModel, t_final: float,
        record_times: np.ndarray | None = None,
        callback: Callable | None = None,
        force_reference: bool = False) -> list:
    """Advance to t_final, invoking `callback(field, report)` at each
    requested record time (always including t_final).  Returns the list of
    callback return values, or of StepReports when callback is None.
    """
    if record_times is None:
        times = np.array([t_final])
    else:
        times = np.asarray(record_times, dtype=float)
        times = np.unique(np.append(times[(times > field.time)
                                          & (times <= t_final)], t_final))
    out = []
    for t_stop in times:
        rep = advance_to(field, params, flux, float(t_stop),
                         force_reference=force_reference)
        out.append(callback(field, rep) if callback else rep)
    return out
