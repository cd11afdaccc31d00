"""Compiled stepping kernel for polynomial fluxes.

A fused Lax-Wendroff predictor/corrector with semi-implicit source and an
explicit diffusion stage.  Mirrors scheme.step exactly; tests assert the
two paths agree to round-off.  Boundary codes: 0 periodic, 1 pseudo-Neumann
(zero-gradient on u, psi, w, odd reflection on p).
"""

from __future__ import annotations

import numpy as np
from numba import njit

BC_PERIODIC = 0
BC_PSEUDO_NEUMANN = 1


@njit(cache=True, fastmath=False)
def _fill_ghosts(ext, n, bc):
    # ext holds (4, n + 2); interior occupies columns 1..n
    if bc == BC_PERIODIC:
        for k in range(4):
            ext[k, 0] = ext[k, n]
            ext[k, n + 1] = ext[k, 1]
    else:
        for k in range(3):
            ext[k, 0] = ext[k, 1]
            ext[k, n + 1] = ext[k, n]
        ext[3, 0] = -ext[3, 1]
        ext[3, n + 1] = -ext[3, n]


@njit(cache=True, fastmath=False)
def advance(u, psi, w, p, t0, t_stop, dx,
            alpha, beta, sgn, vb2, eps, cfl,
            c1, c2, c3, bc, max_steps):
    """Advance in place from t0 until t_stop.

    Returns (t, n_steps, last_dt, last_max_speed, ok).

    ok is False when a non-finite value appeared (state left as-is for
    inspection by the caller).
    """
    n = u.shape[0]
    vb = np.sqrt(vb2)
    ext = np.empty((4, n + 2))
    half = np.empty((4, n + 1))
    det_base = alpha / (4.0 * beta)

    # divergence guard: abort once u leaves a generous envelope of its
    # initial range instead of grinding on with a collapsing time step
    u_cap = 1.0
    for i in range(n):
        if abs(u[i]) > u_cap:
            u_cap = abs(u[i])
    u_cap *= 100.0

    t = t0
    steps = 0
    last_dt = 0.0
    last_speed = 0.0
    while t < t_stop and steps < max_steps:
        for i in range(n):
            ext[0, i + 1] = u[i]
            ext[1, i + 1] = psi[i]
            ext[2, i + 1] = w[i]
            ext[3, i + 1] = p[i]
        _fill_ghosts(ext, n, bc)

        # CFL time step from the largest characteristic speed
        lam = vb
        for i in range(n):
            ui = u[i]
            dfu = c1 + ui * (2.0 * c2 + ui * 3.0 * c3)
            sp = abs(dfu + alpha * sgn)
            if sp > lam:
                lam = sp
        denom = lam + 2.0 * eps / dx
        if denom <= 0.0:
            return t, steps, last_dt, last_speed, False
        dt = cfl * dx / denom
        clipped = False
        if t + dt >= t_stop:
            dt = t_stop - t
            clipped = True
        r = dt / (2.0 * dx)
        det = 1.0 + dt * dt * det_base

        # predictor: interface half-states with implicit source
        for j in range(n + 1):
            uL = ext[0, j]
            uR = ext[0, j + 1]
            fL = uL * (c1 + uL * (c2 + uL * c3)) + sgn * ext[1, j]
            fR = uR * (c1 + uR * (c2 + uR * c3)) + sgn * ext[1, j + 1]
            rhs_u = 0.5 * (uL + uR) - r * (fR - fL)
            rhs_psi = 0.5 * (ext[1, j] + ext[1, j + 1]) - r * alpha * (fR - fL)
            rhs_w = (0.5 * (ext[2, j] + ext[2, j + 1])
                     + r * vb2 * (ext[3, j + 1] - ext[3, j]))
            rhs_p = (0.5 * (ext[3, j] + ext[3, j + 1])
                     + r * (ext[2, j + 1] - ext[2, j]))
            half[0, j] = rhs_u
            half[1, j] = (rhs_psi - 0.5 * dt * alpha * rhs_w) / det
            half[2, j] = (rhs_w + 0.5 * dt / beta * rhs_psi) / det
            half[3, j] = rhs_p

        # corrector with trapezoidal source from the half-states
        ok = True
        for i in range(n):
            uL = half[0, i]
            uR = half[0, i + 1]
            fL = uL * (c1 + uL * (c2 + uL * c3)) + sgn * half[1, i]
            fR = uR * (c1 + uR * (c2 + uR * c3)) + sgn * half[1, i + 1]
            psi_s = half[1, i] + half[1, i + 1]
            w_s = half[2, i] + half[2, i + 1]
            ext[0, i + 1] = u[i] - 2.0 * r * (fR - fL)
            ext[1, i + 1] = (psi[i] - 2.0 * r * alpha * (fR - fL)
                             - 0.5 * dt * alpha * w_s)
            ext[2, i + 1] = (w[i] + 2.0 * r * vb2
                             * (half[3, i + 1] - half[3, i])
                             + 0.5 * dt / beta * psi_s)
            ext[3, i + 1] = p[i] + 2.0 * r * (half[2, i + 1] - half[2, i])

        # explicit diffusion on u, psi, p (not w)
        if eps > 0.0:
            _fill_ghosts(ext, n, bc)
            mu = dt * eps / (dx * dx)
            for i in range(n):
                u[i] = ext[0, i + 1] + mu * (ext[0, i + 2]
                                             - 2.0 * ext[0, i + 1]
                                             + ext[0, i])
                psi[i] = ext[1, i + 1] + mu * (ext[1, i + 2]
                                               - 2.0 * ext[1, i + 1]
                                               + ext[1, i])
                w[i] = ext[2, i + 1]
                p[i] = ext[3, i + 1] + mu * (ext[3, i + 2]
                                             - 2.0 * ext[3, i + 1]
                                             + ext[3, i])
        else:
            for i in range(n):
                u[i] = ext[0, i + 1]
                psi[i] = ext[1, i + 1]
                w[i] = ext[2, i + 1]
                p[i] = ext[3, i + 1]

        for i in range(n):
            if not (np.isfinite(u[i]) and np.isfinite(psi[i])
                    and np.isfinite(w[i]) and np.isfinite(p[i])):
                ok = False
            if abs(u[i]) > u_cap:
                ok = False
        last_dt = dt
        last_speed = lam
        if not ok:
            return t + dt, steps + 1, last_dt, last_speed, False

        t = t_stop if clipped else t + dt
        steps += 1

    return t, steps, last_dt, last_speed, True
