"""Reference solutions: traveling waves, dispersive-shock asymptotics
built on AGM elliptic functions, and the diffusive energy-decay law.

Elliptic conventions: K, E and dn take the modulus s as argument (so the
series parameter is m = s^2).  The self-similar fan of the unit-step
problem runs between the trailing edge tau_minus = -1 (s -> 0) and the
leading edge tau_plus = 2/3 (s -> 1), where the modulus solves

    (1 + s^2)/3 - (2/3) s^2 (1 - s^2) K(s) / (E(s) - (1 - s^2) K(s)) = x/t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import IU, IPSI, IW, IP, DomainError, FluxModel, ModelParams
from .initial_data import Profile

TAU_MINUS = -1.0
TAU_PLUS = 2.0 / 3.0


def elliptic_K(s: float) -> float:
    """Complete elliptic integral of the first kind, modulus convention."""
    if not (0.0 <= s < 1.0):
        raise DomainError("elliptic_K requires 0 <= s < 1")
    a, b = 1.0, math.sqrt(1.0 - s * s)
    for _ in range(60):
        if abs(a - b) <= 1e-15 * a:
            break
        a, b = (a + b) / 2.0, math.sqrt(a * b)
    return math.pi / (2.0 * a)


def elliptic_E(s: float) -> float:
    """Complete elliptic integral of the second kind; E(1) = 1."""
    if not (0.0 <= s <= 1.0):
        raise DomainError("elliptic_E requires 0 <= s <= 1")
    if s == 1.0:
        return 1.0
    a, b, c = 1.0, math.sqrt(1.0 - s * s), s
    total = c * c / 2.0
    pw = 1.0
    for _ in range(60):
        a, b, c = (a + b) / 2.0, math.sqrt(a * b), (a - b) / 2.0
        pw *= 2.0
        total += pw * c * c / 2.0
        if abs(c) <= 1e-17:
            break
    return math.pi / (2.0 * a) * (1.0 - total)


def _jacobi_sn_dn(x: float, s: float) -> tuple:
    """(sn, dn) at (x, s) via the descending Landen/AGM recursion."""
    if not (0.0 <= s <= 1.0):
        raise DomainError("jacobi_dn requires 0 <= s <= 1")
    if s == 0.0:
        return math.sin(x), 1.0
    if s == 1.0:
        return math.tanh(x), 1.0 / math.cosh(x)
    # descending AGM with tangent back-substitution; valid for all real x
    emc = 1.0 - s * s
    a, dn = 1.0, 1.0
    em, en = [], []
    c = 0.0
    for _ in range(60):
        em.append(a)
        emc = math.sqrt(emc)
        en.append(emc)
        c = 0.5 * (a + emc)
        if abs(a - emc) <= 1e-15 * a:
            break
        emc = a * emc
        a = c
    u = c * x
    sn, cn = math.sin(u), math.cos(u)
    if sn != 0.0:
        a = cn / sn
        c = a * c
        for b, e in zip(reversed(em), reversed(en)):
            a = c * a
            c = dn * c
            dn = (e + a) / (b + a)
            a = c / b
        a = 1.0 / math.sqrt(c * c + 1.0)
        sn = math.copysign(a, sn)
        cn = c * sn
    return sn, dn


def jacobi_dn(x: float, s: float) -> float:
    """Jacobi dn(x, s) in the modulus convention."""
    return _jacobi_sn_dn(x, s)[1]


def jacobi_sn(x: float, s: float) -> float:
    return _jacobi_sn_dn(x, s)[0]


def _whitham_velocity(s: float) -> float:
    """Fan coordinate x/t as a function of the modulus s in [0, 1]."""
    if s <= 1e-8:
        return TAU_MINUS
    if s >= 1.0:
        return TAU_PLUS
    s2 = s * s
    K = elliptic_K(s)
    E = elliptic_E(s)
    denom = E - (1.0 - s2) * K
    return (1.0 + s2) / 3.0 - (2.0 / 3.0) * s2 * (1.0 - s2) * K / denom


def dsw_modulus(xi: float) -> float:
    """Invert the fan relation for s in [0, 1] by bisection to 1e-10."""
    if xi < TAU_MINUS - 1e-12 or xi > TAU_PLUS + 1e-12:
        raise DomainError(f"xi = {xi} outside the fan [{TAU_MINUS}, {TAU_PLUS}]")
    if xi <= TAU_MINUS + 1e-12:
        return 0.0
    if xi >= TAU_PLUS - 1e-12:
        return 1.0
    lo, hi = 0.0, 1.0
    while hi - lo > 1e-10:
        mid = (lo + hi) / 2.0
        if _whitham_velocity(mid) < xi:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def dsw_envelope(xi: float) -> tuple:
    """(A_minus, A_plus) = (1 - s^2, 1 + s^2) at fan coordinate xi."""
    s = dsw_modulus(xi)
    return 1.0 - s * s, 1.0 + s * s


def dsw_solution(x: float, t: float) -> float:
    """Gurevich-Pitaevskii modulated wave for the unit-step problem."""
    if t <= 0.0:
        raise DomainError("dsw_solution requires t > 0")
    s = dsw_modulus(x / t)
    z = (x - (1.0 + s * s) * t / 3.0) / math.sqrt(6.0)
    dn = jacobi_dn(z, s)
    return 2.0 * dn * dn - (1.0 - s * s)


@dataclass(frozen=True)
class DswAsymptotics:
    """Edge speeds and modulus solver for the step-data fan."""

    tau_minus: float = TAU_MINUS
    tau_plus: float = TAU_PLUS

    def modulus(self, xi: float) -> float:
        return dsw_modulus(xi)

    def envelope(self, xi: float) -> tuple:
        return dsw_envelope(xi)

    def solution(self, x: float, t: float) -> float:
        return dsw_solution(x, t)


def exact_traveling_wave(profile: Profile, x, t: float,
                         period: float | None = None):
    """u0(x - V t), optionally wrapped onto a periodic domain of length
    `period`."""
    if profile.speed is None:
        raise DomainError(f"profile '{profile.name}' has no traveling speed")
    z = np.asarray(x, dtype=float) - profile.speed * t
    if period is not None:
        mid = np.mean(np.asarray(x, dtype=float))
        z = (z - (mid - period / 2.0)) % period + (mid - period / 2.0)
    return profile.eval(z)


def energy_decay_reference(times, snapshots, params: ModelParams,
                           flux: FluxModel, dx: float, e0: float,
                           open_boundaries: bool = False) -> np.ndarray:
    """Explicit-Euler integration of the diffusive dissipation identity.

    snapshots is a sequence of (4, N) arrays aligned with `times`; the
    decrement over [t_k, t_k+1] uses central-difference gradients of the
    snapshot at t_k.  With epsilon = 0 the series is flat at e0.

    On a non-periodic domain the entropy flux through the walls does not
    cancel; `open_boundaries` adds the Q(x_R) - Q(x_L) drain, without
    which the reference is off by the advected entropy.
    """
    from .model import entropy_flux
    times = np.asarray(times, dtype=float)
    out = np.empty(len(times))
    out[0] = e0
    if params.epsilon == 0.0:
        out[:] = e0
        return out
    s = params.sgn_gamma
    for k in range(len(times) - 1):
        cells = snapshots[k]
        du = np.gradient(cells[IU], dx)
        dp = np.gradient(cells[IP], dx)
        dpsi = np.gradient(cells[IPSI], dx)
        diss = np.sum(s * flux.df(cells[IU]) * du * du
                      + abs(params.gamma) * dp * dp
                      + dpsi * dpsi / params.alpha) * dx
        dec = params.epsilon * diss
        if open_boundaries:
            q = entropy_flux(cells, params, flux)
            dec += q[-1] - q[0]
        out[k + 1] = out[k] - (times[k + 1] - times[k]) * dec
    return out
