"""Closed-form initial profiles and the prepared lifting to (u, psi, w, p).

Profiles are defined symbolically and differentiated with sympy, so every
Profile carries exact first, second and third derivatives.  The lifting

    u = u0,  psi = -|gamma| u0'',  p = u0',  w = -f'(u0) u0' + gamma u0'''

places the augmented state on the slow manifold: w equals the initial time
derivative of u for the target equation u_t + f(u)_x = gamma u_xxx.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Callable

import numpy as np
import sympy as sp

from .core import (IU, IPSI, IW, IP, BoundaryKind, ConfigError, Field,
                   FluxModel, Grid, ModelParams)

_X = sp.Symbol("x", real=True)


@dataclass(frozen=True)
class Profile:
    """Initial profile u0 with its first three spatial derivatives.

    `speed` is the traveling-wave velocity when the profile is an exact
    traveling wave of its target equation, else None.
    """

    name: str
    eval: Callable
    d1: Callable
    d2: Callable
    d3: Callable
    speed: float | None = None
    meta: dict = dc_field(default_factory=dict)


def _from_expr(name: str, expr, speed: float | None = None,
               meta: dict | None = None) -> Profile:
    funcs = []
    e = expr
    for _ in range(4):
        funcs.append(sp.lambdify(_X, e, modules="numpy"))
        e = sp.diff(e, _X)
    f0, f1, f2, f3 = funcs

    def wrap(fn):
        def g(x):
            return np.asarray(fn(np.asarray(x, dtype=float)), dtype=float)
        return g

    return Profile(name=name, eval=wrap(f0), d1=wrap(f1), d2=wrap(f2),
                   d3=wrap(f3), speed=speed, meta=dict(meta or {}))


def _soliton1(V: float = 1.0, gamma: float = -1e-2) -> Profile:
    g = abs(gamma)
    expr = V / 2 * sp.sech(sp.sqrt(V / (4 * g)) * _X) ** 2
    return _from_expr("soliton1", expr, speed=V, meta={"V": V, "gamma": gamma})


def _two_soliton_expr(x, t, V1, V2, x1, x2):
    th1 = sp.sqrt(V1) * (x - x1 - V1 * t) / 2
    th2 = sp.sqrt(V2) * (x - x2 - V2 * t) / 2
    num = 2 * (V1 - V2) * (V1 * sp.cosh(th2) ** 2 + V2 * sp.sinh(th1) ** 2)
    den = ((sp.sqrt(V1) + sp.sqrt(V2)) * sp.cosh(th1 - th2)
           + (sp.sqrt(V1) - sp.sqrt(V2)) * sp.cosh(th1 + th2)) ** 2
    return num / den


def _soliton2(V1: float = 2.0, V2: float = 0.5,
              x1: float = -8.0, x2: float = -2.0) -> Profile:
    if not (V1 > V2 > 0):
        raise ConfigError("soliton2 requires V1 > V2 > 0")
    expr = _two_soliton_expr(_X, 0, V1, V2, x1, x2)
    return _from_expr("soliton2", expr,
                      meta={"V1": V1, "V2": V2, "x1": x1, "x2": x2})


_TWO_SOL_CACHE: dict = {}


def two_soliton_exact(x, t, V1: float, V2: float,
                      x1: float, x2: float):
    """Exact two-soliton field at (x, t); t=0 matches make_profile(soliton2)."""
    key = (V1, V2, x1, x2)
    fn = _TWO_SOL_CACHE.get(key)
    if fn is None:
        ts = sp.Symbol("t", real=True)
        fn = sp.lambdify((_X, ts), _two_soliton_expr(_X, ts, V1, V2, x1, x2),
                         modules="numpy")
        _TWO_SOL_CACHE[key] = fn
    return np.asarray(fn(np.asarray(x, dtype=float), float(t)), dtype=float)


def _sech_hump() -> Profile:
    return _from_expr("sech_hump", -sp.sech(_X) ** 2)


def _smooth_step(omega: float = 1e-3) -> Profile:
    if omega <= 0:
        raise ConfigError("smooth_step requires omega > 0")
    expr = (1 - sp.tanh(_X / omega)) / 2
    return _from_expr("smooth_step", expr, meta={"omega": omega})


def _kdvb_tw(eps: float = 1e-2, gamma: float = 1e-4) -> Profile:
    if gamma == 0:
        raise ConfigError("kdvb_tw requires gamma != 0")
    z = eps * _X / (10 * gamma)
    expr = -3 * eps ** 2 / (25 * gamma) * (2 + 2 * sp.tanh(z)
                                           + sp.sech(z) ** 2)
    V = -6.0 * eps ** 2 / (25.0 * gamma)
    return _from_expr("kdvb_tw", expr, speed=V,
                      meta={"eps": eps, "gamma": gamma, "V": V})


def _mkdvb_uc(eps: float = 1e-2, gamma: float = 1e-5,
              mode: str = "formula") -> Profile:
    """Undercompressive front for u_t + (u^3)_x = eps u_xx + gamma u_xxx.

    `gamma` (> 0) is the dispersion coefficient of the target equation;
    the tanh kink below is an exact traveling wave of it at the
    formula-mode far-field states.  formula-mode derives those states
    u- = -sqrt(2 eps^2 / gamma), u+ = -u- - sqrt(2 eps^2 / (9 gamma));
    literal-mode pins them to the rounded reference values u- = -4.47,
    u+ = 3.97 that reproduce the quoted front speed V = 18.02.
    """
    if gamma <= 0:
        raise ConfigError("mkdvb_uc requires gamma > 0")
    if mode == "formula":
        um = -math.sqrt(2.0 * eps ** 2 / gamma)
        up = -um - math.sqrt(2.0 * eps ** 2 / (9.0 * gamma))
    elif mode == "literal":
        um, up = -4.47, 3.97
    else:
        raise ConfigError("mkdvb_uc mode must be 'formula' or 'literal'")
    A = (um - up) / (2.0 * math.sqrt(2.0))
    V = (up ** 3 - um ** 3) / (up - um)
    expr = sp.Rational(1, 2) * (up + um - abs(up - um)
                                * sp.tanh(A * _X / math.sqrt(gamma)))
    return _from_expr("mkdvb_uc", expr, speed=V,
                      meta={"eps": eps, "gamma": gamma, "mode": mode,
                            "u_minus": um, "u_plus": up, "A": A, "V": V})


def _gardner(kind: str, eps: float = 1e-4, k: float = 1.0) -> Profile:
    if not (0 < eps < 0.5):
        raise ConfigError("gardner profiles require 0 < eps < 1/2")
    if kind == "dark":
        u1, u2, u3, u4 = 0.0, eps, 1.0 - eps, 1.0 - eps
    else:
        u1, u2, u3, u4 = eps, eps, 1.0 - eps, 1.0
    th = sp.Rational(1, 2) * math.sqrt(k * (u3 - u1) * (u4 - u2)) * _X
    if kind == "dark":
        expr = u3 - (u3 - u2) / (sp.cosh(th) ** 2
                                 - (u3 - u2) / (u3 - u1) * sp.sinh(th) ** 2)
    else:
        expr = u2 + (u3 - u2) / (sp.cosh(th) ** 2
                                 - (u3 - u2) / (u4 - u2) * sp.sinh(th) ** 2)
    V = k * (u1 * u2 + u1 * u3 + u1 * u4 + u2 * u3 + u2 * u4 + u3 * u4)
    return _from_expr(f"gardner_{kind}", expr, speed=V,
                      meta={"eps": eps, "k": k, "V": V,
                            "levels": (u1, u2, u3, u4)})


_CASES = {
    "soliton1": _soliton1,
    "soliton2": _soliton2,
    "sech_hump": _sech_hump,
    "smooth_step": _smooth_step,
    "kdvb_tw": _kdvb_tw,
    "mkdvb_uc": _mkdvb_uc,
    "gardner_dark": lambda **kw: _gardner("dark", **kw),
    "gardner_bright": lambda **kw: _gardner("bright", **kw),
}


def make_profile(case: str, **params) -> Profile:
    """Build a named profile.  Unknown case or parameter raises ConfigError."""
    maker = _CASES.get(case)
    if maker is None:
        raise ConfigError(f"unknown profile case '{case}'")
    try:
        return maker(**params)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for profile '{case}': {exc}")


def prepare_initial(profile: Profile, grid: Grid, params: ModelParams,
                    flux: FluxModel,
                    boundary: BoundaryKind = BoundaryKind.PERIODIC) -> Field:
    """Lift u0 onto the grid as a well-prepared (4, N) field at t = 0."""
    x = grid.centers
    u0 = profile.eval(x)
    d1 = profile.d1(x)
    cells = np.empty((4, grid.n_cells))
    cells[IU] = u0
    cells[IPSI] = -abs(params.gamma) * profile.d2(x)
    cells[IW] = -flux.df(u0) * d1 + params.gamma * profile.d3(x)
    cells[IP] = d1
    return Field(grid, cells, boundary)
