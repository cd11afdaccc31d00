"""Test-case catalog: named presets bundling profile, flux, domain,
boundary conditions, solver parameters and the matching oracle."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .core import BoundaryKind, ConfigError, FluxModel, Grid, ModelParams, \
    make_flux_model
from .initial_data import Profile, make_profile


@dataclass(frozen=True)
class CasePreset:
    """Default experiment setup for one catalog case."""

    name: str
    profile_case: str
    flux_name: str
    flux_k: float | None
    domain: tuple
    n_cells: int
    t_final: float
    boundary: BoundaryKind
    alpha: float
    beta: float
    gamma: float
    epsilon: float = 0.0
    oracle: str | None = None  # traveling_wave | dsw | None
    profile_params: dict = dc_field(default_factory=dict)
    meta: dict = dc_field(default_factory=dict)


_P = BoundaryKind.PERIODIC
_N = BoundaryKind.PSEUDO_NEUMANN

# mkdvb target equation: u_t + (u^3)_x = eps u_xx + gamma u_xxx with
# gamma = +1e-5.  The tanh front is an exact traveling wave of this form
# (and of no sign/flux variant): matching the integrated TW ODE gives
# c = -eps/(3 sqrt(2 gamma)), a = (5 eps/6) sqrt(2/gamma) and speed
# 3c^2 + a^2 = 14 eps^2/(9 gamma), which reproduces the front-state and
# velocity formulas of the profile exactly.
_PRESETS = {
    "soliton1": CasePreset(
        "soliton1", "soliton1", "kdv6", None, (-2.0, 2.0), 1000, 100.0, _P,
        alpha=1e3, beta=1e-6, gamma=-1e-2, oracle="traveling_wave",
        profile_params={"V": 1.0, "gamma": -1e-2}),
    "soliton2": CasePreset(
        "soliton2", "soliton2", "kdv6", None, (-15.0, 15.0), 1000, 60.0, _P,
        alpha=4e3, beta=1e-6, gamma=-1.0),
    "sech_dsw": CasePreset(
        "sech_dsw", "sech_hump", "kdv6", None, (-5.0, 5.0), 8000, 0.4, _P,
        alpha=1e3, beta=1e-7, gamma=-1e-4,
        meta={"t_onset": 0.216}),
    "riemann_dsw": CasePreset(
        "riemann_dsw", "smooth_step", "burgers", None, (-8.0, 2.0), 10000,
        3.0, _N, alpha=1e3, beta=1e-7, gamma=-1e-4, oracle="dsw",
        profile_params={"omega": 1e-3}),
    "kdvb_tw": CasePreset(
        "kdvb_tw", "kdvb_tw", "burgers", None, (-3.0, 1.0), 2000, 10.0, _N,
        alpha=2e3, beta=1e-6, gamma=1e-4, epsilon=1e-2,
        oracle="traveling_wave",
        profile_params={"eps": 1e-2, "gamma": 1e-4}),
    "mkdvb_uc": CasePreset(
        "mkdvb_uc", "mkdvb_uc", "mkdv", None, (-0.1, 2.0), 10000, 0.1, _N,
        alpha=1e3, beta=1e-6, gamma=1e-5, epsilon=1e-2,
        oracle="traveling_wave",
        profile_params={"eps": 1e-2, "gamma": 1e-5, "mode": "formula"}),
    "gardner_dark": CasePreset(
        "gardner_dark", "gardner_dark", "gardner", 1.0, (-50.0, 50.0), 2000,
        500.0, _P, alpha=1e3, beta=1e-6, gamma=-1.0,
        oracle="traveling_wave", profile_params={"eps": 1e-4, "k": 1.0}),
    "gardner_bright": CasePreset(
        "gardner_bright", "gardner_bright", "gardner", 1.0, (-50.0, 50.0),
        2000, 500.0, _P, alpha=1e3, beta=1e-6, gamma=-1.0,
        oracle="traveling_wave", profile_params={"eps": 1e-4, "k": 1.0}),
}


def case_names() -> list:
    return sorted(_PRESETS)


def get_preset(name: str) -> CasePreset:
    try:
        return _PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown case '{name}'; known: {case_names()}")


@dataclass(frozen=True)
class Setup:
    """Fully resolved experiment: everything a run needs."""

    preset: CasePreset
    grid: Grid
    params: ModelParams
    flux: FluxModel
    profile: Profile
    boundary: BoundaryKind
    t_final: float


def build_setup(name: str, *, n_cells: int | None = None,
                t_final: float | None = None,
                domain: tuple | None = None,
                alpha: float | None = None, beta: float | None = None,
                gamma: float | None = None, epsilon: float | None = None,
                cfl: float = 0.9,
                boundary: BoundaryKind | None = None,
                profile_params: dict | None = None) -> Setup:
    """Resolve a preset with optional overrides into a runnable Setup.

    beta may be given as the string "auto" for the scaled pairing
    beta = |gamma| / alpha.
    """
    p = get_preset(name)
    gamma = p.gamma if gamma is None else gamma
    alpha = p.alpha if alpha is None else alpha
    if isinstance(beta, str):
        if beta != "auto":
            raise ConfigError("beta must be a number or 'auto'")
        beta = abs(gamma) / alpha
    beta = p.beta if beta is None else beta
    params = ModelParams(alpha=alpha, beta=beta, gamma=gamma,
                         epsilon=p.epsilon if epsilon is None else epsilon,
                         cfl=cfl)
    dom = p.domain if domain is None else domain
    grid = Grid(dom[0], dom[1], p.n_cells if n_cells is None else n_cells)
    prof_kw = dict(p.profile_params)
    prof_kw.update(profile_params or {})
    profile = make_profile(p.profile_case, **prof_kw)
    flux = make_flux_model(p.flux_name, k=p.flux_k)
    return Setup(preset=p, grid=grid, params=params, flux=flux,
                 profile=profile,
                 boundary=p.boundary if boundary is None else boundary,
                 t_final=p.t_final if t_final is None else t_final)
