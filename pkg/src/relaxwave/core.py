"""Shared domain types: states, parameters, flux models, grids, fields."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

# Row indices into a (4, N) state array.
IU, IPSI, IW, IP = 0, 1, 2, 3


class ConfigError(ValueError):
    """Invalid configuration or unknown catalog/flux identifier."""


class DegenerateStateError(RuntimeError):
    """No wave speeds and no diffusion; the time step is undefined."""


class BlowupError(RuntimeError):
    """A non-finite value appeared in the evolved state."""


class DomainError(ValueError):
    """An oracle was queried outside its domain of validity."""


@dataclass(frozen=True)
class StateVec:
    """Per-cell state (u, psi, w, p).

    u is the conserved scalar; psi, w, p are the relaxed surrogates for
    the scaled second derivative, the time derivative and the gradient.
    """

    u: float
    psi: float
    w: float
    p: float

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.psi, self.w, self.p], dtype=float)

    @staticmethod
    def from_array(a) -> "StateVec":
        return StateVec(float(a[0]), float(a[1]), float(a[2]), float(a[3]))


@dataclass(frozen=True)
class ModelParams:
    """Relaxation and physics constants.

    alpha: relaxation rate (> 0)
    beta: wave-operator parameter (> 0)
    gamma: dispersion coefficient (!= 0)
    epsilon: diffusion coefficient (>= 0)
    cfl: Courant number in (0, 1]
    """

    alpha: float
    beta: float
    gamma: float
    epsilon: float = 0.0
    cfl: float = 0.9

    def __post_init__(self) -> None:
        if not (self.alpha > 0):
            raise ConfigError("alpha must be positive")
        if not (self.beta > 0):
            raise ConfigError("beta must be positive")
        if self.gamma == 0 or not math.isfinite(self.gamma):
            raise ConfigError("gamma must be nonzero and finite")
        if self.epsilon < 0:
            raise ConfigError("epsilon must be nonnegative")
        if not (0.0 < self.cfl <= 1.0):
            raise ConfigError("cfl must lie in (0, 1]")

    @property
    def sgn_gamma(self) -> int:
        return 1 if self.gamma > 0 else -1

    @property
    def v_beta(self) -> float:
        return math.sqrt(abs(self.gamma) / self.beta)


@dataclass(frozen=True)
class FluxModel:
    """Scalar flux triple (f, f', F) with F(0) = 0.

    `poly` carries (c1, c2, c3) for f(u) = c1*u + c2*u^2 + c3*u^3 when the
    flux is polynomial; the fast stepping kernel requires it.  Callables
    must accept and return numpy arrays.
    """

    name: str
    f: Callable
    df: Callable
    F: Callable
    poly: tuple | None = None


def _poly_flux(name: str, c1: float, c2: float, c3: float) -> FluxModel:
    def f(u):
        return u * (c1 + u * (c2 + u * c3))

    def df(u):
        return c1 + u * (2.0 * c2 + u * 3.0 * c3)

    def F(u):
        return u * u * (c1 / 2.0 + u * (c2 / 3.0 + u * c3 / 4.0))

    return FluxModel(name=name, f=f, df=df, F=F, poly=(c1, c2, c3))


_CUSTOM_FLUXES: dict[str, FluxModel] = {}


def register_flux_model(model: FluxModel) -> None:
    """Register a custom flux under its name for make_flux_model lookup."""
    _CUSTOM_FLUXES[model.name] = model


def make_flux_model(name: str, k: float | None = None) -> FluxModel:
    """Build one of the built-in flux models (or a registered custom one).

    kdv6:    f(u) = 3u^2        (u_t + 6uu_x)
    burgers: f(u) = u^2/2       (u_t + uu_x)
    cubic:   f(u) = u^3/3       (u_t + u^2 u_x)
    mkdv:    f(u) = u^3         (u_t + (u^3)_x)
    gardner: f(u) = 3u^2 - 2ku^3 (u_t + 6(u - ku^2)u_x), requires k
    """
    if name == "kdv6":
        return _poly_flux("kdv6", 0.0, 3.0, 0.0)
    if name == "burgers":
        return _poly_flux("burgers", 0.0, 0.5, 0.0)
    if name == "cubic":
        return _poly_flux("cubic", 0.0, 0.0, 1.0 / 3.0)
    if name == "mkdv":
        return _poly_flux("mkdv", 0.0, 0.0, 1.0)
    if name == "gardner":
        if k is None:
            raise ConfigError("flux 'gardner' requires the parameter k")
        return _poly_flux("gardner", 0.0, 3.0, -2.0 * float(k))
    if name in _CUSTOM_FLUXES:
        return _CUSTOM_FLUXES[name]
    raise ConfigError(f"unknown flux model '{name}'")


@dataclass(frozen=True)
class Grid:
    """Uniform cell-centered 1D grid."""

    x_left: float
    x_right: float
    n_cells: int

    def __post_init__(self) -> None:
        if not (self.x_right > self.x_left):
            raise ConfigError("x_right must exceed x_left")
        if self.n_cells < 4:
            raise ConfigError("n_cells must be at least 4")

    @property
    def dx(self) -> float:
        return (self.x_right - self.x_left) / self.n_cells

    @property
    def centers(self) -> np.ndarray:
        i = np.arange(self.n_cells)
        return self.x_left + (i + 0.5) * self.dx

    @property
    def length(self) -> float:
        return self.x_right - self.x_left


class BoundaryKind(Enum):
    PERIODIC = "periodic"
    PSEUDO_NEUMANN = "pseudo_neumann"


@dataclass
class Field:
    """Grid geometry plus the evolving (4, N) cell-state array."""

    grid: Grid
    cells: np.ndarray
    boundary: BoundaryKind = BoundaryKind.PERIODIC
    time: float = 0.0

    def __post_init__(self) -> None:
        self.cells = np.ascontiguousarray(self.cells, dtype=float)
        if self.cells.shape != (4, self.grid.n_cells):
            raise ConfigError(
                f"cells must have shape (4, {self.grid.n_cells}), "
                f"got {self.cells.shape}"
            )

    def copy(self) -> "Field":
        return Field(self.grid, self.cells.copy(), self.boundary, self.time)

    @property
    def u(self) -> np.ndarray:
        return self.cells[IU]

    @property
    def psi(self) -> np.ndarray:
        return self.cells[IPSI]

    @property
    def w(self) -> np.ndarray:
        return self.cells[IW]

    @property
    def p(self) -> np.ndarray:
        return self.cells[IP]


def constant_field(grid: Grid, value: StateVec,
                   boundary: BoundaryKind = BoundaryKind.PERIODIC) -> Field:
    cells = np.tile(value.as_array()[:, None], (1, grid.n_cells))
    return Field(grid, cells, boundary)
