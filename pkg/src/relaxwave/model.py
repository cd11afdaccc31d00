"""Analytic structure of the 4x4 relaxation system.

State U = (u, psi, w, p).  With s = sgn(gamma) and v = sqrt(|gamma|/beta)
the homogeneous system is U_t + f(U)_x = b(U) where

    f(U) = (f(u) + s psi, alpha (f(u) + s psi), -v^2 p, -w)
    b(U) = (0, -alpha w, psi / beta, 0)

All functions accept (4,) vectors or (4, N) arrays in the `cells` slot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import IU, IPSI, IW, IP, FluxModel, ModelParams


def flux_vector(cells: np.ndarray, params: ModelParams,
                flux: FluxModel) -> np.ndarray:
    u, psi, w, p = cells[IU], cells[IPSI], cells[IW], cells[IP]
    s = params.sgn_gamma
    fu = flux.f(u) + s * psi
    out = np.empty_like(cells)
    out[IU] = fu
    out[IPSI] = params.alpha * fu
    out[IW] = -params.v_beta ** 2 * p
    out[IP] = -w
    return out


def source_vector(cells: np.ndarray, params: ModelParams) -> np.ndarray:
    out = np.zeros_like(cells)
    out[IPSI] = -params.alpha * cells[IW]
    out[IP] = 0.0
    out[IW] = cells[IPSI] / params.beta
    return out


def jacobian(state: np.ndarray, params: ModelParams,
             flux: FluxModel) -> np.ndarray:
    """Jacobian of the flux vector at a single state (4,)."""
    dfu = float(flux.df(state[IU]))
    s = float(params.sgn_gamma)
    v2 = params.v_beta ** 2
    a = params.alpha
    return np.array([
        [dfu, s, 0.0, 0.0],
        [a * dfu, a * s, 0.0, 0.0],
        [0.0, 0.0, 0.0, -v2],
        [0.0, 0.0, -1.0, 0.0],
    ])


@dataclass(frozen=True)
class EigenSet:
    """Wave speeds and (right-column / left-row) eigenvector matrices."""

    speeds: np.ndarray
    right: np.ndarray
    left: np.ndarray


def eigenvalues(cells: np.ndarray, params: ModelParams,
                flux: FluxModel) -> np.ndarray:
    """Speeds (-v, 0, v, f'(u) + alpha sgn(gamma)), stacked on axis 0."""
    u = np.asarray(cells[IU], dtype=float)
    v = params.v_beta
    lam4 = flux.df(u) + params.alpha * params.sgn_gamma
    out = np.empty((4,) + u.shape)
    out[0] = -v
    out[1] = 0.0
    out[2] = v
    out[3] = lam4
    return out


def eigensystem(state: np.ndarray, params: ModelParams,
                flux: FluxModel) -> EigenSet:
    """Full eigendecomposition at one state, normalised so left @ right = I."""
    dfu = float(flux.df(state[IU]))
    s = float(params.sgn_gamma)
    v = params.v_beta
    a = params.alpha
    lam = np.array([-v, 0.0, v, dfu + a * s])
    right = np.array([
        [0.0, -s, 0.0, 1.0],
        [0.0, dfu, 0.0, a],
        [v, 0.0, -v, 0.0],
        [1.0, 0.0, 1.0, 0.0],
    ])
    # unnormalised left rows; lam4 - lam2 = dfu + a s - 0 etc.
    left = np.array([
        [0.0, 0.0, 1.0, v],
        [a, -1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, -v],
        [s * dfu, 1.0, 0.0, 0.0],
    ])
    scale = np.einsum("ij,ji->i", left, right)
    left = left / scale[:, None]
    return EigenSet(speeds=lam, right=right, left=left)


def max_signal_speed(cells: np.ndarray, params: ModelParams,
                     flux: FluxModel) -> float:
    return float(np.max(np.abs(eigenvalues(cells, params, flux))))


def riemann_invariants(cells: np.ndarray, params: ModelParams,
                       flux: FluxModel) -> np.ndarray:
    """Strong Riemann invariants, one row per characteristic family."""
    u, psi, w, p = cells[IU], cells[IPSI], cells[IW], cells[IP]
    v = params.v_beta
    s = params.sgn_gamma
    out = np.empty_like(np.asarray(cells, dtype=float))
    out[0] = w + v * p
    out[1] = params.alpha * u - psi
    out[2] = w - v * p
    out[3] = s * flux.f(u) + psi
    return out


def entropy(cells: np.ndarray, params: ModelParams,
            flux: FluxModel) -> np.ndarray:
    """Entropy density sgn(gamma) F(u) + |gamma| p^2/2 + psi^2/(2a) + b w^2/2."""
    u, psi, w, p = cells[IU], cells[IPSI], cells[IW], cells[IP]
    return (params.sgn_gamma * flux.F(u)
            + abs(params.gamma) * p * p / 2.0
            + psi * psi / (2.0 * params.alpha)
            + params.beta * w * w / 2.0)


def entropy_flux(cells: np.ndarray, params: ModelParams,
                 flux: FluxModel) -> np.ndarray:
    u, psi, w, p = cells[IU], cells[IPSI], cells[IW], cells[IP]
    fu = flux.f(u)
    s = params.sgn_gamma
    # the sgn(gamma) on f^2/2 pairs with sgn(gamma) F(u) in the entropy;
    # without it grad(E) . Df = grad(Q) fails for gamma < 0
    return (s * fu * fu / 2.0 + fu * psi + s * psi * psi / 2.0
            - abs(params.gamma) * p * w)


def entropy_gradient(cells: np.ndarray, params: ModelParams,
                     flux: FluxModel) -> np.ndarray:
    u, psi, w, p = cells[IU], cells[IPSI], cells[IW], cells[IP]
    out = np.empty_like(cells)
    out[IU] = params.sgn_gamma * flux.f(u)
    out[IPSI] = psi / params.alpha
    out[IW] = params.beta * w
    out[IP] = abs(params.gamma) * p
    return out


def relative_entropy(cells: np.ndarray, ref: np.ndarray, params: ModelParams,
                     flux: FluxModel) -> np.ndarray:
    """Quadratic-in-perturbation entropy distance between two states."""
    u, psi, w, p = cells[IU], cells[IPSI], cells[IW], cells[IP]
    ub, psib, wb, pb = ref[IU], ref[IPSI], ref[IW], ref[IP]
    s = params.sgn_gamma
    return (s * (flux.F(u) - flux.F(ub) - flux.f(ub) * (u - ub))
            + abs(params.gamma) * (p - pb) ** 2 / 2.0
            + params.beta * (w - wb) ** 2 / 2.0
            + (psi - psib) ** 2 / (2.0 * params.alpha))
