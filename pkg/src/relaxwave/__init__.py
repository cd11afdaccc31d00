"""Finite-volume solver for hyperbolic relaxation approximations of
dispersive and diffusive-dispersive scalar balance laws

    u_t + f(u)_x = epsilon u_xx + gamma u_xxx.

The scalar law is lifted to a 4x4 first-order system in (u, psi, w, p)
with a stiff relaxation source; a two-step Lax-Wendroff scheme with a
semi-implicit source integrates the system, and an explicit diffusion
stage covers epsilon > 0.
"""

from .core import (BlowupError, BoundaryKind, ConfigError,
                   DegenerateStateError, DomainError, Field, FluxModel,
                   Grid, ModelParams, StateVec, make_flux_model,
                   register_flux_model)
from .catalog import build_setup, case_names, get_preset
from .config import RunConfig, parse_config, render
from .initial_data import Profile, make_profile, prepare_initial, \
    two_soliton_exact
from .runner import execute, sweep
from .scheme import run, step

__all__ = [
    "BlowupError", "BoundaryKind", "ConfigError", "DegenerateStateError",
    "DomainError", "Field", "FluxModel", "Grid", "ModelParams", "StateVec",
    "make_flux_model", "register_flux_model", "build_setup", "case_names",
    "get_preset", "RunConfig", "parse_config", "render", "Profile",
    "make_profile", "prepare_initial", "two_soliton_exact", "execute",
    "sweep", "run", "step",
]

__version__ = "0.1.0"
