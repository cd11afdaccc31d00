"""Experiment configuration: INI-style parsing with catalog presets.

A config document has up to four sections.  Every key is optional except
run.case; missing values fall back to the case preset.

    [run]
    case = soliton1
    t_final = 4.0
    boundary = periodic
    [domain]
    x_left = -2.0
    x_right = 2.0
    n_cells = 1000
    [params]
    alpha = 1000.0
    beta = 1e-06        ; or "auto" for beta = |gamma| / alpha
    gamma = -0.01
    epsilon = 0.0
    cfl = 0.9
    [output]
    cadence = 0.5       ; output interval in simulated time
    directory = out
    [profile]
    V = 1.0             ; forwarded to the profile constructor

Unknown sections or keys are rejected.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, field as dc_field

from .catalog import Setup, build_setup, get_preset
from .core import BoundaryKind, ConfigError

_KNOWN = {
    "run": {"case", "t_final", "boundary"},
    "domain": {"x_left", "x_right", "n_cells"},
    "params": {"alpha", "beta", "gamma", "epsilon", "cfl"},
    "output": {"cadence", "directory"},
    "profile": None,  # free-form, forwarded to the profile
}


@dataclass(frozen=True)
class RunConfig:
    """Validated experiment description (fully deterministic, seedless)."""

    case: str
    t_final: float | None = None
    boundary: str | None = None
    x_left: float | None = None
    x_right: float | None = None
    n_cells: int | None = None
    alpha: float | None = None
    beta: object = None  # float or "auto"
    gamma: float | None = None
    epsilon: float | None = None
    cfl: float = 0.9
    cadence: float | None = None
    directory: str = "out"
    profile_params: dict = dc_field(default_factory=dict)


def _number(section: str, key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{section}.{key} must be a number, got '{raw}'")


def parse_config(text: str) -> RunConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    cp.optionxform = str  # profile parameter names are case-sensitive
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}")
    for section in cp.sections():
        if section not in _KNOWN:
            raise ConfigError(f"unknown section [{section}]")
        allowed = _KNOWN[section]
        if allowed is not None:
            for key in cp[section]:
                if key not in allowed:
                    raise ConfigError(f"unknown key {section}.{key}")
    if not cp.has_option("run", "case"):
        raise ConfigError("run.case is required")
    case = cp.get("run", "case")
    get_preset(case)  # unknown case fails early

    kw: dict = {"case": case}
    if cp.has_option("run", "t_final"):
        kw["t_final"] = _number("run", "t_final", cp.get("run", "t_final"))
    if cp.has_option("run", "boundary"):
        b = cp.get("run", "boundary")
        if b not in ("periodic", "pseudo_neumann"):
            raise ConfigError(
                "run.boundary must be 'periodic' or 'pseudo_neumann'")
        kw["boundary"] = b
    for key in ("x_left", "x_right"):
        if cp.has_option("domain", key):
            kw[key] = _number("domain", key, cp.get("domain", key))
    if cp.has_option("domain", "n_cells"):
        n = _number("domain", "n_cells", cp.get("domain", "n_cells"))
        if n != int(n) or int(n) < 4:
            raise ConfigError("domain.n_cells must be an integer >= 4")
        kw["n_cells"] = int(n)
    if cp.has_option("params", "beta"):
        raw = cp.get("params", "beta")
        kw["beta"] = "auto" if raw == "auto" else _number(
            "params", "beta", raw)
        if kw["beta"] != "auto" and kw["beta"] <= 0:
            raise ConfigError("beta must be positive")
    for key, check, msg in (
            ("alpha", lambda v: v > 0, "alpha must be positive"),
            ("gamma", lambda v: v != 0, "gamma must be nonzero"),
            ("epsilon", lambda v: v >= 0, "epsilon must be nonnegative"),
            ("cfl", lambda v: 0 < v <= 1, "cfl must lie in (0, 1]")):
        if cp.has_option("params", key):
            v = _number("params", key, cp.get("params", key))
            if not check(v):
                raise ConfigError(msg)
            kw[key] = v
    if cp.has_option("output", "cadence"):
        v = _number("output", "cadence", cp.get("output", "cadence"))
        if v <= 0:
            raise ConfigError("output.cadence must be positive")
        kw["cadence"] = v
    if cp.has_option("output", "directory"):
        kw["directory"] = cp.get("output", "directory")
    if cp.has_section("profile"):
        kw["profile_params"] = {
            k: (v if any(c.isalpha() and c not in "eE+-." for c in v)
                else _number("profile", k, v))
            for k, v in cp["profile"].items()}
    return RunConfig(**kw)


def render(config: RunConfig) -> str:
    """Inverse of parse_config: parse_config(render(c)) == c."""
    cp = configparser.ConfigParser()
    cp.optionxform = str
    cp["run"] = {"case": config.case}
    if config.t_final is not None:
        cp["run"]["t_final"] = repr(config.t_final)
    if config.boundary is not None:
        cp["run"]["boundary"] = config.boundary
    dom = {}
    if config.x_left is not None:
        dom["x_left"] = repr(config.x_left)
    if config.x_right is not None:
        dom["x_right"] = repr(config.x_right)
    if config.n_cells is not None:
        dom["n_cells"] = str(config.n_cells)
    if dom:
        cp["domain"] = dom
    par = {}
    for key in ("alpha", "beta", "gamma", "epsilon"):
        v = getattr(config, key)
        if v is not None:
            par[key] = v if isinstance(v, str) else repr(v)
    if config.cfl != 0.9:
        par["cfl"] = repr(config.cfl)
    if par:
        cp["params"] = par
    out = {}
    if config.cadence is not None:
        out["cadence"] = repr(config.cadence)
    if config.directory != "out":
        out["directory"] = config.directory
    if out:
        cp["output"] = out
    if config.profile_params:
        cp["profile"] = {k: (v if isinstance(v, str) else repr(v))
                         for k, v in config.profile_params.items()}
    buf = io.StringIO()
    cp.write(buf)
    return buf.getvalue()


def resolve(config: RunConfig) -> Setup:
    """Turn a RunConfig into a runnable Setup via the catalog."""
    domain = None
    if config.x_left is not None or config.x_right is not None:
        preset = get_preset(config.case)
        domain = (preset.domain[0] if config.x_left is None else config.x_left,
                  preset.domain[1] if config.x_right is None
                  else config.x_right)
    boundary = None
    if config.boundary is not None:
        boundary = BoundaryKind(config.boundary)
    return build_setup(
        config.case, n_cells=config.n_cells, t_final=config.t_final,
        domain=domain, alpha=config.alpha, beta=config.beta,
        gamma=config.gamma, epsilon=config.epsilon, cfl=config.cfl,
        boundary=boundary, profile_params=config.profile_params)
