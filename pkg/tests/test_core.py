"""Construction and validation of the basic value types."""

import numpy as np
import pytest

from relaxwave.core import (
    BoundaryKind,
    ConfigError,
    Field,
    Grid,
    ModelParams,
    StateVec,
    constant_field,
    make_flux_model,
    register_flux_model,
)


def test_state_vec_round_trip():
    s = StateVec(u=1.0, psi=-2.0, w=0.5, p=3.0)
    arr = s.as_array()
    assert arr.shape == (4,)
    assert StateVec.from_array(arr) == s


def test_params_derived_quantities():
    p = ModelParams(alpha=1e3, beta=1e-6, gamma=-1e-2)
    assert p.sgn_gamma == -1.0
    assert p.v_beta == pytest.approx(np.sqrt(1e-2 / 1e-6))
    q = ModelParams(alpha=1.0, beta=1.0, gamma=2.0)
    assert q.sgn_gamma == 1.0


@pytest.mark.parametrize("kwargs,msg", [
    (dict(alpha=0.0, beta=1e-6, gamma=-1e-2), "alpha must be positive"),
    (dict(alpha=-1.0, beta=1e-6, gamma=-1e-2), "alpha must be positive"),
    (dict(alpha=1e3, beta=0.0, gamma=-1e-2), "beta must be positive"),
    (dict(alpha=1e3, beta=1e-6, gamma=0.0), "gamma must be nonzero"),
    (dict(alpha=1e3, beta=1e-6, gamma=-1e-2, epsilon=-1.0),
     "epsilon must be nonnegative"),
    (dict(alpha=1e3, beta=1e-6, gamma=-1e-2, cfl=0.0), "cfl"),
    (dict(alpha=1e3, beta=1e-6, gamma=-1e-2, cfl=1.5), "cfl"),
])
def test_params_validation(kwargs, msg):
    with pytest.raises(ConfigError, match=msg):
        ModelParams(**kwargs)


def test_grid_geometry():
    g = Grid(x_left=-2.0, x_right=2.0, n_cells=8)
    assert g.dx == pytest.approx(0.5)
    assert g.length == pytest.approx(4.0)
    # cell centers, not interfaces
    assert g.centers[0] == pytest.approx(-1.75)
    assert g.centers[-1] == pytest.approx(1.75)
    assert len(g.centers) == 8


def test_grid_validation():
    with pytest.raises(ConfigError):
        Grid(x_left=1.0, x_right=-1.0, n_cells=10)
    with pytest.raises(ConfigError):
        Grid(x_left=0.0, x_right=1.0, n_cells=3)


def test_constant_field():
    g = Grid(x_left=0.0, x_right=1.0, n_cells=16)
    f = constant_field(g, StateVec(2.0, 0.0, -1.0, 0.5),
                       BoundaryKind.PERIODIC)
    assert f.cells.shape == (4, 16)
    assert np.all(f.u == 2.0)
    assert np.all(f.w == -1.0)
    c = f.copy()
    c.cells[0, 0] = 9.0
    assert f.cells[0, 0] == 2.0


def test_builtin_flux_models():
    u = np.linspace(-2.0, 2.0, 11)
    kdv = make_flux_model("kdv6")
    assert np.allclose(kdv.f(u), 3.0 * u ** 2)
    assert np.allclose(kdv.df(u), 6.0 * u)
    assert np.allclose(kdv.F(u), u ** 3)
    burgers = make_flux_model("burgers")
    assert np.allclose(burgers.f(u), 0.5 * u ** 2)
    cubic = make_flux_model("cubic")
    assert np.allclose(cubic.f(u), u ** 3 / 3.0)
    mkdv = make_flux_model("mkdv")
    assert np.allclose(mkdv.f(u), u ** 3)
    gard = make_flux_model("gardner", k=2.0)
    assert np.allclose(gard.f(u), 3.0 * u ** 2 - 4.0 * u ** 3)
    assert np.allclose(gard.df(u), 6.0 * u - 12.0 * u ** 2)


def test_flux_primitive_vanishes_at_zero():
    for name in ("kdv6", "burgers", "cubic", "mkdv"):
        assert make_flux_model(name).F(0.0) == pytest.approx(0.0)
    assert make_flux_model("gardner", k=1.0).F(0.0) == pytest.approx(0.0)


def test_unknown_flux_rejected():
    with pytest.raises(ConfigError):
        make_flux_model("quartic")


def test_register_custom_flux():
    from relaxwave.core import FluxModel
    register_flux_model(FluxModel(
        name="linear_test",
        f=lambda u: 2.0 * np.asarray(u, float),
        df=lambda u: np.full_like(np.asarray(u, float), 2.0),
        F=lambda u: np.asarray(u, float) ** 2,
        poly=(2.0, 0.0, 0.0)))
    m = make_flux_model("linear_test")
    assert m.f(3.0) == pytest.approx(6.0)
    assert m.df(0.0) == pytest.approx(2.0)
