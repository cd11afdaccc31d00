"""End-to-end acceptance gate.

One test per headline capability, each printing a single PASS/FAIL line
(visible with `pytest -s` or in the verbose test report).  Tolerances are
fixed here and are not to be loosened to make a run pass.
"""

import math
import sys

import numpy as np
import pytest

from relaxwave.config import RunConfig
from relaxwave.core import (
    BoundaryKind,
    Field,
    Grid,
    ModelParams,
    StateVec,
    constant_field,
    make_flux_model,
)
from relaxwave.diagnostics import shock_position
from relaxwave.initial_data import make_profile, prepare_initial
from relaxwave.model import (
    eigenvalues,
    entropy_gradient,
    entropy_flux,
    jacobian,
    riemann_invariants,
    source_vector,
)
from relaxwave.oracles import (
    TAU_MINUS,
    TAU_PLUS,
    dsw_envelope,
    dsw_modulus,
    elliptic_E,
    elliptic_K,
    energy_decay_reference,
    jacobi_dn,
    _whitham_velocity,
)
from relaxwave.runner import execute, sweep
from relaxwave.scheme import advance_to, implicit_source_solve, step
from relaxwave.config import resolve

RNG = np.random.default_rng(314159)


def _verdict(num: int, label: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {num:02d} {label}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line, file=sys.stderr, flush=True)
    assert ok, line


def test_criterion_01_analytic_structure():
    params = ModelParams(alpha=1e3, beta=1e-6, gamma=-1e-2)
    flux = make_flux_model("kdv6")
    states = 2.0 * RNG.standard_normal((4, 1000))

    # eigenvalues vs a dense solver at 1000 random states
    lam = eigenvalues(states, params, flux)
    eig_ok = True
    for j in range(1000):
        A = jacobian(states[:, j], params, flux)
        ref = np.sort(np.linalg.eigvals(A).real)
        scale = max(1.0, np.abs(ref).max())
        eig_ok &= bool(np.max(np.abs(np.sort(lam[:, j]) - ref)) / scale
                       < 1e-9)

    # entropy pair compatibility, FD gradients, 1e-5 relative
    h = 1e-6
    pair_ok = True
    for state in states[:, :100].T:
        A = jacobian(state, params, flux)
        gE = entropy_gradient(state, params, flux)
        gQ = np.empty(4)
        for k in range(4):
            e = np.zeros(4)
            e[k] = h
            gQ[k] = (entropy_flux(state + e, params, flux)
                     - entropy_flux(state - e, params, flux)) / (2 * h)
        scale = max(1.0, np.abs(gQ).max())
        pair_ok &= bool(np.max(np.abs(gE @ A - gQ)) / scale < 1e-5)

    # source orthogonality to 1e-14
    gE = entropy_gradient(states, params, flux)
    b = source_vector(states, params)
    scale = max(1.0, np.max(np.abs(gE)) * np.max(np.abs(b)))
    orth_ok = bool(np.max(np.abs(np.sum(gE * b, axis=0))) / scale < 1e-14)

    # Riemann invariant gradients as left eigenvectors to 1e-6
    ri_ok = True
    hh = 1e-4
    vb = params.v_beta
    for state in states[:, :25].T:
        A = jacobian(state, params, flux)
        fam = [-vb, 0.0, vb,
               float(flux.df(state[0])) + params.alpha * params.sgn_gamma]
        for k in range(4):
            grad = np.empty(4)
            for m in range(4):
                e = np.zeros(4)
                e[m] = hh
                grad[m] = (riemann_invariants(state + e, params, flux)[k]
                           - riemann_invariants(state - e, params,
                                                flux)[k]) / (2 * hh)
            resid = grad @ A - fam[k] * grad
            scale = max(1.0, np.abs(grad).max(), np.abs(grad @ A).max())
            ri_ok &= bool(np.max(np.abs(resid)) / scale < 1e-6)

    # implicit source residual <= 1e-12 at 1000 random right-hand sides
    rhs = RNG.standard_normal((4, 1000))
    dt = 1e-5
    x = implicit_source_solve(rhs, dt, params)
    r1 = x[1] - 0.5 * dt * (-params.alpha * x[2]) - rhs[1]
    r2 = x[2] - 0.5 * dt * (x[1] / params.beta) - rhs[2]
    scale = max(1.0, np.abs(x).max())
    imp_ok = bool(max(np.abs(r1).max(), np.abs(r2).max()) / scale < 1e-12)

    _verdict(1, "analytic structure",
             eig_ok and pair_ok and orth_ok and ri_ok and imp_ok)


def test_criterion_02_conservation_and_constancy():
    cfg = RunConfig(case="soliton1", t_final=0.5)
    setup = resolve(cfg)
    field = prepare_initial(setup.profile, setup.grid, setup.params,
                            setup.flux, setup.boundary)
    m0 = float(np.sum(field.u)) * setup.grid.dx
    rep = advance_to(field, setup.params, setup.flux, 0.5)
    m1 = float(np.sum(field.u)) * setup.grid.dx
    drift = abs(m1 - m0) / max(1.0, abs(m0))
    cons_ok = rep.n_steps >= 100_000 and drift < 1e-10

    g = Grid(-1.0, 1.0, 64)
    params = ModelParams(alpha=1e2, beta=1e-4, gamma=-1e-2, epsilon=1e-3)
    flux = make_flux_model("kdv6")
    f = constant_field(g, StateVec(0.4, 0.0, 0.0, 0.0), BoundaryKind.PERIODIC)
    for _ in range(50):
        step(f, params, flux)
    eq_ok = bool(np.max(np.abs(f.u - 0.4)) < 1e-13
                 and np.max(np.abs(f.cells[1:])) < 1e-13)

    _verdict(2, "conservation and constancy", cons_ok and eq_ok,
             f"mass drift {drift:.2e} over {rep.n_steps} steps")


def test_criterion_08_dsw_asymptotics_oracle():
    mod_ok = (abs(dsw_modulus(TAU_MINUS)) < 1e-8
              and abs(dsw_modulus(TAU_PLUS) - 1.0) < 1e-8)
    resid_ok = all(abs(_whitham_velocity(dsw_modulus(xi)) - xi) < 1e-9
                   for xi in np.linspace(-0.95, 0.62, 40))
    from scipy.integrate import quad
    quad_ok = True
    for s in (0.2, 0.5, 0.8, 0.95):
        K = quad(lambda t: 1 / math.sqrt(1 - s * s * math.sin(t) ** 2),
                 0, math.pi / 2, epsabs=1e-13)[0]
        E = quad(lambda t: math.sqrt(1 - s * s * math.sin(t) ** 2),
                 0, math.pi / 2, epsabs=1e-13)[0]
        quad_ok &= abs(elliptic_K(s) - K) < 1e-9
        quad_ok &= abs(elliptic_E(s) - E) < 1e-9
        # dn via its quarter-period value dn(K) = sqrt(1 - s^2)
        quad_ok &= abs(jacobi_dn(K, s) - math.sqrt(1 - s * s)) < 1e-9
    env_ok = all(
        abs((lambda e: e[1] - e[0])(dsw_envelope(xi))
            - 2 * dsw_modulus(xi) ** 2) < 1e-12
        for xi in np.linspace(-0.99, 0.66, 20))
    _verdict(8, "step-fan asymptotics oracle",
             mod_ok and resid_ok and quad_ok and env_ok)


def test_criterion_03_one_soliton_stability():
    rec = execute(RunConfig(case="soliton1", t_final=4.0, cadence=4.0))
    e_a = rec.scalars[-1]["e_a"]
    e_l2 = rec.scalars[-1]["e_l2_paper"]
    ok = e_a <= 2e-2 and e_l2 <= 0.1
    _verdict(3, "one-soliton amplitude and l2 error", ok,
             f"e_a {e_a:.3e}, e_l2 {e_l2:.3e}")


def test_criterion_04_two_soliton_energy_convergence():
    base = RunConfig(case="soliton2", t_final=5.0, alpha=2e3, beta=1e-6,
                     cadence=0.05)
    records, rows = sweep(base, "n_cells", [250, 500, 1000, 2000])
    errs = [max(abs(s["energy_error"]) for s in r.scalars) for r in records]
    orders = [math.log2(errs[i] / errs[i + 1]) for i in range(3)]
    ok = all(1.7 <= q <= 2.3 for q in orders[-2:])
    _verdict(4, "two-soliton energy order", ok,
             "orders " + ", ".join(f"{q:.3f}" for q in orders))


def test_criterion_05_alpha_scaling_eoc():
    values = [1e1, 1e2, 1e3]
    base = RunConfig(case="kdvb_tw", n_cells=4000, t_final=0.1, cadence=0.1)
    records, rows = sweep(base, "alpha_with_scaled_beta", values)
    errs = [r.scalars[-1]["e_l2_paper"] for r in records]
    orders = [math.log10(errs[i] / errs[i + 1]) for i in range(2)]

    # independent spatial-floor estimate: one decade stiffer
    floor_rec = execute(RunConfig(case="kdvb_tw", n_cells=4000, t_final=0.1,
                                  cadence=0.1, alpha=1e4, beta="auto"))
    floor = floor_rec.scalars[-1]["e_l2_paper"]

    checked = 0
    ok = True
    for k in range(2):
        saturated = errs[k] / errs[k + 1] < 1.2 or errs[k + 1] <= floor
        if not saturated:
            checked += 1
            ok &= 0.7 <= orders[k] <= 1.3
    ok &= checked >= 1
    _verdict(5, "stiffness-scaling order", ok,
             "errors " + ", ".join(f"{e:.3e}" for e in errs)
             + f", floor {floor:.3e}, orders "
             + ", ".join(f"{q:.3f}" for q in orders))


def test_criterion_06_energy_decay_law():
    cfg = RunConfig(case="kdvb_tw", t_final=5.0, cadence=0.25)
    rec = execute(cfg)
    setup = resolve(cfg)
    E = np.array([s["total_energy"] for s in rec.scalars])
    ref = energy_decay_reference(
        rec.times, rec.snapshots, setup.params, setup.flux, setup.grid.dx,
        float(E[0]),
        open_boundaries=setup.boundary is BoundaryKind.PSEUDO_NEUMANN)
    dev = float(np.max(np.abs(E - ref)) / abs(E[0]))
    _verdict(6, "diffusive energy decay law", dev <= 0.05,
             f"max relative deviation {dev:.3e}")


def test_criterion_07_undercompressive_front_speed():
    # the published rounded states (-4.47, 3.97) imply a front speed of
    # 18.02; the exact connection between the same far-field levels
    # travels measurably slower, so this pinned check documents the
    # discrepancy rather than hiding it
    t_final = 0.05
    cfg = RunConfig(case="mkdvb_uc", n_cells=4000, t_final=t_final,
                    cadence=t_final, alpha=1e3, beta=1e-6,
                    profile_params={"mode": "literal"})
    rec = execute(cfg)
    setup = resolve(cfg)
    field = Field(setup.grid, rec.snapshots[-1], setup.boundary,
                  time=rec.times[-1])
    pos = shock_position(field, -4.47, 3.97)
    target = 18.02 * t_final
    err = abs(pos - target)
    _verdict(7, "undercompressive front position", err <= 0.02,
             f"front at {pos:.3f}, pinned target {target:.3f}")


def test_criterion_09_riemann_fan_envelope():
    t_final = 0.75
    cfg = RunConfig(case="riemann_dsw", x_left=-4.0, x_right=1.0,
                    n_cells=4000, t_final=t_final, cadence=0.05)
    rec = execute(cfg)

    u = rec.snapshots[-1][0]
    x = rec.x
    xi = x / t_final
    sel = (xi >= -0.8) & (xi <= 0.5)
    within = 0
    for xx, uu in zip(x[sel], u[sel]):
        am, ap = dsw_envelope(xx / t_final)
        within += am - 0.1 <= uu <= ap + 0.1
    frac = within / max(1, int(np.sum(sel)))

    # leading-edge speed from the peak trajectory on t in [0.4, 0.75]
    ts, peaks = [], []
    for t, snap in zip(rec.times, rec.snapshots):
        if 0.4 <= t <= t_final + 1e-12:
            ts.append(t)
            peaks.append(x[int(np.argmax(snap[0]))])
    speed = float(np.polyfit(ts, peaks, 1)[0])
    speed_ok = abs(speed - 2.0 / 3.0) <= 0.15 * 2.0 / 3.0

    _verdict(9, "step-fan envelope containment", frac >= 0.95 and speed_ok,
             f"containment {100 * frac:.1f}%, leading speed {speed:.3f}")


@pytest.mark.parametrize("case", ["gardner_dark", "gardner_bright"])
def test_criterion_10_gardner_solitons(case):
    prof = make_profile(case)
    t_final = 100.0 / prof.speed  # one periodic transit of [-50, 50]
    cfg = RunConfig(case=case, n_cells=1000, t_final=t_final,
                    cadence=t_final)
    rec = execute(cfg)
    u0, uT = rec.snapshots[0][0], rec.snapshots[-1][0]
    linf = float(np.max(np.abs(uT - u0)))
    e0 = rec.scalars[0]["total_energy"]
    eT = rec.scalars[-1]["total_energy"]
    drift = abs(eT - e0) / abs(e0)
    ok = linf <= 5e-2 and drift <= 1e-2
    _verdict(10, f"{case} transit", ok,
             f"u drift {linf:.3e}, energy drift {drift:.3e}")
