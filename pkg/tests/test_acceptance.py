"""End-to-end acceptance checks; each test prints one PASS/FAIL line."""
import filecmp
import json
import math
import time

import numpy as np
import pytest

from wavecs import classical_paa as cp
from wavecs import figio
from wavecs import linear_cs as lc
from wavecs import paa_cs as pc

RNG_SEED = 1234


def random_states(rng, n):
    out = []
    for _ in range(n):
        coeffs = lc.MotionIntegralCoeffs.hyperbolic(rng.uniform(0, 1.2), *rng.uniform(-math.pi, math.pi, 2))
        out.append((lc.CSLabel(complex(*rng.normal(0, 1.5, 2)), coeffs), rng.uniform(0, 1)))
    return out


@pytest.fixture(scope="module")
def figure_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("figs")
    times = {}
    for name in ("fig1", "fig2", "fig3"):
        t0 = time.perf_counter()
        assert figio.main([name, "--out", str(d / f"{name}.csv")]) == 0
        times[name] = time.perf_counter() - t0
    return d, times


def test_c01_uncertainty_invariant(criterion):
    t0 = time.perf_counter()
    rng = np.random.default_rng(RNG_SEED)
    model = lc.LinearModel(1.7)
    states = random_states(rng, 100)
    closed = max(abs(lc.moments(model, lab, t).J - 0.25) for lab, t in states)
    quad = max(abs(lc.moments_quadrature(model, lab, t).J - 0.25) for lab, t in states)
    dt = time.perf_counter() - t0
    criterion(1, "J = 1/4", closed <= 1e-12 and quad <= 1e-7 and dt < 10,
              f"closed={closed:.2e} quad={quad:.2e} t={dt:.1f}s")


def test_c02_schrodinger_residual(criterion):
    t0 = time.perf_counter()
    model, label = lc.FIG1_MODEL, lc.fig1_label()
    x = np.linspace(-2, 2, 401)
    res = max(lc.schrodinger_residual(model, label, t, x) for t in np.linspace(0, 0.05, 10))
    dt = time.perf_counter() - t0
    criterion(2, "Schrodinger residual", res < 1e-6 and dt < 30, f"max={res:.2e} t={dt:.1f}s")


def test_c03_eigenvalue_residual(criterion):
    model, label = lc.FIG1_MODEL, lc.fig1_label()
    x = np.linspace(-2, 2, 401)
    res = max(lc.eigen_residual(model, label, t, x) for t in np.linspace(0, 0.05, 10))
    criterion(3, "eigenvalue residual", res < 1e-7, f"max={res:.2e}")


def test_c04_mean_position(criterion, figure_files):
    model, label = lc.FIG1_MODEL, lc.fig1_label()
    err = max(abs(lc.moments_quadrature(model, label, t).x_mean
                  - (label.x0 + label.p0 * t - math.sqrt(2) * model.b * t * t))
              for t in (0.0, 0.01, 0.02, 0.03, 0.04, 0.05))
    d, _ = figure_files
    _, _, rows = figio.read_table(str(d / "fig1.csv"))
    _, _, traj = figio.read_table(str(d / "fig1_trajectory.csv"))
    taus = np.unique(rows[:, 0])
    xs = rows[: rows.shape[0] // taus.size, 1]
    ridge = xs[rows[:, 2].reshape(taus.size, xs.size).argmax(axis=1)]
    cells = np.max(np.abs(ridge - traj[:, 1])) / (xs[1] - xs[0])
    criterion(4, "mean position tracks parabola", err < 1e-7 and cells <= 1.0,
              f"err={err:.2e} ridge={cells:.2f} cells")


def test_c05_overlap_law(criterion):
    rng = np.random.default_rng(RNG_SEED + 5)
    model = lc.LinearModel(-0.8)
    worst = 0.0
    for lab, t in random_states(rng, 20):
        other = lc.CSLabel(complex(*rng.normal(0, 1.5, 2)), lab.coeffs)
        worst = max(worst, abs(lc.overlap(lab, other) - lc.overlap_quadrature(model, lab, other, t)))
    criterion(5, "overlap law", worst < 1e-8, f"max={worst:.2e}")


def test_c06_reproducing_kernel(criterion):
    t0 = time.perf_counter()
    rng = np.random.default_rng(RNG_SEED + 6)
    worst = max(lc.kernel_completeness_check(lc.CSLabel(complex(*rng.normal(0, 1.5, 2)), lc.FIG1_COEFFS),
                                             lc.CSLabel(complex(*rng.normal(0, 1.5, 2)), lc.FIG1_COEFFS))
                for _ in range(10))
    dt = time.perf_counter() - t0
    criterion(6, "reproducing kernel", worst < 1e-8 and dt < 60, f"max={worst:.2e} t={dt:.1f}s")


def test_c07_canonical_map(criterion):
    amap = cp.PseudoActionMap.normal_law(1.0)
    grid = [(q, p) for q in np.linspace(-1, 1, 5) for p in np.linspace(1.5, 3, 5)]
    unit, inter = 0.0, 0.0
    for pot in (cp.PotentialModel.free(0.5), cp.PotentialModel.linear(1.0, 0.5)):
        for q, p in grid:
            unit = max(unit, cp.jacobian_check(q, p, pot, amap))
            inter = max(inter, abs(cp.intermediate_determinant(q, p, pot, amap)
                                   - amap.Jprime_of_E(pot.energy(q, p))))
    criterion(7, "canonical map", unit < 1e-6 and inter < 1e-6, f"|det-1|={unit:.2e} J'={inter:.2e}")


def test_c08_normal_law(criterion):
    vals = (0.5, 1.0, 2.0, 4.0)
    prob = mean = norm = 0.0
    for eps in vals:
        for eta in vals:
            m = pc.NormalLawModel(eps, eta, 1.0)
            for E in (0.3, 1.0, 5.0):
                prob = max(prob, abs(pc.quantize_action_function(m, np.ones_like, E) - 1.0))
                exact = math.exp(1 / (4 * m.mu)) * E
                mean = max(mean, abs(pc.energy_moment(m, 1.0, E) / exact - 1.0))
            for J in (-1.0, 0.0, 1.5):
                norm = max(norm, abs(pc.normalization_quadrature(m, J) / m.N(J) - 1.0))
    criterion(8, "normal-law conditions", prob <= 1e-10 and mean <= 1e-9 and norm <= 1e-9,
              f"prob={prob:.2e} mean={mean:.2e} N={norm:.2e}")


def test_c09_operator_multipliers(criterion):
    worst = 0.0
    ok = True
    for m in (pc.NormalLawModel(1.0, 1.0, 1.0), pc.NormalLawModel(0.5, 2.0, 1.0), pc.NormalLawModel(4.0, 0.5, 1.0)):
        for lam in (0.5, 1.0, 2.0, 3.0):
            for E in (0.5, 1.0, 3.0):
                exact = math.exp(lam * lam / (4 * m.mu)) * E**lam
                worst = max(worst, abs(pc.energy_moment(m, lam, E) / exact - 1.0))
            mult = pc.energy_power_multiplier(m, lam)
            # multiplier identity: <E^lam> = mult * <E>^lam
            ok &= math.isclose(math.exp(lam * lam / (4 * m.mu)), mult * math.exp(1 / (4 * m.mu)) ** lam,
                               rel_tol=1e-12)
    criterion(9, "operator multipliers", worst <= 1e-9 and ok, f"max rel={worst:.2e}")


def test_c10_action_kernel(criterion, tmp_path):
    worst = 0.0
    for m in (pc.NormalLawModel(1.0, 1.0, 1.0), pc.NormalLawModel(2.0, 0.7, 1.0), pc.NormalLawModel(0.5, 3.0, 1.0)):
        for E, E2 in ((1.0, 1.0), (0.4, 2.5), (3.0, 1.2)):
            worst = max(worst, abs(pc.action_kernel(m, E, E2) - pc.action_kernel_quadrature(m, E, E2)))
    out = tmp_path / "v.json"
    figio.main(["verify", "--out", str(out)])
    checks = {c["name"]: c for c in json.loads(out.read_text())["checks"]}
    flagged = checks["alt-action-kernel-exponent"]
    logged = flagged["informational"] and flagged["measured"] > 0
    criterion(10, "action kernel", worst <= 1e-10 and logged,
              f"max={worst:.2e} alternative gap={flagged['measured']:.3g} (informational)")


def test_c11_evolution(criterion):
    rng = np.random.default_rng(RNG_SEED + 11)
    worst = 0.0
    for _ in range(20):
        m = pc.NormalLawModel(*rng.uniform(0.5, 3.0, 2), rng.uniform(0.5, 2.0))
        lab = pc.PaaCSLabel(*rng.uniform(-2, 2, 2))
        worst = max(worst, pc.evolution_shift_check(m, lab, rng.uniform(-50, 50), np.linspace(1e-3, 40, 500)))
    criterion(11, "evolution covariance", worst < 1e-12, f"max={worst:.2e}")


def test_c12_fig2(criterion, figure_files):
    d, times = figure_files
    meta, header, rows = figio.read_table(str(d / "fig2.csv"))
    Jp, gp, dens = rows.T
    i = dens.argmax()
    cell = 10.0 / 100
    at_origin = abs(Jp[i]) <= cell and abs(gp[i]) <= cell
    model = pc.FIG2_MODEL
    ov = np.sqrt(dens / model.N(0.0))
    bounded = np.max(ov) <= 1 + 1e-9
    criterion(12, "Fig. 2 density", header == ["Jp", "gammap", "density"] and at_origin and bounded
              and times["fig2"] < 300,
              f"max at ({Jp[i]:g},{gp[i]:g}) max|ov|={np.max(ov):.12f} t={times['fig2']:.1f}s")


def test_c13_fig3(criterion, figure_files):
    d, times = figure_files
    _, _, rows = figio.read_table(str(d / "fig3.csv"))
    widths = {}
    nonneg = bool(np.all(rows[:, 2] >= 0))
    for g in pc.FIG3_GAMMAS:
        sel = rows[:, 0] == g
        _, _, var = pc.line_density_moments(rows[sel, 1], rows[sel, 2])
        widths[abs(g)] = var
    order = [widths[k] for k in sorted(widths)]
    spreading = all(a <= b for a, b in zip(order, order[1:]))
    m = pc.FIG3_MODEL
    bound_ok = all(abs(pc.F_transform(m, pc.PaaCSLabel(0.0, g), x)) <= pc.F_bound(m, pc.PaaCSLabel(0.0, g))
                   for g in pc.FIG3_GAMMAS for x in np.linspace(-20, 20, 41))
    criterion(13, "Fig. 3 line densities", nonneg and spreading and bound_ok and times["fig3"] < 300,
              "widths " + ", ".join(f"{w:.3f}" for w in order) + f" t={times['fig3']:.1f}s")


def test_c14_determinism(criterion, figure_files, tmp_path):
    d, _ = figure_files
    same = True
    for name in ("fig1", "fig2", "fig3"):
        again = tmp_path / f"{name}.csv"
        assert figio.main([name, "--out", str(again)]) == 0
        same &= filecmp.cmp(d / f"{name}.csv", again, shallow=False)
    same &= filecmp.cmp(d / "fig1_trajectory.csv", tmp_path / "fig1_trajectory.csv", shallow=False)
    criterion(14, "byte-identical reruns", same)
