import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import simpson, trapezoid

from wavecs.errors import InvalidDomain, NonConvergence, SlowDecay
from wavecs.numerics import (
    DEFAULT_SPEC,
    QuadratureSpec,
    fd_derivative,
    finite_complex,
    integrate_gaussian_weighted,
    integrate_interval,
    integrate_plane,
    integrate_semi_infinite,
)


def test_spec_defaults():
    s = QuadratureSpec()
    assert (s.abs_tol, s.rel_tol, s.max_subdivisions, s.oscillation_freq_hint) == (1e-12, 1e-10, 2000, 0.0)


@pytest.mark.parametrize("kw", [dict(abs_tol=0), dict(rel_tol=-1), dict(max_subdivisions=0),
                                dict(oscillation_freq_hint=-1.0)])
def test_spec_rejects_bad_fields(kw):
    with pytest.raises(InvalidDomain):
        QuadratureSpec(**kw)


def test_finite_complex_rejects_nan():
    with pytest.raises(ArithmeticError):
        finite_complex(float("nan"))
    assert finite_complex(2) == 2 + 0j


def test_gaussian_weighted_examples():
    assert abs(integrate_gaussian_weighted(np.ones_like, 0.0, 1.0) - math.sqrt(math.pi)) < 1e-13
    eps, c = 0.7, 1.3
    assert abs(integrate_gaussian_weighted(lambda u: u, c, eps) - c * math.sqrt(math.pi / eps)) < 1e-12
    got = integrate_gaussian_weighted(np.exp, 0.0, eps)
    exact = math.sqrt(math.pi / eps) * math.exp(1 / (4 * eps))
    assert abs(got - exact) < 1e-10 * exact
    # trapezoid cross-check
    u = np.linspace(-40, 40, 400001)
    trap = trapezoid(np.exp(u - eps * u**2), x=u)
    assert abs(got - trap) < 1e-9 * exact


def test_gaussian_weighted_bad_variance():
    with pytest.raises(InvalidDomain):
        integrate_gaussian_weighted(np.ones_like, 0.0, 0.0)


def test_semi_infinite_examples():
    assert abs(integrate_semi_infinite(lambda u: np.exp(-u), 0.0) - 1.0) < 1e-12
    lg = lambda u: np.exp(-np.log(u) ** 2)
    exact = math.sqrt(math.pi) * math.exp(0.25)
    assert abs(integrate_semi_infinite(lg, 0.0, log_substitution=True) - exact) < 1e-11
    u = np.linspace(0.0, 12.0, 120001)
    oracle = simpson(np.exp(-u**2 - 1j * u), x=u)
    got = integrate_semi_infinite(lambda u: np.exp(-u**2 - 1j * u), 0.0, DEFAULT_SPEC.with_hint(1.0))
    assert abs(got - oracle) < 1e-10


def test_semi_infinite_slow_decay():
    with pytest.raises(SlowDecay):
        integrate_semi_infinite(lambda u: 1.0 / (1.0 + u) ** 0.5, 0.0)


def test_budget_exhaustion():
    spec = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=1)
    with pytest.raises(NonConvergence):
        integrate_interval(lambda u: np.abs(u - 0.3123) ** 0.5, 0.0, 1.0, spec)


def test_plane_examples():
    w = 1.0
    assert abs(integrate_plane(lambda z: np.exp(-np.abs(z) ** 2) / math.pi, w) - 1.0) < 1e-12
    assert abs(integrate_plane(lambda z: z * np.exp(-np.abs(z) ** 2), w)) < 1e-12
    assert abs(integrate_plane(lambda z: np.abs(z) ** 2 * np.exp(-np.abs(z) ** 2) / math.pi, w) - 1.0) < 1e-12


def test_fd_examples():
    assert abs(fd_derivative(lambda x: x**2, 3.0, 1, 1e-3) - 6.0) < 1e-9
    assert abs(fd_derivative(lambda x: np.exp(1j * x), 0.0, 2, 1e-3) + 1.0) < 1e-8
    assert abs(fd_derivative(np.sin, math.pi / 4, 1, 1e-3) - math.cos(math.pi / 4)) < 1e-10
    with pytest.raises(InvalidDomain):
        fd_derivative(np.sin, 0.0, 1, 0.0)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=5, max_size=5), st.floats(-2, 2))
def test_fd_exact_on_quartics(coef, at):
    p = np.polynomial.Polynomial(coef)
    scale = 1.0 + sum(abs(c) for c in coef) * (1 + abs(at)) ** 4
    assert abs(fd_derivative(p, at, 1) - p.deriv(1)(at)) <= 1e-9 * scale
    assert abs(fd_derivative(p, at, 2) - p.deriv(2)(at)) <= 1e-9 * scale * 1e3


@settings(max_examples=25, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(0.2, 3.0), st.floats(-2, 2))
def test_linearity(a, b, eps, c):
    f = lambda u: np.cos(u)
    g = lambda u: u**2
    lhs = integrate_gaussian_weighted(lambda u: a * f(u) + b * g(u), c, eps)
    rhs = a * integrate_gaussian_weighted(f, c, eps) + b * integrate_gaussian_weighted(g, c, eps)
    assert abs(lhs - rhs) <= 2 * (DEFAULT_SPEC.abs_tol + DEFAULT_SPEC.rel_tol * abs(rhs)) + 1e-12


@settings(max_examples=20, deadline=None)
@given(st.floats(0.3, 3.0), st.floats(0.0, 6.0))
def test_refinement_consistency(mu, k):
    f = lambda u: np.exp(-mu * np.log(u) ** 2 - 1j * k * u)
    loose = integrate_semi_infinite(f, 0.0, QuadratureSpec(1e-10, 1e-8).with_hint(k), log_substitution=True)
    tight = integrate_semi_infinite(f, 0.0, QuadratureSpec(5e-11, 5e-9).with_hint(k), log_substitution=True)
    assert abs(loose - tight) < 1e-8 * max(1.0, abs(tight))
