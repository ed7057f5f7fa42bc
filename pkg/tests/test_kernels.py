import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wavecs import kernels
from wavecs.errors import NonConvergence
from wavecs.numerics import integrate_semi_infinite, DEFAULT_SPEC

compiled = pytest.mark.skipif(kernels.osc_lognormal_compiled is None, reason="extension not built")


def closed_form(p, mu, lam):
    # beta = k = 0: complete the square in ln u
    return math.sqrt(math.pi / mu) * math.exp((p + 1) * lam + (p + 1) ** 2 / (4 * mu))


def evaluate(fn, *args):
    val, log_peak = fn(*args)
    return val * math.exp(log_peak)


@pytest.mark.parametrize("p,mu,lam", [(0.0, 1.0, 0.0), (0.5, 4.0, 1.2), (2.5, 0.5, -0.7)])
def test_python_backend_closed_form(p, mu, lam):
    got = evaluate(kernels.osc_lognormal_python, p, mu, lam, 0.0, 0.0)
    exact = closed_form(p, mu, lam)
    assert abs(got - exact) < 1e-11 * exact


@compiled
@settings(max_examples=30, deadline=None)
@given(st.floats(0.0, 2.5), st.floats(2.0, 8.0), st.floats(-1.5, 1.0),
       st.floats(-5.0, 5.0), st.floats(-15.0, 15.0))
def test_backends_agree(p, mu, lam, beta, k):
    a = evaluate(kernels.osc_lognormal_python, p, mu, lam, beta, k)
    b = evaluate(kernels.osc_lognormal_compiled, p, mu, lam, beta, k)
    scale = closed_form(p, mu, lam)
    assert abs(a - b) <= 1e-10 * scale


@settings(max_examples=15, deadline=None)
@given(st.floats(0.5, 4.0), st.floats(-1.0, 1.5), st.floats(0.0, 8.0))
def test_matches_generic_quadrature(mu, lam, k):
    f = lambda u: np.exp(-mu * (np.log(u) - lam) ** 2 - 1j * k * u)
    ref = integrate_semi_infinite(f, 0.0, DEFAULT_SPEC.with_hint(k), log_substitution=True)
    got = evaluate(kernels.osc_lognormal, 0.0, mu, lam, 0.0, k)
    assert abs(got - ref) < 1e-10 * closed_form(0.0, mu, lam)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("fn", [kernels.osc_lognormal_python,
                                pytest.param(kernels.osc_lognormal_compiled, marks=compiled)])
def test_unresolvable_phase_raises(fn):
    with pytest.raises(NonConvergence):
        fn(2.7, 0.64, 1.64, 1.64, 0.0)
