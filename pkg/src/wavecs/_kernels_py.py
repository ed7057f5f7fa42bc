"""Pure-numpy implementation of the log-normal oscillatory kernel.

Mirrors ``_kernels.pyx`` step for step; used when the compiled module is
unavailable or ``WAVECS_PURE_PYTHON`` is set.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import NonConvergence
from .numerics import QuadratureSpec, _adaptive

MAX_PANELS = 1_000_000


def lognormal_window(p, mu, lam, abs_tol):
    """Peak position, log-peak and half-width of the v = ln u envelope."""
    a = p + 1.0
    vstar = lam + a / (2.0 * mu)
    log_peak = a * lam + a * a / (4.0 * mu)
    half = math.sqrt((-math.log(abs_tol) + 2.0) / mu)
    return vstar, log_peak, half


def panel_edges(lo, hi, beta, k):
    """Panel edges in v: each panel spans at most half a local oscillation.

    Uses the stretched coordinate s(v) = c v + (|beta| e^{2v} + |k| e^v)/pi
    and places one panel per unit of s.
    """
    c = 16.0 / (hi - lo)
    ab, ak = abs(beta), abs(k)

    def s_of(v):
        return c * v + (ab * np.exp(2.0 * v) + ak * np.exp(v)) / math.pi

    def ds(v):
        return c + (2.0 * ab * np.exp(2.0 * v) + ak * np.exp(v)) / math.pi

    s_lo, s_hi = s_of(lo), s_of(hi)
    if s_hi - s_lo > MAX_PANELS:
        raise NonConvergence(f"{s_hi - s_lo:.3g} oscillation panels needed (cap {MAX_PANELS})")
    n = int(math.ceil(s_hi - s_lo))
    targets = s_lo + np.arange(1, n) * ((s_hi - s_lo) / n)
    v = np.full(targets.shape, hi)
    for _ in range(200):
        step = (s_of(v) - targets) / ds(v)
        v -= step
        if step.size == 0 or np.max(np.abs(step)) < 1e-13:
            break
    return np.concatenate(([lo], v, [hi]))


def osc_lognormal(p, mu, lam, beta, k, abs_tol=1e-12, rel_tol=1e-10, max_sub=2000):
    """Return ``(I, log_peak)`` with the integral equal to ``exp(log_peak) * I``.

    The integral is ``int_0^inf u^p exp(-mu (ln u - lam)^2) exp(-i(beta u^2 + k u)) du``.
    """
    a = p + 1.0
    vstar, log_peak, half = lognormal_window(p, mu, lam, abs_tol)
    edges = panel_edges(vstar - half, vstar + half, beta, k)

    def h(v):
        ev = np.exp(v)
        return np.exp(a * v - mu * (v - lam) ** 2 - log_peak) * np.exp(
            -1j * (beta * ev * ev + k * ev))

    spec = QuadratureSpec(abs_tol=abs_tol, rel_tol=rel_tol, max_subdivisions=max_sub)
    return _adaptive(h, edges, spec), log_peak
