"""Quadrature and finite-difference kernels.

Every integral in the package goes through the adaptive Gauss-Kronrod (7/15)
driver defined here. Integrands are called with numpy arrays and must be
vectorized; results are returned as Python ``complex``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .errors import InvalidDomain, NonConvergence, NonFiniteValue, SlowDecay

__all__ = [
    "QuadratureSpec",
    "DEFAULT_SPEC",
    "GK_NODES",
    "GK_WEIGHTS",
    "G_WEIGHTS",
    "finite_complex",
    "integrate_interval",
    "integrate_gaussian_weighted",
    "integrate_semi_infinite",
    "integrate_plane",
    "fd_derivative",
]

# Kronrod 15-point nodes on [-1, 1]; the 7-point Gauss rule sits on the odd indices.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

GK_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
GK_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
G_WEIGHTS = np.zeros(15)
# Gauss nodes are +-x[1], +-x[3], +-x[5], 0
for _i, _w in zip((1, 3, 5), _WG[:3]):
    G_WEIGHTS[_i] = _w
    G_WEIGHTS[14 - _i] = _w
G_WEIGHTS[7] = _WG[3]

_SCAN_LIMIT = 1.0e6


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for one quadrature call.

    ``oscillation_freq_hint`` is the largest angular frequency of the integrand
    in radians per unit of the integration variable; initial panels are capped
    at half a period.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    oscillation_freq_hint: float = 0.0

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise InvalidDomain("abs_tol and rel_tol must be positive")
        if self.max_subdivisions < 1:
            raise InvalidDomain("max_subdivisions must be >= 1")
        if not self.oscillation_freq_hint >= 0:
            raise InvalidDomain("oscillation_freq_hint must be >= 0")

    def with_hint(self, freq: float) -> "QuadratureSpec":
        return replace(self, oscillation_freq_hint=abs(float(freq)))

    def tighter(self, factor: float = 0.5) -> "QuadratureSpec":
        return replace(self, abs_tol=self.abs_tol * factor, rel_tol=self.rel_tol * factor)


DEFAULT_SPEC = QuadratureSpec()


def finite_complex(value) -> complex:
    """Convert to ``complex`` and reject NaN/Inf."""
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteValue(f"non-finite result {z!r}")
    return z


def _gk_panels(f, a, b):
    """Kronrod and Gauss estimates on each panel [a_i, b_i]."""
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    x = mid[:, None] + half[:, None] * GK_NODES[None, :]
    y = np.asarray(f(x), dtype=complex)
    if y.shape != x.shape:
        y = np.broadcast_to(y, x.shape)
    k = half * (y @ GK_WEIGHTS)
    g = half * (y @ G_WEIGHTS)
    return k, g


def _adaptive(f, edges, spec: QuadratureSpec) -> complex:
    edges = np.asarray(edges, dtype=float)
    a = edges[:-1].copy()
    b = edges[1:].copy()
    span = float(edges[-1] - edges[0])
    k, g = _gk_panels(f, a, b)
    err = np.abs(k - g)
    subdivisions = 0
    while True:
        total = k.sum()
        tol = max(spec.abs_tol, spec.rel_tol * abs(total))
        if not np.all(np.isfinite(err)):
            raise NonFiniteValue("integrand produced non-finite values")
        if err.sum() <= tol:
            return finite_complex(total)
        # bisect every panel carrying more than its proportional share of the budget
        share = tol * (b - a) / span
        bad = err > share
        if not bad.any():
            bad = err >= err.max()
        n_bad = int(bad.sum())
        subdivisions += n_bad
        if subdivisions > spec.max_subdivisions:
            raise NonConvergence(
                f"subdivision budget {spec.max_subdivisions} exhausted "
                f"(error estimate {err.sum():.3e} > {tol:.3e})"
            )
        ab, bb = a[bad], b[bad]
        mb = 0.5 * (ab + bb)
        na = np.concatenate([ab, mb])
        nb = np.concatenate([mb, bb])
        nk, ng = _gk_panels(f, na, nb)
        keep = ~bad
        a = np.concatenate([a[keep], na])
        b = np.concatenate([b[keep], nb])
        k = np.concatenate([k[keep], nk])
        g = np.concatenate([g[keep], ng])
        err = np.abs(k - g)


def _panel_edges(lo: float, hi: float, max_width: float, hint: float) -> np.ndarray:
    width = max_width
    if hint > 0:
        width = min(width, math.pi / hint)
    n = max(1, int(math.ceil((hi - lo) / width)))
    return np.linspace(lo, hi, n + 1)


def integrate_interval(f: Callable, lower: float, upper: float,
                       spec: QuadratureSpec = DEFAULT_SPEC,
                       panels: int = 1) -> complex:
    """Adaptive Gauss-Kronrod integral of ``f`` over a finite interval."""
    if lower == upper:
        return 0j
    sign = 1.0
    if upper < lower:
        lower, upper, sign = upper, lower, -1.0
    edges = _panel_edges(lower, upper, (upper - lower) / max(panels, 1),
                         spec.oscillation_freq_hint)
    return sign * _adaptive(f, edges, spec)


def _envelope_of(f: Callable, envelope: Optional[Callable]):
    if envelope is not None:
        return lambda x: np.abs(np.asarray(envelope(x), dtype=complex))
    return lambda x: np.abs(np.asarray(f(x), dtype=complex))


def _scan(env, start: float, step: float, direction: int, limit: float,
          threshold_rel: float) -> float:
    """Walk away from ``start`` until the envelope falls below
    ``threshold_rel`` times the running peak for a sustained stretch.

    Steps grow geometrically after the first 64 samples so the scan reaches
    ``limit`` in a bounded number of evaluations.
    """
    peak = 0.0
    pos = start
    h = step
    run = 0
    cut = None
    count = 0
    while abs(pos - start) <= limit:
        batch = pos + direction * h * np.arange(1, 33)
        vals = env(batch)
        for x, v in zip(batch, vals):
            count += 1
            if not math.isfinite(v):
                raise NonFiniteValue("non-finite integrand envelope during scan")
            if v > peak:
                peak = v
                run = 0
                cut = None
            elif v < threshold_rel * peak:
                if run == 0:
                    cut = x
                run += 1
                if run >= 8:
                    return float(cut)
            else:
                run = 0
                cut = None
        pos = float(batch[-1])
        if count >= 64:
            h *= 1.5
    if peak == 0.0:
        # identically zero envelope: nothing to integrate
        return start
    raise SlowDecay(f"envelope did not decay below threshold within {limit:g}")


def _integrate_line(g: Callable, spec: QuadratureSpec, center: float, scale: float,
                    lower: Optional[float], envelope: Optional[Callable] = None) -> complex:
    """Integrate ``g`` over [lower, inf) (or the full line when lower is None)."""
    env = _envelope_of(g, envelope)
    step = 0.25 * scale
    if spec.oscillation_freq_hint > 0:
        step = min(step, 0.5 * math.pi / spec.oscillation_freq_hint)
    threshold = spec.abs_tol
    hi = _scan(env, center, step, +1, _SCAN_LIMIT, threshold)
    if lower is None:
        lo = _scan(env, center, step, -1, _SCAN_LIMIT, threshold)
    else:
        lo = lower
        # the scan for the right end may have started at the lower bound already
    if hi <= lo:
        return 0j
    edges = _panel_edges(lo, hi, max(scale, (hi - lo) / 64.0) if scale > 0 else hi - lo,
                         spec.oscillation_freq_hint)
    if len(edges) < 9:
        edges = np.linspace(lo, hi, 9)
    return _adaptive(g, edges, spec)


def integrate_gaussian_weighted(f: Callable, center: float, inv_variance: float,
                                spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """Integral of ``f(u) * exp(-inv_variance * (u - center)**2)`` over the real line."""
    if not inv_variance > 0:
        raise InvalidDomain("inv_variance must be positive")
    a = float(inv_variance)

    def g(u):
        return np.asarray(f(u), dtype=complex) * np.exp(-a * (u - center) ** 2)

    return _integrate_line(g, spec, float(center), 1.0 / math.sqrt(a), None)


def integrate_semi_infinite(f: Callable, lower: float, spec: QuadratureSpec = DEFAULT_SPEC,
                            *, log_substitution: bool = False,
                            envelope: Optional[Callable] = None,
                            scale: float = 1.0) -> complex:
    """Integral of ``f`` over [lower, inf).

    With ``log_substitution`` the integral is carried out in ``v = ln u``,
    which turns a log-Gaussian envelope into a plain Gaussian and removes the
    endpoint at ``u -> 0+``. The truncation point is where the envelope
    (``|f|`` unless ``envelope`` is supplied) drops below ``abs_tol`` times
    its peak.
    """
    lower = float(lower)
    if log_substitution:
        if lower < 0:
            raise InvalidDomain("log substitution needs lower >= 0")
        vlo = None if lower == 0 else math.log(lower)

        def g(v):
            u = np.exp(v)
            return np.asarray(f(u), dtype=complex) * u

        env = None
        if envelope is not None:
            def env(v):
                u = np.exp(v)
                return np.abs(np.asarray(envelope(u), dtype=complex)) * u
        # oscillation hints refer to u; in v they are position dependent, so drop them
        vspec = replace(spec, oscillation_freq_hint=0.0)
        if spec.oscillation_freq_hint > 0:
            return _log_oscillatory(g, env, spec, vlo)
        start = 0.0 if vlo is None else vlo
        return _integrate_line(g, vspec, start, scale, vlo, env)
    return _integrate_line(f, spec, lower, scale, lower, envelope)


def _log_oscillatory(g, env, spec: QuadratureSpec, vlo):
    """v-space integration where a u-frequency ``w`` becomes ``w * e^v``."""
    w = spec.oscillation_freq_hint
    base = replace(spec, oscillation_freq_hint=0.0)
    envf = _envelope_of(g, env)
    start = 0.0 if vlo is None else vlo
    hi = _scan(envf, start, 0.125, +1, _SCAN_LIMIT, spec.abs_tol)
    lo = vlo if vlo is not None else _scan(envf, start, 0.125, -1, _SCAN_LIMIT, spec.abs_tol)
    # stretched coordinate s(v) = 8 v / (hi - lo) + w e^v / pi puts one unit of s per panel
    span = hi - lo
    c = 16.0 / span

    def s_of(v):
        return c * v + w * np.exp(v) / math.pi

    n = int(math.ceil(s_of(hi) - s_of(lo)))
    targets = s_of(lo) + np.arange(1, n) * (s_of(hi) - s_of(lo)) / n
    v = np.full_like(targets, hi)
    for _ in range(200):
        step = (s_of(v) - targets) / (c + w * np.exp(v) / math.pi)
        v = v - step
        if np.max(np.abs(step), initial=0.0) < 1e-14 * max(1.0, abs(hi)):
            break
    edges = np.concatenate([[lo], np.sort(v), [hi]])
    return _adaptive(g, edges, base)


def integrate_plane(f: Callable, weight_scale: float, spec: QuadratureSpec = DEFAULT_SPEC,
                    center: complex = 0j) -> complex:
    """Integral of ``f(Z)`` over the complex plane with d^2Z = dRe Z dIm Z.

    Caller guarantees ``|f(Z)| <= C exp(-weight_scale |Z - center|^2)``.
    Tensor-product composite Gauss-Kronrod rule on a square; the panel count
    doubles until the Kronrod/Gauss difference meets tolerance.
    """
    if not weight_scale > 0:
        raise InvalidDomain("weight_scale must be positive")
    half = math.sqrt((-math.log(spec.abs_tol) + 6.0) / weight_scale)
    cx, cy = center.real, center.imag
    n = 4
    while True:
        edges_x = np.linspace(cx - half, cx + half, n + 1)
        edges_y = np.linspace(cy - half, cy + half, n + 1)
        hx = 0.5 * np.diff(edges_x)
        mx = 0.5 * (edges_x[1:] + edges_x[:-1])
        hy = 0.5 * np.diff(edges_y)
        my = 0.5 * (edges_y[1:] + edges_y[:-1])
        xs = (mx[:, None] + hx[:, None] * GK_NODES[None, :]).ravel()
        ys = (my[:, None] + hy[:, None] * GK_NODES[None, :]).ravel()
        wk_x = (hx[:, None] * GK_WEIGHTS[None, :]).ravel()
        wg_x = (hx[:, None] * G_WEIGHTS[None, :]).ravel()
        wk_y = (hy[:, None] * GK_WEIGHTS[None, :]).ravel()
        wg_y = (hy[:, None] * G_WEIGHTS[None, :]).ravel()
        vals = np.asarray(f(xs[:, None] + 1j * ys[None, :]), dtype=complex)
        kron = wk_x @ vals @ wk_y
        gauss = wg_x @ vals @ wg_y
        err = abs(kron - gauss)
        if err <= max(spec.abs_tol, spec.rel_tol * abs(kron)):
            return finite_complex(kron)
        n *= 2
        if n * n > spec.max_subdivisions * 4:
            raise NonConvergence(f"plane quadrature did not converge (error {err:.3e})")


def fd_derivative(samples: Callable, at, order: int = 1, step: float = 1e-3):
    """Five-point central finite difference of order 1 or 2.

    ``at`` may be a scalar or an array; the return type follows it.
    """
    if not step > 0:
        raise InvalidDomain("step must be positive")
    h = float(step)
    at = np.asarray(at, dtype=float)
    fm2 = np.asarray(samples(at - 2 * h), dtype=complex)
    fm1 = np.asarray(samples(at - h), dtype=complex)
    fp1 = np.asarray(samples(at + h), dtype=complex)
    fp2 = np.asarray(samples(at + 2 * h), dtype=complex)
    if order == 1:
        out = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    elif order == 2:
        f0 = np.asarray(samples(at), dtype=complex)
        out = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)
    else:
        raise InvalidDomain("order must be 1 or 2")
    if out.ndim == 0:
        return finite_complex(out)
    if not np.all(np.isfinite(out)):
        raise NonFiniteValue("non-finite finite-difference result")
    return out
