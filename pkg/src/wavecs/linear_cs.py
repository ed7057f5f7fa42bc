"""Coherent states of a particle in a constant force field.

Dimensionless problem ``i dPsi/dtau = (sqrt(2) b x - d^2/dx^2) Psi``. States are
eigenvectors of the integral of motion

    A(tau) = f(tau) a + g(tau) a^dagger + phi(tau),   a = (x + d/dx)/sqrt(2),

with ``f = c1 + i(c1+c2)tau``, ``g = c2 - i(c1+c2)tau`` and
``phi = b tau [i(c1-c2) - (c1+c2) tau]``. Only the ladder case
``|c1|^2 - |c2|^2 = 1`` carries coherent states.

Closed form used by :func:`wavefunction` (s = f + g = c1 + c2, d = f - g)::

    psi = exp(R) / sqrt(d sqrt(pi))
    R = -s/(2d) (x + sqrt(2) b tau^2 - sqrt(2) Z/s)^2
        + s* Z^2/(2 s) - |Z|^2/2 - i b tau (sqrt(2) x + 2 b tau^2/3)

The constant term fixes the phase convention psi_Z = D(Z)|0>, which is what
makes ``<Z'|Z> = exp(Z Z'* - |Z|^2/2 - |Z'|^2/2)`` hold exactly.
:func:`alternative_exponent` keeps a competing closed form for comparison.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DeltaNotUnit, InvalidDomain, NonConvergence
from .numerics import (
    DEFAULT_SPEC,
    QuadratureSpec,
    fd_derivative,
    finite_complex,
    integrate_gaussian_weighted,
    integrate_plane,
    integrate_semi_infinite,
)

SQRT2 = math.sqrt(2.0)
DELTA_TOL = 1e-10


@dataclass(frozen=True)
class LinearModel:
    """Dimensionless force constant ``b``, optionally tied to physical units.

    ``physical`` is ``(m, alpha, l, hbar)`` with ``b = sqrt(2) m l^3 alpha / hbar^2``.
    """

    b: float
    physical: Optional[tuple] = None

    def __post_init__(self):
        if not math.isfinite(self.b):
            raise InvalidDomain("b must be finite")
        if self.physical is not None:
            derived = self._b_from(*self.physical)
            if abs(derived - self.b) > 1e-12 * max(1.0, abs(derived)):
                raise InvalidDomain(f"b={self.b} inconsistent with physical units (b={derived})")

    @staticmethod
    def _b_from(m, alpha, length, hbar):
        return SQRT2 * m * length**3 * alpha / hbar**2

    @classmethod
    def from_physical(cls, m: float, alpha: float, length: float, hbar: float) -> "LinearModel":
        return cls(cls._b_from(m, alpha, length, hbar), (m, alpha, length, hbar))

    def to_dimensionless(self, x1, t):
        """Physical ``(x^1, t)`` to ``(x, tau)``; needs the physical quadruple."""
        if self.physical is None:
            raise InvalidDomain("model carries no physical units")
        m, _, length, hbar = self.physical
        return np.asarray(x1) / length, hbar * np.asarray(t) / (2.0 * m * length**2)

    def hamiltonian(self, psi: Callable, x, step: float = 1e-4):
        """``(sqrt(2) b x - d^2/dx^2) psi`` by finite differences."""
        x = np.asarray(x, dtype=float)
        return SQRT2 * self.b * x * psi(x) - fd_derivative(psi, x, 2, step)


@dataclass(frozen=True)
class MotionIntegralCoeffs:
    """Constants ``(c1, c2)`` of the integral of motion (c3 = 0)."""

    c1: complex
    c2: complex

    def __post_init__(self):
        object.__setattr__(self, "c1", finite_complex(self.c1))
        object.__setattr__(self, "c2", finite_complex(self.c2))

    @property
    def s(self) -> complex:
        """``f + g``, constant in time."""
        return self.c1 + self.c2

    @property
    def delta(self) -> float:
        return delta(self.c1, self.c2)

    def f(self, tau):
        return self.c1 + 1j * self.s * tau

    def g(self, tau):
        return self.c2 - 1j * self.s * tau

    def phi(self, tau, b):
        return b * tau * (1j * (self.c1 - self.c2) - self.s * tau)

    def require_unit_delta(self):
        dl = self.delta
        if dl < 0:
            raise DeltaNotUnit(
                f"Delta = {dl:.3g} < 0: treat B = A^dagger as the annihilation operator "
                "(swap the roles of c1 and c2 explicitly)")
        if abs(dl - 1.0) > DELTA_TOL:
            raise DeltaNotUnit(f"|c1|^2 - |c2|^2 = {dl!r}, expected 1")

    @classmethod
    def hyperbolic(cls, r: float, theta1: float = 0.0, theta2: float = 0.0) -> "MotionIntegralCoeffs":
        """Unit-Delta pair ``c1 = cosh r e^{i theta1}``, ``c2 = sinh r e^{i theta2}``."""
        return cls(math.cosh(r) * cmath.exp(1j * theta1), math.sinh(r) * cmath.exp(1j * theta2))


FIG1_COEFFS = MotionIntegralCoeffs(3.0, math.sqrt(8.0))
FIG1_MODEL = LinearModel(180.0)
FIG1_X0, FIG1_P0 = 0.0, 15.0


def delta(c1, c2) -> float:
    """Commutator invariant ``|c1|^2 - |c2|^2``."""
    return abs(complex(c1)) ** 2 - abs(complex(c2)) ** 2


@dataclass(frozen=True)
class CSLabel:
    """Eigenvalue ``Z`` of ``A(tau)`` together with the coefficients defining ``A``."""

    Z: complex
    coeffs: MotionIntegralCoeffs

    def __post_init__(self):
        object.__setattr__(self, "Z", finite_complex(self.Z))

    @classmethod
    def from_initial_data(cls, x0: float, p0: float, coeffs: MotionIntegralCoeffs) -> "CSLabel":
        c1, c2 = coeffs.c1, coeffs.c2
        return cls((c1 + c2) * x0 / SQRT2 + 1j * (c1 - c2) * p0 / (2.0 * SQRT2), coeffs)

    def initial_data(self) -> tuple[float, float]:
        """``(x0, p0)`` of the classical trajectory tracked by the state."""
        c1, c2, Z = self.coeffs.c1, self.coeffs.c2, self.Z
        x0 = ((c1 - c2) * Z.conjugate() + (c1 - c2).conjugate() * Z) / SQRT2
        p0 = 1j * SQRT2 * ((c1 + c2) * Z.conjugate() - (c1 + c2).conjugate() * Z)
        if abs(x0.imag) > 1e-12 * max(1.0, abs(x0)) or abs(p0.imag) > 1e-12 * max(1.0, abs(p0)):
            raise InvalidDomain("initial data not real; coefficients inconsistent")
        return x0.real, p0.real

    @property
    def x0(self) -> float:
        return self.initial_data()[0]

    @property
    def p0(self) -> float:
        return self.initial_data()[1]

    def scaled(self, factor: complex) -> "CSLabel":
        return CSLabel(self.Z * factor, self.coeffs)


def fig1_label() -> CSLabel:
    return CSLabel.from_initial_data(FIG1_X0, FIG1_P0, FIG1_COEFFS)


def ode_residual(coeffs, b: float, tau: float, step: float = 1e-3) -> float:
    """Max residual of ``i f' + f + g``, ``i g' - f - g``, ``i phi' + b (f - g)``.

    ``coeffs`` is anything exposing ``f(tau)``, ``g(tau)``, ``phi(tau, b)``.
    """
    fdot = fd_derivative(coeffs.f, tau, 1, step)
    gdot = fd_derivative(coeffs.g, tau, 1, step)
    pdot = fd_derivative(lambda t: coeffs.phi(t, b), tau, 1, step)
    f, g = coeffs.f(tau), coeffs.g(tau)
    return max(abs(1j * fdot + f + g), abs(1j * gdot - f - g), abs(1j * pdot + b * (f - g)))


def classical_trajectory(model: LinearModel, label: CSLabel, tau: float) -> tuple[float, float]:
    """Classical position and mean momentum at ``tau``.

    Momentum follows the convention ``p(tau) = p0/2 - sqrt(2) b tau`` where
    ``p`` is the expectation of ``-i d/dx`` and ``dx/dtau = 2p``.
    """
    label.coeffs.require_unit_delta()
    x0, p0 = label.initial_data()
    b = model.b
    x = x0 + p0 * tau - SQRT2 * b * tau**2
    c = label.coeffs
    dz = c.f(tau) - c.g(tau)
    x_z = (label.Z * dz.conjugate() + label.Z.conjugate() * dz - 2.0 * b * tau**2) / SQRT2
    if abs(x_z - x) > 1e-10 * max(1.0, abs(x)):
        raise InvalidDomain(f"trajectory forms disagree: {x} vs {x_z}")
    return x, p0 / 2.0 - SQRT2 * b * tau


def sqrt_tracked(coeffs: MotionIntegralCoeffs, tau):
    """``sqrt(f - g)`` on the branch continuous in tau from the principal one at 0.

    ``f - g = d0 + 2 i s tau`` runs along a straight line that misses the
    origin, so the unwrapped argument is ``arg d0 + Arg(d/d0)`` exactly.
    """
    d0 = coeffs.c1 - coeffs.c2
    d = d0 + 2j * coeffs.s * np.asarray(tau)
    arg = cmath.phase(d0) + np.angle(d / d0)
    return np.sqrt(np.abs(d)) * np.exp(0.5j * arg)


def _log_amplitude(b, Z, coeffs, tau, x):
    s = coeffs.s
    d = coeffs.f(tau) - coeffs.g(tau)
    shift = x + SQRT2 * b * tau**2 - SQRT2 * Z / s
    return (-(s / (2.0 * d)) * shift**2
            + s.conjugate() * Z**2 / (2.0 * s) - abs(Z) ** 2 / 2.0
            - 1j * b * tau * (SQRT2 * x + 2.0 * b * tau**2 / 3.0))


def wavefunction(model: LinearModel, label: CSLabel, tau, x):
    """Closed-form ``psi_Z(tau; x)``; vectorized over ``x`` and ``tau``."""
    coeffs = label.coeffs
    coeffs.require_unit_delta()
    x = np.asarray(x, dtype=float)
    tau_a = np.asarray(tau, dtype=float)
    R = _log_amplitude(model.b, label.Z, coeffs, tau_a, x)
    psi = np.exp(R) / (sqrt_tracked(coeffs, tau_a) * math.pi**0.25)
    return complex(psi) if psi.ndim == 0 else psi


def exponent(model: LinearModel, label: CSLabel, tau, x):
    """Exponent ``R`` of ``psi = pi^{-1/4} (f - g)^{-1/2} exp(R)``."""
    return _log_amplitude(model.b, label.Z, label.coeffs, np.asarray(tau, dtype=float),
                          np.asarray(x, dtype=float))


def alternative_exponent(model: LinearModel, label: CSLabel, tau, x):
    """A competing closed form of the exponent, kept only for comparison.

    Differs from :func:`wavefunction` in the sign of the Gaussian term, the
    2 b tau^2 shift and the ``s/s*`` ratio of the constant term; it does not
    yield a normalizable state (e.g. ``c1 = 1, c2 = 0`` gives ``exp(+x^2/2)``).
    """
    c = label.coeffs
    b, Z = model.b, label.Z
    x = np.asarray(x, dtype=float)
    f, g = c.f(tau), c.g(tau)
    s = f + g
    sc = s.conjugate()
    return ((s / (2.0 * (f - g))) * (x + 2.0 * b * tau**2 - SQRT2 * Z / s) ** 2
            + Z * (s * Z - sc * Z.conjugate()) / (2.0 * sc)
            - 1j * b * tau * (SQRT2 * x + 2.0 * b * tau**2 / 3.0))


def _x_window(model, label, tau):
    """Center and width of |psi|^2 (used to place quadrature)."""
    x_cl, _ = classical_trajectory(model, label, tau)
    c = label.coeffs
    return x_cl, abs(c.f(tau) - c.g(tau))


def _x_integral(func, center, width, spec):
    """Integral over the real line of a function concentrated near ``center``."""
    left = integrate_semi_infinite(lambda u: func(center - u), 0.0, spec, scale=width)
    right = integrate_semi_infinite(lambda u: func(center + u), 0.0, spec, scale=width)
    return left + right


def norm(model: LinearModel, label: CSLabel, tau: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Quadrature of ``|psi|^2`` split at ``x = 0``."""
    dens = lambda x: np.abs(wavefunction(model, label, tau, x)) ** 2
    left = integrate_semi_infinite(lambda u: dens(-u), 0.0, spec, scale=_x_window(model, label, tau)[1])
    right = integrate_semi_infinite(dens, 0.0, spec, scale=_x_window(model, label, tau)[1])
    return (left + right).real


def wavefunction_via_eigen_ode(model: LinearModel, label: CSLabel, tau: float, x,
                               spec: QuadratureSpec = DEFAULT_SPEC):
    """Independent construction from ``A(tau) psi = Z psi`` alone.

    In position space the eigen-equation is the first-order ODE
    ``psi'/psi = (sqrt(2)(Z - phi) - s x)/(f - g)``; integrating from the
    classical point gives a Gaussian. The result is normalized by quadrature
    and its global phase is aligned with :func:`wavefunction` at the
    classical point.
    """
    c = label.coeffs
    c.require_unit_delta()
    b, Z = model.b, label.Z
    s = c.s
    d = c.f(tau) - c.g(tau)
    rhs0 = SQRT2 * (Z - c.phi(tau, b))
    x_ref, width = _x_window(model, label, tau)

    def log_unnormalized(xx):
        # exact antiderivative of the linear log-derivative from x_ref to xx
        return rhs0 * (xx - x_ref) / d - s * (xx * xx - x_ref * x_ref) / (2.0 * d)

    dens = lambda xx: np.exp(2.0 * log_unnormalized(xx).real)
    total = _x_integral(dens, x_ref, width, spec).real
    ref_val = wavefunction(model, label, tau, x_ref)
    phase = ref_val / abs(ref_val)
    x = np.asarray(x, dtype=float)
    psi = phase * np.exp(log_unnormalized(x)) / math.sqrt(total)
    return complex(psi) if psi.ndim == 0 else psi


def apply_integral_of_motion(model: LinearModel, coeffs: MotionIntegralCoeffs, tau: float,
                             psi: Callable, x, step: float = 1e-4):
    """``A(tau) psi`` at ``x`` with ``d/dx`` from finite differences."""
    x = np.asarray(x, dtype=float)
    s = coeffs.s
    d = coeffs.f(tau) - coeffs.g(tau)
    dpsi = fd_derivative(psi, x, 1, step)
    return (s * x * psi(x) + d * dpsi) / SQRT2 + coeffs.phi(tau, model.b) * psi(x)


def eigen_residual(model: LinearModel, label: CSLabel, tau: float, x_grid,
                   psi: Optional[Callable] = None, step: float = 1e-4) -> float:
    """``max |A psi - Z psi| / max |psi|`` over the grid."""
    if psi is None:
        psi = lambda xx: wavefunction(model, label, tau, xx)
    x = np.asarray(x_grid, dtype=float)
    vals = psi(x)
    res = apply_integral_of_motion(model, label.coeffs, tau, psi, x, step) - label.Z * vals
    return float(np.max(np.abs(res)) / np.max(np.abs(vals)))


def _tau_step(model: LinearModel, label: CSLabel, tau: float, x) -> float:
    """Time step for the tau-derivative, scaled to the fastest local phase rotation."""
    x_cl, _ = classical_trajectory(model, label, tau)
    xmax = float(np.max(np.abs(x))) + abs(x_cl) + 1.0
    c = label.coeffs
    width_rate = abs(c.s / (c.f(tau) - c.g(tau))) ** 2 * xmax**2
    rate = 2.0 * model.b**2 * tau**2 + SQRT2 * abs(model.b) * xmax + width_rate + 50.0
    return min(1e-3, 0.05 / rate)


def schrodinger_residual(model: LinearModel, label: CSLabel, tau: float, x_grid,
                         psi: Optional[Callable] = None, x_step: float = 5e-4,
                         tau_step: Optional[float] = None, hamiltonian_b: Optional[float] = None) -> float:
    """``max |i psi_tau - H psi| / max |psi|`` over the grid.

    ``psi`` (a function of ``(tau, x)``) overrides the closed form;
    ``hamiltonian_b`` overrides the force constant used in ``H``.
    """
    if psi is None:
        psi = lambda t, xx: wavefunction(model, label, t, xx)
    x = np.asarray(x_grid, dtype=float)
    if tau_step is None:
        tau_step = _tau_step(model, label, tau, x)
    b = model.b if hamiltonian_b is None else hamiltonian_b
    vals = psi(tau, x)
    dt = fd_derivative(lambda t: psi(float(t), x), tau, 1, tau_step)
    dxx = fd_derivative(lambda xx: psi(tau, xx), x, 2, x_step)
    res = 1j * dt - (SQRT2 * b * x * vals - dxx)
    return float(np.max(np.abs(res)) / np.max(np.abs(vals)))


def overlap(label1: CSLabel, label2: CSLabel) -> complex:
    """``<label1|label2> = exp(F/2)`` with ``F = Z (Z'* - Z*) + Z'* (Z - Z')``.

    ``label1`` is the bra (Z'), ``label2`` the ket (Z).
    """
    if label1.coeffs != label2.coeffs:
        raise InvalidDomain("labels refer to different integrals of motion")
    label1.coeffs.require_unit_delta()
    zp, z = label1.Z, label2.Z
    F = z * (zp.conjugate() - z.conjugate()) + zp.conjugate() * (z - zp)
    return finite_complex(cmath.exp(F / 2.0))


def overlap_quadrature(model: LinearModel, label1: CSLabel, label2: CSLabel, tau: float,
                       spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """``int psi_1^* psi_2 dx`` by quadrature."""
    x1, w = _x_window(model, label1, tau)
    x2, _ = _x_window(model, label2, tau)
    center = 0.5 * (x1 + x2)
    prod = lambda x: np.conj(wavefunction(model, label1, tau, x)) * wavefunction(model, label2, tau, x)
    mom = max(abs(x1 - x2) / max(w, 1e-3), 1.0)
    return _x_integral(prod, center, w / mom, spec)


@dataclass(frozen=True)
class Moments:
    x_mean: float
    p_mean: float
    sigma1: float
    sigma2: float
    sigma3: float

    @property
    def J(self) -> float:
        return self.sigma1 * self.sigma2 - self.sigma3**2


def moments(model: LinearModel, label: CSLabel, tau: float) -> Moments:
    """Closed-form means and (co)variances of position and momentum."""
    c = label.coeffs
    c.require_unit_delta()
    x_mean, p_mean = classical_trajectory(model, label, tau)
    f, g = c.f(tau), c.g(tau)
    s1 = 0.5 * abs(f - g) ** 2
    s2 = 0.5 * abs(f + g) ** 2
    s3 = (0.5j * (g * f.conjugate() - g.conjugate() * f)).real
    return Moments(x_mean, p_mean, s1, s2, s3)


def moments_quadrature(model: LinearModel, label: CSLabel, tau: float,
                       spec: QuadratureSpec = DEFAULT_SPEC, step: float = 1e-3) -> Moments:
    """The same moments from ``|psi|^2`` and ``psi^* (-i d/dx) psi`` by quadrature."""
    c = label.coeffs
    c.require_unit_delta()
    center, width = _x_window(model, label, tau)
    psi = lambda x: wavefunction(model, label, tau, x)
    dpsi = lambda x: fd_derivative(psi, x, 1, step)
    integ = lambda func: _x_integral(func, center, width, spec)
    n = integ(lambda x: np.abs(psi(x)) ** 2).real
    xm = integ(lambda x: x * np.abs(psi(x)) ** 2).real / n
    pm = integ(lambda x: np.conj(psi(x)) * (-1j) * dpsi(x)).real / n
    s1 = integ(lambda x: (x - xm) ** 2 * np.abs(psi(x)) ** 2).real / n
    # <(p - pm)^2> = int |(-i d/dx - pm) psi|^2
    s2 = integ(lambda x: np.abs(-1j * dpsi(x) - pm * psi(x)) ** 2).real / n
    # symmetrized covariance = Re <(x - xm)(p - pm)>
    s3 = integ(lambda x: np.conj(psi(x)) * (x - xm) * (-1j * dpsi(x) - pm * psi(x))).real / n
    return Moments(xm, pm, s1, s2, s3)


def kernel_completeness_check(label1: CSLabel, label2: CSLabel,
                              spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``|int d^2Z/pi <Z1|Z><Z|Z2> - <Z1|Z2>|``."""
    coeffs = label1.coeffs
    z1, z2 = label1.Z, label2.Z

    def integrand(Z):
        ov1 = np.exp(z1.conjugate() * Z - 0.5 * abs(z1) ** 2 - 0.5 * np.abs(Z) ** 2)
        ov2 = np.exp(np.conj(Z) * z2 - 0.5 * np.abs(Z) ** 2 - 0.5 * abs(z2) ** 2)
        return ov1 * ov2 / math.pi

    # <Z1|Z> = exp(F/2) with (Z', Z) = (Z1, Z); checked against overlap() on a sample point
    probe = CSLabel(0.3 - 0.2j, coeffs)
    if abs(integrand(np.array([probe.Z]))[0] * math.pi
           - overlap(label1, probe) * overlap(probe, label2)) > 1e-14:
        raise NonConvergence("plane integrand inconsistent with overlap()")
    value = integrate_plane(integrand, 1.0, spec, center=0.5 * (z1 + z2))
    return abs(value - overlap(label1, label2))


def gram_matrix(labels) -> np.ndarray:
    n = len(labels)
    G = np.empty((n, n), dtype=complex)
    for i, li in enumerate(labels):
        for j, lj in enumerate(labels):
            G[i, j] = overlap(li, lj)
    return G
