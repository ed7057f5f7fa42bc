"""Pseudo-action-angle coherent states over a continuous energy spectrum.

Normal-law model in dimensionless variables (Ẽ = E/energy_scale, J̃ = J/h)::

    J̃(E)   = eta ln Ẽ
    p_E(J)  = sqrt(eps/pi) exp(-eps (J̃ - eta ln Ẽ)^2)
    N(J)    = int_0^Emax p_E(J) dẼ = exp(J̃/eta + 1/(4 eps eta^2)) / eta   (Emax = inf)
    |J, gamma> = N(J)^{-1/2} int dẼ sqrt(p_E(J)) exp(-i sigma Ẽ gamma) |psi_E>

Throughout, ``sigma`` is the phase frequency of ``alpha_E = sigma Ẽ``.
Energy integrals with a log-normal envelope run in ``v = ln Ẽ``; the
oscillatory ones go through :func:`wavecs.kernels.osc_lognormal`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import erfc

from . import kernels
from .classical_paa import PseudoActionMap
from .errors import InvalidDomain, OutOfSpectralRange, VerificationFailure
from .numerics import (
    DEFAULT_SPEC,
    QuadratureSpec,
    finite_complex,
    integrate_gaussian_weighted,
    integrate_interval,
    integrate_semi_infinite,
)


@dataclass(frozen=True)
class NormalLawModel:
    eps: float
    eta: float
    sigma: float
    E_max: float = math.inf
    energy_scale: float = 1.0
    h: float = 1.0

    def __post_init__(self):
        if not (self.eps > 0 and self.eta > 0):
            raise InvalidDomain("eps and eta must be positive")
        if self.sigma == 0 or not math.isfinite(self.sigma):
            raise InvalidDomain("sigma must be finite and nonzero")
        if not self.E_max > 0:
            raise InvalidDomain("E_max must be positive")

    @property
    def mu(self) -> float:
        """Concentration of the envelope in ``ln Ẽ``: eps eta^2."""
        return self.eps * self.eta**2

    def p(self, J, E):
        """``p_E(J)`` for dimensionless ``J``, ``E`` (arrays allowed)."""
        E = np.asarray(E, dtype=float)
        with np.errstate(divide="ignore"):
            logE = np.log(E)
        return math.sqrt(self.eps / math.pi) * np.exp(-self.eps * (J - self.eta * logE) ** 2)

    def N(self, J):
        """Closed-form normalization ``int_0^Emax p_E(J) dẼ``."""
        mu = self.mu
        base = np.exp(np.asarray(J) / self.eta + 1.0 / (4.0 * mu)) / self.eta
        if math.isinf(self.E_max):
            return base
        vstar = np.asarray(J) / self.eta + 1.0 / (2.0 * mu)
        return base * 0.5 * erfc(math.sqrt(mu) * (vstar - math.log(self.E_max)))

    def log_N(self, J):
        if math.isinf(self.E_max):
            return J / self.eta + 1.0 / (4.0 * self.mu) - math.log(self.eta)
        return math.log(self.N(J))

    def energy_of_action(self, J):
        return np.exp(np.asarray(J) / self.eta)

    def action_of_energy(self, E):
        return self.eta * np.log(E)

    def pseudo_action_map(self) -> PseudoActionMap:
        return PseudoActionMap.normal_law(self.eta, self.energy_scale, self.h)

    def dimensionless(self, E=None, J=None):
        """Physical energy/action to the tilde variables used everywhere else."""
        out = []
        if E is not None:
            out.append(np.asarray(E) / self.energy_scale)
        if J is not None:
            out.append(np.asarray(J) / self.h)
        return out[0] if len(out) == 1 else tuple(out)


@dataclass(frozen=True)
class PaaCSLabel:
    J: float
    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.J) and math.isfinite(self.gamma)):
            raise InvalidDomain("label must be finite")

    def shifted(self, dgamma: float) -> "PaaCSLabel":
        return PaaCSLabel(self.J, self.gamma + dgamma)


@dataclass(frozen=True)
class EnergyBasisTag:
    E: float
    parity: str = "symmetric"

    def __post_init__(self):
        if self.E < 0:
            raise InvalidDomain("energy must be >= 0")
        if self.parity not in ("symmetric", "antisymmetric"):
            raise InvalidDomain("parity must be 'symmetric' or 'antisymmetric'")

    def wavefunction(self, x):
        """Parity eigendistribution of ``-d^2/dx^2``; ``cos`` or ``-i sin`` channel."""
        u = math.sqrt(self.E)
        norm = 1.0 / math.sqrt(4.0 * math.pi * u)
        x = np.asarray(x, dtype=float)
        if self.parity == "symmetric":
            return norm * np.cos(u * x) + 0j
        return -1j * norm * np.sin(u * x)


FIG2_MODEL = NormalLawModel(1.0, 1.0, 1.0)
FIG2_REF = PaaCSLabel(0.0, 0.0)
FIG3_MODEL = NormalLawModel(2.0, 1.0, 1.0)
FIG3_J = 0.0
FIG3_GAMMAS = (-4.0, -2.0, 0.0)


def _check_energy(model: NormalLawModel, E):
    E = np.asarray(E, dtype=float)
    if np.any(E < 0) or np.any(E >= model.E_max):
        raise InvalidDomain(f"energy outside [0, {model.E_max})")
    return E


def cs_coefficient(model: NormalLawModel, label: PaaCSLabel, E):
    """``sqrt(p_E(J)/N(J)) exp(-i sigma Ẽ gamma)``; vectorized over ``E``."""
    E = _check_energy(model, E)
    amp = np.sqrt(model.p(label.J, E) / model.N(label.J))
    out = amp * np.exp(-1j * model.sigma * E * label.gamma)
    return complex(out) if out.ndim == 0 else out


def _energy_integral(model: NormalLawModel, func: Callable, center_v: float,
                     spec: QuadratureSpec, freq: float = 0.0) -> complex:
    """``int_0^Emax func(Ẽ) dẼ`` in ``v = ln Ẽ``; ``center_v`` locates the envelope."""
    if math.isinf(model.E_max):
        return integrate_semi_infinite(func, 0.0, spec.with_hint(freq), log_substitution=True,
                                       scale=1.0 / math.sqrt(model.mu))
    width = (math.sqrt(-math.log(spec.abs_tol)) + 3.0) / math.sqrt(model.mu)
    vmax = math.log(model.E_max)
    vmin = min(center_v, vmax) - width
    g = lambda v: np.asarray(func(np.exp(v)), dtype=complex) * np.exp(v)
    panels = max(16, int(freq * model.E_max / math.pi) + 1)
    return integrate_interval(g, vmin, vmax, spec, panels=panels)


def normalization_quadrature(model: NormalLawModel, J: float,
                             spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    return _energy_integral(model, lambda E: model.p(J, E), J / model.eta, spec).real


def coefficient_norm(model: NormalLawModel, label: PaaCSLabel,
                     spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``int |c_E|^2 dẼ`` (should be 1)."""
    f = lambda E: np.abs(cs_coefficient(model, label, E)) ** 2
    return _energy_integral(model, f, label.J / model.eta, spec).real


def _osc(model_mu, p, lam, beta, k, spec):
    return kernels.osc_lognormal(p, model_mu, lam, beta, k, spec.abs_tol, spec.rel_tol,
                                 spec.max_subdivisions)


def overlap(model: NormalLawModel, bra: PaaCSLabel, ket: PaaCSLabel,
            spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """``<bra|ket>`` from the single energy integral over ``exp(-i sigma Ẽ (gamma - gamma'))``."""
    if not math.isinf(model.E_max):
        return overlap_by_coefficients(model, bra, ket, spec)
    eps, eta = model.eps, model.eta
    Jbar = 0.5 * (ket.J + bra.J)
    k = model.sigma * (ket.gamma - bra.gamma)
    integral, log_peak = _osc(model.mu, 0.0, Jbar / eta, 0.0, k, spec)
    log_pref = (-0.5 * (model.log_N(ket.J) + model.log_N(bra.J))
                - 0.25 * eps * (ket.J - bra.J) ** 2 + 0.5 * math.log(eps / math.pi))
    return finite_complex(integral * math.exp(log_pref + log_peak))


def overlap_by_coefficients(model: NormalLawModel, bra: PaaCSLabel, ket: PaaCSLabel,
                            spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """``int conj(c_E(bra)) c_E(ket) dẼ`` by generic quadrature."""
    f = lambda E: np.conj(cs_coefficient(model, bra, E)) * cs_coefficient(model, ket, E)
    freq = abs(model.sigma * (ket.gamma - bra.gamma))
    return _energy_integral(model, f, 0.5 * (bra.J + ket.J) / model.eta, spec, freq)


def overlap_bound(model: NormalLawModel, bra: PaaCSLabel, ket: PaaCSLabel) -> float:
    """The overlap with the phase factor removed (closed form), an upper bound on ``|overlap|``."""
    eps = model.eps
    Jbar = 0.5 * (ket.J + bra.J)
    if math.isinf(model.E_max):
        log_int = math.log(math.sqrt(math.pi / eps)) + model.log_N(Jbar)
    else:
        log_int = math.log(math.sqrt(math.pi / eps) * model.N(Jbar))
    log_pref = (-0.5 * (model.log_N(ket.J) + model.log_N(bra.J))
                - 0.25 * eps * (ket.J - bra.J) ** 2 + 0.5 * math.log(eps / math.pi))
    return math.exp(log_pref + log_int)


def action_kernel(model: NormalLawModel, E: float, E2: float) -> float:
    """``int dJ sqrt(p_E(J) p_E2(J)) = exp(-(eps eta^2/4) ln(E/E2)^2)``."""
    if not (E > 0 and E2 > 0):
        raise InvalidDomain("energies must be positive")
    return math.exp(-0.25 * model.mu * math.log(E / E2) ** 2)


def action_kernel_quadrature(model: NormalLawModel, E: float, E2: float,
                             spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Same integral with one half-Gaussian as weight and the other as integrand."""
    if not (E > 0 and E2 > 0):
        raise InvalidDomain("energies must be positive")
    eps, eta = model.eps, model.eta
    a, b = eta * math.log(E), eta * math.log(E2)
    f = lambda J: math.sqrt(eps / math.pi) * np.exp(-0.5 * eps * (J - b) ** 2)
    return integrate_gaussian_weighted(f, a, 0.5 * eps, spec).real


def alternative_fourier_weight(model: NormalLawModel, varpi: float, E: float) -> float:
    """Weight with exponent ``eps eta / 4`` instead of ``eps eta^2 / 4`` (comparison only)."""
    shift = varpi / model.sigma
    return (math.pi / abs(model.sigma)) * math.exp(
        -0.25 * model.eps * model.eta * math.log(E / (E - shift)) ** 2)


def fourier_exponential_kernel(model: NormalLawModel, varpi: float, E: float) -> tuple[float, float]:
    """Matrix element of the quantized ``exp(i varpi gamma)``.

    Returns the energy ``Ẽ - varpi/sigma`` it couples to and the weight
    ``(pi/|sigma|) * action_kernel(Ẽ, Ẽ - varpi/sigma)``.
    """
    shift = varpi / model.sigma
    if not E > max(0.0, shift):
        raise OutOfSpectralRange(f"E={E} must exceed max(0, varpi/sigma)={max(0.0, shift)}")
    E2 = E - shift
    return E2, (math.pi / abs(model.sigma)) * action_kernel(model, E, E2)


def quantize_action_function(model: NormalLawModel, f: Callable, E: float,
                             spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``<f>_E = int dJ f(J) p_E(J)``, the diagonal multiplier of ``A_f``.

    ``f`` takes dimensionless pseudo-action values (arrays).
    """
    if not E > 0:
        raise InvalidDomain("energy must be positive")
    eps = model.eps
    g = lambda J: math.sqrt(eps / math.pi) * np.asarray(f(J), dtype=complex)
    return integrate_gaussian_weighted(g, model.eta * math.log(E), eps, spec).real


def energy_moment(model: NormalLawModel, lam: float, E: float,
                  spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``<Ẽ(J)^lam>_E`` by quadrature."""
    return quantize_action_function(model, lambda J: model.energy_of_action(J) ** lam, E, spec)


def energy_power_multiplier(model: NormalLawModel, lam: float, verify_at=(0.5, 1.0, 3.0),
                            rel_tol: float = 1e-9) -> float:
    """Scalar ``m`` with ``A_{H^lam} = m (A_H)^lam``: ``exp(lam (lam-1) / (4 eps eta^2))``.

    The raw moments ``<E^lam> = exp(lam^2/(4 eps eta^2)) E^lam`` are checked by
    quadrature at ``verify_at``.
    """
    mu = model.mu
    for E in verify_at:
        expected = math.exp(lam * lam / (4.0 * mu)) * E**lam
        got = energy_moment(model, lam, E)
        if abs(got - expected) > rel_tol * abs(expected):
            raise VerificationFailure(f"<E^{lam}> at E={E}: {got} vs {expected}")
    return math.exp(lam * (lam - 1.0) / (4.0 * mu))


def lower_symbol_action(model: NormalLawModel, f: Callable, label: PaaCSLabel,
                        spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Berezin transform of ``f(J)``: ``int dẼ (p_E(J)/N(J)) <f>_E``.

    The Bohr average over the angle removes every off-diagonal energy term,
    so the result does not depend on ``label.gamma``.
    """
    J = label.J
    inner = spec.tighter(0.1)

    def outer(E):
        E = np.atleast_1d(E)
        vals = np.array([quantize_action_function(model, f, e, inner) if e > 0 else 0.0
                         for e in E.ravel()]).reshape(E.shape)
        return model.p(J, E) / model.N(J) * vals

    return _energy_integral(model, outer, J / model.eta, spec).real


def evolution_shift_check(model: NormalLawModel, label: PaaCSLabel, t: float, E_samples) -> float:
    """``max |exp(-i Ẽ t) c_E(J, gamma) - c_E(J, gamma + t/sigma)|`` over the samples."""
    E = np.asarray(E_samples, dtype=float)
    lhs = np.exp(-1j * E * t) * cs_coefficient(model, label, E)
    rhs = cs_coefficient(model, label.shifted(t / model.sigma), E)
    return float(np.max(np.abs(lhs - rhs)))


def phase_space_density(model: NormalLawModel, ref: PaaCSLabel, probe: PaaCSLabel,
                        spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``N(J_ref) |<probe|ref>|^2``."""
    return float(model.N(ref.J) * abs(overlap(model, probe, ref, spec)) ** 2)


def position_params(model: NormalLawModel, label: PaaCSLabel) -> tuple[float, float, float]:
    """``(alpha, beta, delta)`` of the u-integral behind the position-like amplitude."""
    return (2.0 * model.eps * model.eta * label.J + 0.5,
            model.sigma * label.gamma,
            2.0 * model.eps * model.eta**2)


def _position_log_prefactor(model: NormalLawModel, label: PaaCSLabel) -> float:
    eps, eta = model.eps, model.eta
    return (0.25 * math.log(eps * eta**2 / math.pi**3)
            - 0.5 * eps * (label.J + 1.0 / (2.0 * eps * eta)) ** 2)


def alternative_position_prefactor(model: NormalLawModel) -> float:
    """``sqrt(eps eta^2 / pi^3)``; the normalized amplitude carries its square root."""
    return math.sqrt(model.eps * model.eta**2 / math.pi**3)


def F_transform(model: NormalLawModel, label: PaaCSLabel, x: float,
                spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """``(2 pi)^{-1/2} int_0^inf du e^{-i x u} u^alpha e^{-delta ln^2 u} e^{-i beta u^2}``."""
    alpha, beta, dlt = position_params(model, label)
    integral, log_peak = _osc(dlt, alpha, 0.0, beta, float(x), spec)
    return finite_complex(integral * math.exp(log_peak) / math.sqrt(2.0 * math.pi))


def F_bound(model: NormalLawModel, label: PaaCSLabel) -> float:
    """``sqrt(2/delta) exp((alpha+1)^2/(4 delta))``."""
    alpha, _, dlt = position_params(model, label)
    return math.sqrt(2.0 / dlt) * math.exp((alpha + 1.0) ** 2 / (4.0 * dlt))


def position_amplitude(model: NormalLawModel, label: PaaCSLabel, x,
                       spec: QuadratureSpec = DEFAULT_SPEC):
    """``<x|J, gamma>`` in the representation built on ``-d^2/dx^2`` eigendistributions.

    Evaluated from the u-integral (u = sqrt(Ẽ)) with prefactor
    ``(eps eta^2/pi^3)^{1/4} exp(-(eps/2)(J + 1/(2 eps eta))^2)``, which is
    the value fixed by unit norm and by :func:`position_amplitude_synthesis`.
    """
    alpha, beta, dlt = position_params(model, label)
    log_pref = _position_log_prefactor(model, label)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(xs.shape, dtype=complex)
    for i, xi in enumerate(xs.ravel()):
        integral, log_peak = _osc(dlt, alpha, 0.0, beta, float(xi), spec)
        out.flat[i] = integral * math.exp(log_pref + log_peak)
    if np.ndim(x) == 0:
        return finite_complex(out[0])
    return out


def position_amplitude_synthesis(model: NormalLawModel, label: PaaCSLabel, x: float,
                                 spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """``int dẼ c_E (psi+_E(x) + psi-_E(x))``: both parity channels, measure dẼ."""
    x = float(x)

    def f(E):
        u = np.sqrt(E)
        channel = (np.cos(u * x) - 1j * np.sin(u * x)) / np.sqrt(4.0 * math.pi * u)
        return cs_coefficient(model, label, E) * channel

    # local frequency in Ẽ: d/dẼ (sigma gamma Ẽ + x sqrt(Ẽ)) is bounded by |sigma gamma| + |x|
    freq = abs(model.sigma * label.gamma) + abs(x)
    return _energy_integral(model, f, label.J / model.eta, spec, freq)


def parity_channels(model: NormalLawModel, label: PaaCSLabel, x: float,
                    spec: QuadratureSpec = DEFAULT_SPEC) -> tuple[complex, complex]:
    """Symmetric (cos) and antisymmetric (sin) parts of the amplitude at ``x``."""
    a, b = position_amplitude(model, label, np.array([x, -x]), spec)
    return 0.5 * (a + b), 0.5 * (a - b)


def line_density(model: NormalLawModel, label: PaaCSLabel, x,
                 spec: QuadratureSpec = DEFAULT_SPEC):
    """``|<x|J, gamma>|^2``."""
    amp = position_amplitude(model, label, x, spec)
    return np.abs(amp) ** 2 if np.ndim(amp) else abs(amp) ** 2


def line_density_moments(x, density) -> tuple[float, float, float]:
    """Mass, mean and central second moment of a density sampled on a uniform grid."""
    x = np.asarray(x, dtype=float)
    d = np.asarray(density, dtype=float)
    dx = x[1] - x[0]
    mass = float(np.sum(d) * dx)
    mean = float(np.sum(x * d) * dx / mass)
    var = float(np.sum((x - mean) ** 2 * d) * dx / mass)
    return mass, mean, var
