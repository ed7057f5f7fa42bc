"""Pseudo-action and angle coordinates for unbounded classical motion.

For ``H = p^2/(2m) + V(q) = E`` on the positive-velocity branch, any
increasing ``J(E)`` together with ``gamma = t(q, p) / J'(E)`` gives a
canonical chart: ``det d(gamma, J)/d(q, p) = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ClassicallyForbidden, DomainError, InvalidDomain
from .numerics import QuadratureSpec, fd_derivative, integrate_interval

# Tolerances tight enough that central differences of t(q, p) stay accurate.
TOF_SPEC = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-14, max_subdivisions=4000)
MIN_KINETIC = 1e-9


@dataclass(frozen=True)
class PotentialModel:
    V: Callable
    dV: Callable
    m: float = 1.0
    q0: float = 0.0

    def __post_init__(self):
        if not self.m > 0:
            raise InvalidDomain("mass must be positive")

    @classmethod
    def free(cls, m: float = 1.0, q0: float = 0.0) -> "PotentialModel":
        return cls(lambda q: np.zeros_like(np.asarray(q, dtype=float)),
                   lambda q: np.zeros_like(np.asarray(q, dtype=float)), m, q0)

    @classmethod
    def linear(cls, slope: float = 1.0, m: float = 1.0, q0: float = 0.0) -> "PotentialModel":
        return cls(lambda q: slope * np.asarray(q, dtype=float),
                   lambda q: slope * np.ones_like(np.asarray(q, dtype=float)), m, q0)

    def energy(self, q: float, p: float) -> float:
        return p * p / (2.0 * self.m) + float(self.V(q))

    def check_derivative(self, points, step: float = 1e-3) -> float:
        """Max deviation between ``dV`` and a finite-difference derivative of ``V``."""
        pts = np.asarray(points, dtype=float)
        num = fd_derivative(self.V, pts, 1, step).real
        return float(np.max(np.abs(num - np.asarray(self.dV(pts), dtype=float))))


@dataclass(frozen=True)
class PseudoActionMap:
    J_of_E: Callable
    E_of_J: Callable
    Jprime_of_E: Callable

    @classmethod
    def normal_law(cls, eta: float, energy_scale: float = 1.0, h: float = 1.0) -> "PseudoActionMap":
        """``J = h eta ln(E / energy_scale)``."""
        if not eta > 0:
            raise InvalidDomain("eta must be positive")

        def J_of_E(E):
            if E <= 0:
                raise DomainError(f"E={E} outside (0, inf)")
            return h * eta * math.log(E / energy_scale)

        def Jprime_of_E(E):
            if E <= 0:
                raise DomainError(f"E={E} outside (0, inf)")
            return h * eta / E

        return cls(J_of_E, lambda J: energy_scale * math.exp(J / (h * eta)), Jprime_of_E)


def momentum_of(q: float, E: float, pot: PotentialModel) -> float:
    kinetic = E - float(pot.V(q))
    if kinetic <= 0:
        raise ClassicallyForbidden(f"E={E} <= V({q})={E - kinetic}")
    return math.sqrt(2.0 * pot.m) * math.sqrt(kinetic)


def time_of_flight(q: float, E: float, pot: PotentialModel,
                   spec: QuadratureSpec = TOF_SPEC) -> float:
    """``t - t0 = sqrt(m/2) int_{q0}^{q} dq' / sqrt(E - V(q'))``."""
    q0 = pot.q0
    if q == q0:
        return 0.0
    lo, hi = min(q, q0), max(q, q0)
    probe = np.linspace(lo, hi, 65)
    if np.min(E - np.asarray(pot.V(probe), dtype=float)) < MIN_KINETIC:
        raise ClassicallyForbidden(f"E - V < {MIN_KINETIC} on the path [{lo}, {hi}]")

    def integrand(qq):
        kin = E - np.asarray(pot.V(qq), dtype=float)
        if np.min(kin) < MIN_KINETIC:
            raise ClassicallyForbidden("E - V too small on the integration path")
        return 1.0 / np.sqrt(kin)

    return math.sqrt(pot.m / 2.0) * integrate_interval(integrand, q0, q, spec).real


def to_action_angle(q: float, p: float, pot: PotentialModel,
                    amap: PseudoActionMap) -> tuple[float, float]:
    """``(q, p) -> (J, gamma)`` on the positive-velocity branch."""
    if not p > 0:
        raise InvalidDomain("only the positive-velocity branch p > 0 is implemented")
    E = pot.energy(q, p)
    J = amap.J_of_E(E)
    gamma = time_of_flight(q, E, pot) / amap.Jprime_of_E(E)
    return J, gamma


def _jacobian(func, q: float, p: float, step: float) -> np.ndarray:
    """Central-difference Jacobian with one level of Richardson extrapolation."""

    def central(h):
        cols = []
        for dq, dp in ((h, 0.0), (0.0, h)):
            plus = np.asarray(func(q + dq, p + dp))
            minus = np.asarray(func(q - dq, p - dp))
            cols.append((plus - minus) / (2.0 * h))
        return np.column_stack(cols)

    return (4.0 * central(step / 2.0) - central(step)) / 3.0


def jacobian_determinant(q: float, p: float, pot: PotentialModel, amap: PseudoActionMap,
                         step: float = 1e-4) -> float:
    """``det d(gamma, J)/d(q, p)``; rows ordered angle first, like (q, p)."""

    def chart(qq, pp):
        J, gamma = to_action_angle(qq, pp, pot, amap)
        return gamma, J

    return float(np.linalg.det(_jacobian(chart, q, p, step)))


def jacobian_check(q: float, p: float, pot: PotentialModel, amap: PseudoActionMap,
                   step: float = 1e-4) -> float:
    """``|det - 1|`` for the pseudo-action-angle chart."""
    return abs(jacobian_determinant(q, p, pot, amap, step) - 1.0)


def intermediate_determinant(q: float, p: float, pot: PotentialModel, amap: PseudoActionMap,
                             step: float = 1e-4) -> float:
    """``det d(t, J)/d(q, p)``, which equals ``J'(E)``."""

    def chart(qq, pp):
        E = pot.energy(qq, pp)
        return time_of_flight(qq, E, pot), amap.J_of_E(E)

    return float(np.linalg.det(_jacobian(chart, q, p, step)))
