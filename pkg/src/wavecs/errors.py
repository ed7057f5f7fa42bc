"""Exception hierarchy shared by every module of the package."""


class WavecsError(Exception):
    """Base class for all package errors."""


class InvalidDomain(WavecsError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class DomainError(InvalidDomain):
    """A phase-space point falls outside the domain of a pseudo-action map."""


class DeltaNotUnit(InvalidDomain):
    """The commutator invariant |c1|^2 - |c2|^2 is not 1."""


class ClassicallyForbidden(InvalidDomain):
    """E <= V(q) somewhere on the requested path."""


class OutOfSpectralRange(InvalidDomain):
    """A shifted energy leaves the spectral interval [0, E_max)."""


class NonConvergence(WavecsError, ArithmeticError):
    """A quadrature exhausted its subdivision budget before meeting tolerance."""


class SlowDecay(NonConvergence):
    """An integrand envelope never drops below threshold within the scan range."""


class NonFiniteValue(WavecsError, ArithmeticError):
    """A computed value is NaN or infinite."""


class VerificationFailure(WavecsError, AssertionError):
    """A built-in cross-check exceeded its tolerance."""


class ConfigError(WavecsError):
    """A CLI or run configuration is incomplete or inconsistent."""
