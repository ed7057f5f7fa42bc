"""Coherent states for a particle in a linear potential and for continuous spectra."""
from . import classical_paa, figio, kernels, linear_cs, numerics, paa_cs
from .classical_paa import PotentialModel, PseudoActionMap
from .errors import (ClassicallyForbidden, ConfigError, DeltaNotUnit, DomainError, InvalidDomain,
                     NonConvergence, NonFiniteValue, OutOfSpectralRange, SlowDecay,
                     VerificationFailure, WavecsError)
from .linear_cs import CSLabel, LinearModel, MotionIntegralCoeffs
from .numerics import QuadratureSpec
from .paa_cs import NormalLawModel, PaaCSLabel

__version__ = "0.1.0"
