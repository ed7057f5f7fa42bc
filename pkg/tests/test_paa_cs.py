import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wavecs import paa_cs as pc
from wavecs.errors import InvalidDomain, OutOfSpectralRange, VerificationFailure

models = st.builds(pc.NormalLawModel, st.floats(0.5, 4.0), st.floats(0.5, 3.0), st.floats(0.5, 2.0))
labels = st.builds(pc.PaaCSLabel, st.floats(-2.0, 2.0), st.floats(-4.0, 4.0))
FIG2 = pc.FIG2_MODEL


def test_model_validation():
    with pytest.raises(InvalidDomain):
        pc.NormalLawModel(0.0, 1.0, 1.0)
    with pytest.raises(InvalidDomain):
        pc.NormalLawModel(1.0, 1.0, 0.0)
    with pytest.raises(InvalidDomain):
        pc.cs_coefficient(pc.NormalLawModel(1, 1, 1, E_max=2.0), pc.PaaCSLabel(0, 0), 3.0)


def test_normalization_closed_form():
    assert FIG2.N(0.0) == pytest.approx(math.exp(0.25))
    m = pc.NormalLawModel(2.0, 0.5, 1.0)
    assert pc.normalization_quadrature(m, 0.4) == pytest.approx(float(m.N(0.4)), rel=1e-11)


def test_finite_cutoff():
    m = pc.NormalLawModel(1.0, 1.0, 1.0, E_max=3.0)
    assert pc.normalization_quadrature(m, 0.5) == pytest.approx(float(m.N(0.5)), rel=1e-11)
    lab = pc.PaaCSLabel(0.5, 1.0)
    assert abs(pc.overlap(m, lab, lab) - 1.0) < 1e-11


@settings(max_examples=15, deadline=None)
@given(models, labels)
def test_unit_norm(model, label):
    assert abs(pc.overlap(model, label, label) - 1.0) < 1e-10
    assert pc.coefficient_norm(model, label) == pytest.approx(1.0, abs=1e-10)


@settings(max_examples=15, deadline=None)
@given(models, labels, labels)
def test_overlap_agrees_with_coefficients(model, a, b):
    k = pc.overlap(model, a, b)
    c = pc.overlap_by_coefficients(model, a, b)
    assert abs(k - c) < 1e-9
    assert abs(k) <= pc.overlap_bound(model, a, b) + 1e-10
    assert abs(k - pc.overlap(model, b, a).conjugate()) < 1e-12


@settings(max_examples=20, deadline=None)
@given(models, st.floats(0.1, 10.0), st.floats(0.1, 10.0))
def test_action_kernel(model, E, E2):
    assert pc.action_kernel(model, E, E2) == pytest.approx(pc.action_kernel_quadrature(model, E, E2), abs=1e-10)


def test_fourier_kernel_and_alternative_variant():
    m = pc.NormalLawModel(1.0, 2.0, 1.0)
    E2, w = pc.fourier_exponential_kernel(m, 0.5, 2.0)
    assert E2 == 1.5
    assert w == pytest.approx(math.pi * math.exp(-0.25 * 4.0 * math.log(2.0 / 1.5) ** 2))
    assert abs(pc.alternative_fourier_weight(m, 0.5, 2.0) - w) > 1e-3
    assert pc.alternative_fourier_weight(FIG2, 0.5, 2.0) == pytest.approx(pc.fourier_exponential_kernel(FIG2, 0.5, 2.0)[1])
    with pytest.raises(OutOfSpectralRange):
        pc.fourier_exponential_kernel(m, 3.0, 2.0)


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0, 3.0])
def test_energy_moments(lam):
    m = pc.NormalLawModel(1.5, 0.8, 1.0)
    mult = pc.energy_power_multiplier(m, lam)
    assert mult == pytest.approx(math.exp(lam * (lam - 1) / (4 * m.mu)))


def test_multiplier_verification_can_fail():
    with pytest.raises(VerificationFailure):
        pc.energy_power_multiplier(FIG2, 1.0, rel_tol=-1.0)


@settings(max_examples=20, deadline=None)
@given(models, labels, st.floats(-20, 20))
def test_evolution_covariance(model, label, t):
    assert pc.evolution_shift_check(model, label, t, np.linspace(0.01, 20, 300)) < 1e-12


def test_lower_symbol_of_energy():
    lab = pc.PaaCSLabel(-0.4, 2.0)
    got = pc.lower_symbol_action(FIG2, FIG2.energy_of_action, lab)
    assert got == pytest.approx(math.exp(-0.4 + 1.0), rel=1e-9)


def test_phase_space_density_peak():
    ref = pc.PaaCSLabel(0.0, 0.0)
    at_ref = pc.phase_space_density(FIG2, ref, ref)
    assert at_ref == pytest.approx(math.exp(0.25))
    for probe in [(0.5, 0.0), (0.0, 0.5), (-0.3, -0.3)]:
        assert pc.phase_space_density(FIG2, ref, pc.PaaCSLabel(*probe)) < at_ref


@pytest.mark.parametrize("gamma", pc.FIG3_GAMMAS)
def test_position_amplitude(gamma):
    m = pc.FIG3_MODEL
    lab = pc.PaaCSLabel(0.0, gamma)
    for x in (-5.0, 0.0, 4.0):
        assert abs(pc.position_amplitude(m, lab, x) - pc.position_amplitude_synthesis(m, lab, x)) < 1e-9
        assert abs(pc.F_transform(m, lab, x)) <= pc.F_bound(m, lab)
    x = np.linspace(-40, 40, 1601)
    mass, _, _ = pc.line_density_moments(x, pc.line_density(m, lab, x))
    assert mass == pytest.approx(1.0, abs=1e-6)


def test_parity_channels_sum():
    m, lab = pc.FIG3_MODEL, pc.PaaCSLabel(0.2, -1.0)
    even, odd = pc.parity_channels(m, lab, 1.7)
    assert abs(even + odd - pc.position_amplitude(m, lab, 1.7)) < 1e-14


def test_energy_basis_tag():
    tag = pc.EnergyBasisTag(4.0, "antisymmetric")
    assert tag.wavefunction(0.0) == 0
    with pytest.raises(InvalidDomain):
        pc.EnergyBasisTag(-1.0)
