import math

import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad

from hydrogenic import (CONSTANTS, AtomicState, angular_factor, bound_energy, dipole_channels,
                        radial_wavefunction)
from utils.error_handler import QuantumNumberError, ValidationError

from conftest import spherical_harmonic


class TestBoundStates:
    def test_energies(self):
        assert bound_energy(1, 1) == -0.5
        assert bound_energy(2, 1) == -0.125
        assert bound_energy(3, 11) == pytest.approx(-121.0 / 18.0)

    @pytest.mark.parametrize("n, Z", [(0, 1), (11, 1), (1, 0), (1, 12)])
    def test_energy_domain(self, n, Z):
        with pytest.raises(QuantumNumberError):
            bound_energy(n, Z)

    @pytest.mark.parametrize("n, l, Z", [(1, 0, 1), (2, 0, 1), (2, 1, 1), (3, 2, 1), (3, 1, 3), (4, 3, 11)])
    def test_radial_normalization(self, n, l, Z):
        norm, _ = quad(lambda r: (radial_wavefunction(n, l, Z, r) * r) ** 2, 0.0, np.inf, limit=200)
        assert norm == pytest.approx(1.0, abs=1e-10)

    def test_radial_origin_and_arrays(self):
        assert radial_wavefunction(1, 0, 1, 0.0) == pytest.approx(2.0)
        assert radial_wavefunction(1, 0, 2, 0.0) == pytest.approx(2.0 * 2.0 ** 1.5)
        r = np.linspace(0.0, 10.0, 5)
        np.testing.assert_allclose(radial_wavefunction(2, 0, 1, r),
                                   (1 / math.sqrt(2)) * (1 - r / 2) * np.exp(-r / 2), rtol=1e-12)

    def test_radial_rejects_negative_radius(self):
        with pytest.raises(QuantumNumberError):
            radial_wavefunction(1, 0, 1, -1.0)

    def test_state_validation_and_labels(self):
        state = AtomicState.from_label("2s", Z=3)
        assert (state.n, state.l, state.m, state.Z) == (2, 0, 0, 3)
        assert state.label == "2S"
        assert state.energy == pytest.approx(-9.0 / 8.0)
        assert AtomicState.from_label("3D", m=-2).l == 2
        for bad in [(1, 1, 0, 1), (2, 1, 2, 1), (1, 0, 0, 12)]:
            with pytest.raises(QuantumNumberError):
                AtomicState(*bad)
        with pytest.raises(QuantumNumberError):
            AtomicState.from_label("S2")


class TestAngularFactor:
    def test_known_values(self):
        assert angular_factor(0, 0, +1, 1, 1) == pytest.approx(1 / math.sqrt(3), abs=1e-15)
        assert angular_factor(1, 1, -1, 0, 0) == pytest.approx(-1 / math.sqrt(3), abs=1e-15)
        assert angular_factor(0, 0, -1, 1, -1) == pytest.approx(1 / math.sqrt(3), abs=1e-15)

    def test_selection_rules(self):
        assert angular_factor(0, 0, +1, 1, 0) == 0.0
        assert angular_factor(1, 0, +1, 1, 1) == 0.0
        assert angular_factor(0, 0, +1, 2, 1) == 0.0
        assert angular_factor(1, 1, +1, 0, 2) == 0.0

    def test_invalid_component(self):
        with pytest.raises(ValidationError):
            angular_factor(0, 0, 0, 1, 0)

    def test_adjoint_relation(self):
        for l in range(4):
            for m in range(-l, l + 1):
                for l_prime in (l - 1, l + 1):
                    for m_prime in range(-max(l_prime, 0), max(l_prime, 0) + 1):
                        forward = angular_factor(l, m, +1, l_prime, m_prime)
                        backward = angular_factor(l_prime, m_prime, -1, l, m)
                        assert forward == pytest.approx(-backward, abs=1e-14)

    def test_s_state_sum_rule(self):
        for q in (+1, -1):
            assert sum(c.weight ** 2 for c in dipole_channels(0, 0, q)) == pytest.approx(1 / 3, abs=1e-15)

    def test_matches_angular_quadrature(self):
        x, wx = leggauss(24)
        theta = np.arccos(x)[:, None]
        phi = (2 * np.pi * np.arange(32) / 32)[None, :]
        weights = wx[:, None] * (2 * np.pi / 32)
        for l in range(4):
            for m in range(-l, l + 1):
                for q in (+1, -1):
                    c1q = math.sqrt(4 * math.pi / 3) * spherical_harmonic(1, q, theta, phi)
                    for l_prime in (l - 1, l + 1):
                        if l_prime < 0:
                            continue
                        for m_prime in range(-l_prime, l_prime + 1):
                            integrand = np.conj(spherical_harmonic(l_prime, m_prime, theta, phi)) * c1q \
                                * spherical_harmonic(l, m, theta, phi)
                            numeric = np.sum(weights * integrand)
                            assert abs(numeric.imag) < 1e-12
                            assert angular_factor(l, m, q, l_prime, m_prime) == pytest.approx(numeric.real, abs=1e-12)

    def test_dipole_channels(self):
        channels = dipole_channels(1, 0, +1)
        assert [(c.l_prime, c.m_prime) for c in channels] == [(2, 1)]
        channels = dipole_channels(1, 1, -1)
        assert [(c.l_prime, c.m_prime) for c in channels] == [(0, 0), (2, 0)]


class TestConstants:
    def test_atomic_unit_values(self):
        assert CONSTANTS.c_au == pytest.approx(137.035999, rel=1e-8)
        assert CONSTANTS.atomic_intensity == pytest.approx(6.436e19, rel=1e-3)
        assert CONSTANTS.to_si('intensity', CONSTANTS.c_au / (8 * math.pi)) == pytest.approx(3.509e20, rel=1e-3)

    @pytest.mark.parametrize("quantity", ['length', 'area', 'energy', 'time', 'rate', 'field', 'intensity'])
    def test_round_trip(self, quantity):
        value = 0.123456789
        assert CONSTANTS.to_atomic(quantity, CONSTANTS.to_si(quantity, value)) == pytest.approx(value, rel=1e-12)

    def test_unknown_quantity(self):
        with pytest.raises(ValidationError):
            CONSTANTS.to_si('temperature', 1.0)

    def test_frequency_helpers(self):
        assert CONSTANTS.omega_to_wavelength_nm(1.0) == pytest.approx(45.5634, rel=1e-5)
        omega = CONSTANTS.wavelength_nm_to_omega(243.0)
        assert CONSTANTS.omega_to_wavelength_nm(omega) == pytest.approx(243.0, rel=1e-12)
        assert CONSTANTS.hz_to_omega(CONSTANTS.omega_to_hz(0.1875)) == pytest.approx(0.1875, rel=1e-12)
        energy = -1.25e-9 + 3e-11j
        assert CONSTANTS.hz_to_energy(CONSTANTS.energy_to_hz(energy)) == pytest.approx(energy, rel=1e-10)
