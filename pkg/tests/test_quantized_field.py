import math

import pytest

from quantized_field import (DressedLevel, FockMode, classical_limit_deviation, coupling_element, quantized_shift,
                             spontaneous_term)
from stark import LaserField, dynamic_polarizability, stark_shift
from utils.error_handler import PhysicalValueError, UndefinedDeviationError, ValidationError

OMEGA = 0.1
VOLUME = 1e12


class TestFockMode:
    @pytest.mark.parametrize("kwargs", [
        {'photon_number': -1, 'volume': VOLUME, 'omega': OMEGA},
        {'photon_number': 2.5, 'volume': VOLUME, 'omega': OMEGA},
        {'photon_number': 10, 'volume': 0.0, 'omega': OMEGA},
        {'photon_number': 10, 'volume': VOLUME, 'omega': -0.1},
    ])
    def test_validation(self, kwargs):
        with pytest.raises(PhysicalValueError):
            FockMode(**kwargs)

    def test_coupling_and_matched_field(self):
        mode = FockMode(1000, VOLUME, OMEGA)
        assert mode.coupling == pytest.approx(math.sqrt(2 * math.pi * OMEGA / VOLUME), rel=1e-15)
        assert mode.energy_density == pytest.approx(1000 * OMEGA / VOLUME)
        field = mode.matched_field()
        assert field.omega == OMEGA
        assert field.intensity == pytest.approx(mode.matched_intensity, rel=1e-12)

    def test_level_gap_ignores_offset(self):
        mode = FockMode(10, VOLUME, OMEGA, zero_point_offset=0.05)
        assert mode.level_gap(11.0, 10.0) == pytest.approx(OMEGA, abs=1e-15)
        assert mode.level_energy(0.0) == 0.05


class TestQuantizedShift:
    @pytest.mark.parametrize("n", [10 ** 3, 10 ** 4])
    def test_deviation_is_spontaneous_term(self, ground_state, ground_basis, n):
        mode = FockMode(n, VOLUME, OMEGA)
        quantized = quantized_shift(ground_state, mode, ground_basis)
        classical = stark_shift(dynamic_polarizability(ground_state, OMEGA, ground_basis), mode.matched_field())
        deviation = classical_limit_deviation(ground_state, mode, ground_basis)
        expected = abs(spontaneous_term(quantized)) / abs(classical.delta_E)
        assert deviation == pytest.approx(expected, rel=1e-9)

    def test_deviation_falls_as_inverse_photon_number(self, ground_state, ground_basis):
        first = classical_limit_deviation(ground_state, FockMode(10 ** 4, VOLUME, OMEGA), ground_basis)
        second = classical_limit_deviation(ground_state, FockMode(2 * 10 ** 4, VOLUME, OMEGA), ground_basis)
        assert first / second == pytest.approx(2.0, rel=1e-6)

    @pytest.mark.parametrize("n", [10 ** 4, 10 ** 6])
    def test_depends_on_photon_density_only(self, ground_state, ground_basis, n):
        single = quantized_shift(ground_state, FockMode(n, VOLUME, OMEGA), ground_basis).delta_E
        doubled = quantized_shift(ground_state, FockMode(2 * n, 2 * VOLUME, OMEGA), ground_basis).delta_E
        assert abs(doubled - single) / abs(single) < 5.0 / n
        assert abs(doubled - single) > 0

    @pytest.mark.parametrize("n, bound", [(10 ** 6, 1e-5), (10 ** 8, 1e-7)])
    def test_classical_limit(self, ground_state, ground_basis, n, bound):
        assert classical_limit_deviation(ground_state, FockMode(n, VOLUME, OMEGA), ground_basis) < bound

    def test_vacuum_deviation_is_undefined(self, ground_state, ground_basis):
        mode = FockMode(0, VOLUME, OMEGA)
        with pytest.raises(UndefinedDeviationError):
            classical_limit_deviation(ground_state, mode, ground_basis)
        vacuum = quantized_shift(ground_state, mode, ground_basis)
        assert vacuum.absorption_amplitude == 0
        assert vacuum.delta_E == pytest.approx(spontaneous_term(vacuum), rel=1e-15)

    def test_offset_invariance(self, ground_state, ground_basis):
        plain = quantized_shift(ground_state, FockMode(500, VOLUME, OMEGA), ground_basis).delta_E
        shifted = quantized_shift(ground_state, FockMode(500, VOLUME, OMEGA, zero_point_offset=0.05),
                                  ground_basis).delta_E
        assert shifted == pytest.approx(plain, rel=1e-9)

    def test_mismatched_field(self, ground_state, ground_basis):
        mode = FockMode(1000, VOLUME, OMEGA)
        with pytest.raises(ValidationError):
            classical_limit_deviation(ground_state, mode, ground_basis, field=LaserField.from_si(OMEGA, 1e4))


class TestCouplingElement:
    def test_hermitian(self):
        mode = FockMode(50, VOLUME, OMEGA)
        pairs = [
            (DressedLevel(1, 1, 49), DressedLevel(0, 0, 50)),
            (DressedLevel(1, -1, 51), DressedLevel(0, 0, 50)),
            (DressedLevel(2, 2, 49), DressedLevel(1, 1, 50)),
            (DressedLevel(1, 0, 51), DressedLevel(2, 1, 50)),
        ]
        for bra, ket in pairs:
            forward = coupling_element(mode, bra, ket, 1.29)
            assert forward != 0.0
            assert forward == pytest.approx(coupling_element(mode, ket, bra, 1.29), rel=1e-14)

    def test_photon_number_factor(self):
        mode = FockMode(50, VOLUME, OMEGA)
        ket = DressedLevel(0, 0, 50)
        absorb = coupling_element(mode, DressedLevel(1, 1, 49), ket, 1.0)
        assert abs(absorb) == pytest.approx(mode.coupling * math.sqrt(50 / 3), rel=1e-14)
        assert coupling_element(mode, DressedLevel(1, 1, 51), ket, 1.0) == 0.0
        assert coupling_element(mode, DressedLevel(1, 0, 49), ket, 1.0) == 0.0
