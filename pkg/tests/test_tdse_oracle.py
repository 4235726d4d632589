import math

import numpy as np
import pandas as pd
import pytest
from scipy.integrate import cumulative_trapezoid

from stark import LaserField, dynamic_polarizability, stark_shift
from tdse_oracle import (DampedDriveConfig, EvolutionResult, TruncatedChannel, build_truncation, dump_trace,
                         extract_shift, perturbative_shift, propagate)
from utils.error_handler import ExtractionError, PhysicalValueError, ValidationError


def small_truncation(basis, count=12):
    reference = basis.reference(1, 0).index
    return (TruncatedChannel(0, 0, (reference,)), TruncatedChannel(1, 1, tuple(range(count))))


class TestExtraction:
    def test_synthetic_series(self):
        t = np.linspace(0.0, 200.0, 4001)
        c = np.exp(-1j * 0.001 * t) * np.exp(-1e-4 * t)
        delta_e = extract_shift(EvolutionResult.from_samples(t, c))
        assert delta_e.real == pytest.approx(0.001, abs=1e-9)
        assert delta_e.imag == pytest.approx(-1e-4, abs=1e-9)

    def test_window_start(self):
        t = np.linspace(-50.0, 200.0, 5001)
        phase = np.where(t < 0, 0.01 * t ** 2, -0.002 * t)
        delta_e, residual = extract_shift(EvolutionResult.from_samples(t, np.exp(1j * phase)), with_residual=True)
        assert delta_e.real == pytest.approx(0.002, abs=1e-9)
        assert residual < 1e-9

    def test_noisy_series_is_rejected(self):
        rng = np.random.default_rng(3)
        t = np.linspace(0.0, 100.0, 501)
        c = np.exp(1j * (-1e-3 * t + rng.normal(0.0, 0.5, t.size)))
        with pytest.raises(ExtractionError):
            extract_shift(EvolutionResult.from_samples(t, c))

    def test_short_damped_series_is_rejected(self):
        t = np.linspace(-5000.0, 100.0, 1001)
        result = EvolutionResult(t, np.ones_like(t, dtype=complex), np.exp(-2e-3 * np.abs(t)), damping=1e-3)
        with pytest.raises(ExtractionError):
            extract_shift(result)

    @pytest.mark.parametrize("decay", [0.0, -2e-7])
    def test_adiabatic_dressing_is_not_decay(self, decay):
        epsilon = 1e-3
        t = np.linspace(-5000.0, 3000.0, 16001)
        envelope = np.exp(-2 * epsilon * np.abs(t))
        tau = cumulative_trapezoid(envelope, t, initial=0.0)
        dressing = 1e-6 * envelope
        c = np.exp(-1j * 1e-4 * tau + decay * tau - 0.5 * dressing)
        delta_e = extract_shift(EvolutionResult(t, c, envelope, damping=epsilon))
        assert delta_e.real == pytest.approx(1e-4, rel=1e-9)
        assert delta_e.imag == pytest.approx(decay, abs=1e-13)

    def test_too_few_samples(self):
        with pytest.raises(ExtractionError):
            extract_shift(EvolutionResult.from_samples([-1.0, 0.0, 1.0], [1, 1, 1]))


class TestDriveConfig:
    def test_defaults(self):
        config = DampedDriveConfig.for_field(LaserField(0.1, 1e-4, damping=1e-3))
        assert config.t_start == pytest.approx(-5000.0)
        assert config.t_end == pytest.approx(3000.0)
        assert config.dt == pytest.approx(0.5)
        assert config.epsilon == 1e-3

    @pytest.mark.parametrize("overrides", [
        {'t_start': 10.0},
        {'t_start': -100.0},
        {'dt': 2.0},
        {'photon_order': 0},
    ])
    def test_validation(self, overrides):
        with pytest.raises(ValidationError):
            DampedDriveConfig.for_field(LaserField(0.1, 1e-4, damping=1e-3), **overrides)

    def test_needs_damping(self):
        with pytest.raises(PhysicalValueError):
            DampedDriveConfig.for_field(LaserField(0.1, 1e-4))


class TestTruncation:
    def test_single_photon_channels(self, ground_state, ground_basis):
        channels = build_truncation(ground_state, ground_basis)
        assert [(c.l, c.m) for c in channels] == [(0, 0), (1, -1), (1, 1)]
        reference = ground_basis.reference(1, 0).index
        assert reference in channels[0].indices
        energies = ground_basis.channel_spectrum(1, scaled=False).energies
        assert all(energies[i] < 2.0 for i in channels[1].indices)

    def test_rotating_wave_channels(self, ground_state, ground_basis):
        channels = build_truncation(ground_state, ground_basis, rotating_wave=True)
        assert [(c.l, c.m) for c in channels] == [(0, 0), (1, 1)]

    def test_two_photon_channels(self, ground_state, ground_basis):
        channels = build_truncation(ground_state, ground_basis, photon_order=2)
        assert {(c.l, c.m) for c in channels} == {(0, 0), (1, -1), (1, 1), (2, -2), (2, 0), (2, 2)}

    def test_perturbative_shift_matches_polarizability(self, ground_state, ground_basis):
        field = LaserField(0.1, 1e-3, damping=1e-2)
        config = DampedDriveConfig.for_field(field, energy_cutoff=1e6)
        expected = stark_shift(dynamic_polarizability(ground_state, 0.1, ground_basis), field).delta_E
        assert perturbative_shift(ground_state, config, ground_basis) == pytest.approx(expected.real, rel=1e-8)

    def test_rejects_scaled_basis(self, ground_state, ground_scaled_basis):
        config = DampedDriveConfig.for_field(LaserField(0.1, 1e-3, damping=1e-2))
        with pytest.raises(ValidationError):
            propagate(ground_state, config, ground_scaled_basis)


class TestPropagation:
    def test_zero_field(self, ground_state, ground_basis):
        config = DampedDriveConfig.for_field(LaserField(0.1, 0.0, damping=1e-2),
                                             truncation=small_truncation(ground_basis))
        result = propagate(ground_state, config, ground_basis)
        assert abs(result.delta_E) < 1e-12
        np.testing.assert_allclose(np.abs(result.c_phi), 1.0, atol=1e-12)

    def test_small_space_matches_perturbation(self, ground_state, ground_basis):
        config = DampedDriveConfig.for_field(LaserField(0.1, 1e-3, damping=1e-2),
                                             truncation=small_truncation(ground_basis))
        result = propagate(ground_state, config, ground_basis)
        expected = perturbative_shift(ground_state, config, ground_basis)
        assert result.delta_E.real == pytest.approx(expected, rel=1e-2)
        assert abs(result.delta_E.imag) < 0.1 * abs(expected)

    def test_dump_trace(self, ground_state, ground_basis, tmp_path):
        config = DampedDriveConfig.for_field(LaserField(0.1, 1e-3, damping=1e-2),
                                             truncation=small_truncation(ground_basis, count=4))
        result = propagate(ground_state, config, ground_basis)
        path = tmp_path / "trace.csv"
        dump_trace(result, str(path))
        frame = pd.read_csv(path)
        assert list(frame.columns) == ['t', 're_c_phi', 'im_c_phi']
        assert len(frame) == len(result.times)
        assert frame['re_c_phi'].iloc[0] == pytest.approx(1.0)

    @pytest.mark.slow
    def test_matches_polarizability_shift(self, ground_state, ground_basis):
        field = LaserField(0.1, 1e-4, damping=1e-3)
        result = propagate(ground_state, DampedDriveConfig.for_field(field), ground_basis)
        expected = stark_shift(dynamic_polarizability(ground_state, 0.1, ground_basis), field).delta_E
        assert result.delta_E.real == pytest.approx(expected.real, rel=1e-2)
        assert np.all(np.abs(result.c_phi) ** 2 <= 1.0 + 1e-6)

    @pytest.mark.slow
    def test_fourth_order_scaling(self, ground_state, ground_basis):
        amplitudes = [0.01, 0.02, 0.04]
        excess = []
        for amplitude in amplitudes:
            config = DampedDriveConfig.for_field(LaserField(0.1, amplitude, damping=1e-3))
            result = propagate(ground_state, config, ground_basis)
            excess.append(abs(result.delta_E.real - perturbative_shift(ground_state, config, ground_basis)))
        exponent = np.polyfit(np.log(amplitudes), np.log(excess), 1)[0]
        assert exponent == pytest.approx(4.0, abs=0.5)

    @pytest.mark.slow
    def test_rotating_wave_drops_emission_term(self, ground_state, ground_basis):
        field = LaserField(0.1, 1e-4, damping=1e-3)
        full = propagate(ground_state, DampedDriveConfig.for_field(field), ground_basis).delta_E
        rwa = propagate(ground_state, DampedDriveConfig.for_field(field, rotating_wave=True), ground_basis).delta_E
        emission = -(field.amplitude ** 2 / 4) * dynamic_polarizability(ground_state, 0.1, ground_basis).emission
        assert (full - rwa).real == pytest.approx(emission.real, rel=0.1)

    @pytest.mark.slow
    def test_damping_independence(self, ground_state, ground_basis):
        shifts = []
        for damping in (1e-3, 5e-4):
            config = DampedDriveConfig.for_field(LaserField(0.1, 1e-4, damping=damping))
            shifts.append(propagate(ground_state, config, ground_basis).delta_E.real)
        assert abs(shifts[0] - shifts[1]) / abs(shifts[1]) < 5e-3
        assert math.isfinite(shifts[0])
