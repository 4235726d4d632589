"""
Mode dispatch for the command-line front end.

Single-shot modes (shift, quantized, oracle, two-photon-preset) exit with
code 1 on a compute failure; scans report failures as flagged rows.
"""

import os
import sys
import logging
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd
from dotenv import load_dotenv

from cli import __version__
from cli.config import RunConfig, parse_config
from cli.output import build_table, render, write_output
from hydrogenic.constants import CONSTANTS
from hydrogenic.states import AtomicState
from quantized_field.fock import FockMode, quantized_shift
from radial_solver.basis import RadialBasis, RadialBasisConfig, build_basis
from stark.polarizability import PolarizabilityResult, dynamic_polarizability
from stark.scan import FLAG_THRESHOLD_OPEN, frequency_grid, scan_frequencies
from stark.shift import LaserField, stark_shift, transition_shift, two_photon_frequency
from tdse_oracle.propagation import DampedDriveConfig, propagate
from utils.error_handler import AcStarkError, ConfigError, error_handler
from utils.logger import log_run, setup_logging

logger = logging.getLogger(__name__)

DEFAULT_THETA = 0.2


class _BasisCache:
    """One basis per (state, scaling angle) for the duration of a run"""

    def __init__(self, config: RunConfig):
        self.config = config
        self._bases: Dict[Tuple[int, int, float], RadialBasis] = {}

    def get(self, state: AtomicState, theta: float = 0.0) -> RadialBasis:
        key = (state.n, state.Z, theta)
        if key not in self._bases:
            basis_config = RadialBasisConfig.for_state(
                state,
                basis_kind=self.config.basis_kind,
                count=self.config.basis_n,
                box_radius=self.config.box_radius,
                scaling_angle=theta,
            )
            self._bases[key] = build_basis(basis_config, state.Z)
        return self._bases[key]

    def scaled(self, state: AtomicState) -> RadialBasis:
        theta = DEFAULT_THETA if self.config.theta is None else self.config.theta
        return self.get(state, theta)

    def for_frequency(self, state: AtomicState, omega: float) -> RadialBasis:
        return self.scaled(state) if state.energy + omega > 0 else self.get(state)


def _row(omega: float, intensity: float, polarizability: Optional[PolarizabilityResult],
         flags: List[str]) -> Dict[str, Any]:
    row: Dict[str, Any] = {
        'omega_au': omega,
        'lambda_nm': CONSTANTS.omega_to_wavelength_nm(omega),
        'flags': ",".join(flags),
    }
    if polarizability is not None:
        result = stark_shift(polarizability, LaserField.from_intensity(omega, intensity))
        row.update({
            'P_real': polarizability.total.real,
            'P_imag': polarizability.total.imag,
            'beta_AC': result.beta_AC,
            'beta_ioni': result.beta_ioni,
            'gamma_i': result.gamma_i,
            'sigma_i': result.sigma_i,
        })
    return row


def _open_flags(state: AtomicState, omega: float) -> List[str]:
    return [FLAG_THRESHOLD_OPEN] if state.energy + omega > 0 else []


def _run_shift(config: RunConfig, bases: _BasisCache) -> List[Dict[str, Any]]:
    state = config.atomic_state()
    omega = config.omega_au
    polarizability = dynamic_polarizability(state, omega, bases.for_frequency(state, omega))
    return [_row(omega, config.intensity_au, polarizability, _open_flags(state, omega))]


def _run_scan(config: RunConfig, bases: _BasisCache) -> List[Dict[str, Any]]:
    state = config.atomic_state()
    start, stop, count, spacing = config.scan
    grid = frequency_grid(start, stop, count, spacing)
    scaled = bases.scaled(state) if state.energy + stop > 0 else None
    points = scan_frequencies(state, grid, bases.get(state), scaled_basis=scaled, max_workers=config.threads)
    return [_row(p.omega, config.intensity_au, p.polarizability, p.flags) for p in points]


def _run_quantized(config: RunConfig, bases: _BasisCache) -> List[Dict[str, Any]]:
    state = config.atomic_state()
    omega = config.omega_au
    basis = bases.for_frequency(state, omega)
    mode = FockMode(config.n_photons, config.volume_au, omega)
    polarizability = dynamic_polarizability(state, omega, basis)
    row = _row(omega, mode.matched_intensity, polarizability, _open_flags(state, omega))
    classical = stark_shift(polarizability, mode.matched_field()).delta_E
    quantum = quantized_shift(state, mode, basis).delta_E
    row.update({
        'n_photons': mode.photon_number,
        'volume_au': mode.volume,
        'delta_E_quantized_real': quantum.real,
        'delta_E_quantized_imag': quantum.imag,
        'classical_deviation': abs(quantum - classical) / abs(classical) if classical != 0 else float('nan'),
    })
    return [row]


def _run_oracle(config: RunConfig, bases: _BasisCache) -> List[Dict[str, Any]]:
    state = config.atomic_state()
    omega = config.omega_au
    basis = bases.get(state)
    polarizability = dynamic_polarizability(state, omega, basis)
    field = LaserField.from_intensity(omega, config.intensity_au, damping=config.damping)
    evolution = propagate(state, DampedDriveConfig.for_field(field), basis)
    row = _row(omega, config.intensity_au, polarizability, [])
    expected = stark_shift(polarizability, field).delta_E
    row.update({
        'delta_E_real': expected.real,
        'delta_E_imag': expected.imag,
        'oracle_delta_E_real': evolution.delta_E.real,
        'oracle_delta_E_imag': evolution.delta_E.imag,
        'oracle_residual': evolution.residual,
    })
    return [row]


def _run_two_photon(config: RunConfig, bases: _BasisCache) -> List[Dict[str, Any]]:
    try:
        ground_label, excited_label = (part.strip() for part in config.transition.split('-'))
    except ValueError:
        raise ConfigError("Transition must look like 1S-2S", key='transition', value=config.transition)
    ground = AtomicState.from_label(ground_label, Z=config.z, m=config.m)
    excited = AtomicState.from_label(excited_label, Z=config.z, m=config.m)
    omega = two_photon_frequency(ground, excited)
    field = LaserField.from_intensity(omega, config.intensity_au)

    rows, results = [], []
    for state in (ground, excited):
        polarizability = dynamic_polarizability(state, omega, bases.for_frequency(state, omega))
        results.append(stark_shift(polarizability, field))
        row = _row(omega, config.intensity_au, polarizability, _open_flags(state, omega))
        row.update({
            'state': state.label,
            'delta_E_hz_real': results[-1].delta_E_hz.real,
            'delta_E_hz_imag': results[-1].delta_E_hz.imag,
        })
        rows.append(row)
    differential = transition_shift(*results).differential_hz
    for row in rows:
        row['differential_shift_hz'] = differential.real
    return rows


RUNNERS = {
    'shift': _run_shift,
    'scan': _run_scan,
    'quantized': _run_quantized,
    'oracle': _run_oracle,
    'two-photon-preset': _run_two_photon,
}


def run(config: RunConfig, stream=None) -> Tuple[int, Optional[pd.DataFrame]]:
    """Compute the configured mode, write the table and return (exit code, table)."""
    try:
        rows = RUNNERS[config.mode](config, _BasisCache(config))
    except AcStarkError as e:
        error_handler.log_error(e, {"mode": config.mode})
        logger.error(error_handler.get_user_friendly_message(e))
        for suggestion in error_handler.get_error_suggestions(e):
            logger.info("Suggestion: %s", suggestion)
        return e.exit_code, None

    table = build_table(rows)
    text = render(table, config.format, __version__, config.fingerprint())
    write_output(text, config.out, stream or sys.stdout)
    return 0, table


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    setup_logging()
    try:
        config = parse_config(argv)
    except SystemExit as e:
        return int(e.code or 0)
    except ConfigError as e:
        logger.error(error_handler.get_user_friendly_message(e))
        return e.exit_code

    if config.log_level:
        logging.getLogger().setLevel(config.log_level.upper())

    exit_code, table = run(config)

    journal = os.getenv('ACSTARK_RUN_LOG')
    if journal:
        log_run(journal, {
            'mode': config.mode,
            'state': config.state,
            'z': config.z,
            'exit_code': exit_code,
            'rows': 0 if table is None else len(table),
            'config_sha256': config.fingerprint(),
        })
    return exit_code
