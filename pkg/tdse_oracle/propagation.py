"""
Time-dependent check of the light shift.

The damped circular drive V(t) = -(eps_L/2) e^(-eps|t|) [x_{-1} e^(i w t) - x_{+1} e^(-i w t)]
only couples levels with m' = m +- 1. In the frame co-rotating with the field,
psi_a = e^(-i m_a w t) phi_a, the carrier disappears exactly:

    i d/dt phi = [ diag(E_a - m_a w) + e^(-eps|t|) G ] phi,   G = (eps_L/2) (X + X^T)

with X_ab = <a|x_{+1}|b> real. Each step applies the exponential of the
midpoint generator through a symmetric eigendecomposition.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from hydrogenic.angular import angular_factor
from hydrogenic.states import AtomicState
from radial_solver.basis import RadialBasis
from stark.shift import LaserField
from utils.error_handler import PhysicalValueError, PropagationError, ValidationError

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-6
EXCLUDED_COUPLING_RATIO = 1e-3


@dataclass(frozen=True)
class TruncatedChannel:
    """Eigenstates of channel (l, m) kept in the propagation, by unscaled spectrum index"""
    l: int
    m: int
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class DampedDriveConfig:
    field: LaserField
    t_start: float
    t_end: float
    dt: float
    energy_cutoff: float = 2.0
    photon_order: int = 1
    rotating_wave: bool = False
    truncation: Optional[Tuple[TruncatedChannel, ...]] = None

    def __post_init__(self):
        epsilon = self.field.damping
        if epsilon <= 0:
            raise PhysicalValueError("Oracle drive needs a positive damping rate", field='damping', value=epsilon)
        if not self.t_start < 0.0 < self.t_end:
            raise ValidationError("Propagation window must contain t = 0", field='t_start', value=self.t_start)
        if epsilon * abs(self.t_start) < 5.0 * (1.0 - 1e-12):
            raise ValidationError("Start time must satisfy eps |t_start| >= 5", field='t_start', value=self.t_start)
        if self.dt <= 0 or self.dt * self.field.omega > 0.05 * (1.0 + 1e-12):
            raise ValidationError("Time step must satisfy dt * omega <= 0.05", field='dt', value=self.dt)
        if self.photon_order < 1:
            raise ValidationError("Photon order must be at least 1", field='photon_order', value=self.photon_order)

    @property
    def epsilon(self) -> float:
        return self.field.damping

    @classmethod
    def for_field(cls, field: LaserField, **overrides) -> "DampedDriveConfig":
        """Default window [-5/eps, 3/eps] with dt = 0.05/omega"""
        epsilon = field.damping
        if epsilon <= 0:
            raise PhysicalValueError("Oracle drive needs a positive damping rate", field='damping', value=epsilon)
        settings = {
            't_start': -5.0 / epsilon,
            't_end': 3.0 / epsilon,
            'dt': 0.05 / field.omega,
        }
        settings.update(overrides)
        return cls(field=field, **settings)


@dataclass
class EvolutionResult:
    times: np.ndarray
    c_phi: np.ndarray
    envelope: np.ndarray
    damping: float = 0.0
    delta_E: Optional[complex] = None
    residual: Optional[float] = None

    @classmethod
    def from_samples(cls, times, c_phi) -> "EvolutionResult":
        """Undamped series (envelope 1), e.g. for checking the fit on synthetic data"""
        times = np.asarray(times, dtype=float)
        return cls(times, np.asarray(c_phi, dtype=complex), np.ones_like(times))


@dataclass
class _TruncatedSpace:
    energies: np.ndarray
    magnetic: np.ndarray
    coupling: np.ndarray
    reference: int
    channels: List[TruncatedChannel] = field(default_factory=list)


def build_truncation(state: AtomicState, basis: RadialBasis, photon_order: int = 1, energy_cutoff: float = 2.0,
                     rotating_wave: bool = False) -> Tuple[TruncatedChannel, ...]:
    """
    Channels reachable from (l, m) within photon_order dipole steps, keeping
    unscaled eigenstates below energy_cutoff. rotating_wave keeps m' >= m only.
    """
    reached = {(state.l, state.m)}
    frontier = {(state.l, state.m)}
    for _ in range(photon_order):
        step = set()
        for l, m in frontier:
            for l_prime in (l - 1, l + 1):
                for m_prime in (m - 1, m + 1):
                    if l_prime < 0 or abs(m_prime) > l_prime:
                        continue
                    if rotating_wave and m_prime < state.m:
                        continue
                    step.add((l_prime, m_prime))
        frontier = step - reached
        reached |= step

    reference_index = basis.reference(state.n, state.l).index
    channels = []
    for l, m in sorted(reached):
        energies = basis.channel_spectrum(l, scaled=False).energies
        indices = set(np.flatnonzero(energies < energy_cutoff).tolist())
        if (l, m) == (state.l, state.m):
            indices.add(reference_index)
        channels.append(TruncatedChannel(l, m, tuple(sorted(indices))))
    return tuple(channels)


def _warn_on_truncation(state: AtomicState, basis: RadialBasis, channels: Tuple[TruncatedChannel, ...]):
    reference = basis.reference(state.n, state.l)
    for channel in channels:
        if abs(channel.l - state.l) != 1:
            continue
        spectrum = basis.channel_spectrum(channel.l, scaled=False)
        couplings = np.abs(spectrum.vectors.T @ (basis.dipole(channel.l, state.l) @ reference.vector))
        kept = np.zeros(couplings.shape, dtype=bool)
        kept[list(channel.indices)] = True
        if kept.all() or not kept.any():
            continue
        largest_excluded, largest_included = couplings[~kept].max(), couplings[kept].max()
        if largest_excluded > EXCLUDED_COUPLING_RATIO * largest_included:
            logger.warning("Truncation of channel l=%d m=%d drops a coupling %.3e (largest kept %.3e)",
                           channel.l, channel.m, largest_excluded, largest_included)


def _truncated_space(state: AtomicState, config: DampedDriveConfig, basis: RadialBasis) -> _TruncatedSpace:
    if basis.scaling_angle != 0.0:
        raise ValidationError("Propagation needs an unscaled basis", field='scaling_angle',
                              value=basis.scaling_angle)
    channels = config.truncation or build_truncation(state, basis, config.photon_order, config.energy_cutoff,
                                                     config.rotating_wave)
    _warn_on_truncation(state, basis, channels)

    reference = basis.reference(state.n, state.l)
    energies, magnetic, vectors, owners = [], [], [], []
    reference_position = None
    for channel in channels:
        spectrum = basis.channel_spectrum(channel.l, scaled=False)
        for index in channel.indices:
            if (channel.l, channel.m) == (state.l, state.m) and index == reference.index:
                reference_position = len(energies)
            energies.append(spectrum.energies[index])
            magnetic.append(channel.m)
            vectors.append(spectrum.vectors[:, index])
            owners.append(channel)
    if reference_position is None:
        raise ValidationError("Truncation does not contain the reference state", field='truncation',
                              value=state.label)

    size = len(energies)
    x_plus = np.zeros((size, size))
    for a in range(size):
        for b in range(size):
            factor = angular_factor(owners[b].l, owners[b].m, +1, owners[a].l, owners[a].m)
            if factor != 0.0:
                x_plus[a, b] = factor * (vectors[a] @ basis.dipole(owners[a].l, owners[b].l) @ vectors[b])
    coupling = 0.5 * config.field.amplitude * (x_plus + x_plus.T)
    return _TruncatedSpace(np.asarray(energies), np.asarray(magnetic, dtype=float), coupling,
                           reference_position, list(channels))


def perturbative_shift(state: AtomicState, config: DampedDriveConfig, basis: RadialBasis) -> float:
    """Second-order shift of the reference state within the same truncated space (rotating frame)."""
    space = _truncated_space(state, config, basis)
    detuned = space.energies - space.magnetic * config.field.omega
    phi = space.reference
    others = np.arange(len(detuned)) != phi
    return float(np.sum(space.coupling[others, phi] ** 2 / (detuned[phi] - detuned[others])))


def propagate(state: AtomicState, config: DampedDriveConfig, basis: RadialBasis) -> EvolutionResult:
    """
    Propagate from t_start (reference state populated) to t_end and fit the shift.

    Raises:
        PropagationError: norm drift above 1e-6
        ExtractionError: the fitted shift is unreliable
    """
    from tdse_oracle.extraction import extract_shift

    space = _truncated_space(state, config, basis)
    omega, epsilon = config.field.omega, config.epsilon
    phi = space.reference
    detuned = space.energies - space.magnetic * omega
    detuned = detuned - detuned[phi]

    steps = int(round((config.t_end - config.t_start) / config.dt))
    dt = (config.t_end - config.t_start) / steps
    times = config.t_start + dt * np.arange(steps + 1)
    amplitudes = np.empty(steps + 1, dtype=complex)

    psi = np.zeros(len(detuned), dtype=complex)
    psi[phi] = 1.0
    amplitudes[0] = 1.0
    logger.info("Propagating %s: %d states, %d steps, eps=%.3e, eps_L=%.3e", state.label, len(detuned), steps,
                epsilon, config.field.amplitude)

    for k in range(steps):
        midpoint = times[k] + 0.5 * dt
        generator = np.diag(detuned) + np.exp(-epsilon * abs(midpoint)) * space.coupling
        eigenvalues, eigenvectors = np.linalg.eigh(generator)
        psi = eigenvectors @ (np.exp(-1j * eigenvalues * dt) * (eigenvectors.T @ psi))
        amplitudes[k + 1] = psi[phi]

    drift = abs(np.linalg.norm(psi) - 1.0)
    if drift > NORM_TOLERANCE:
        raise PropagationError(f"Norm drifted by {drift:.3e}", norm_drift=drift, time=float(times[-1]))

    result = EvolutionResult(times, amplitudes, np.exp(-2.0 * epsilon * np.abs(times)), damping=epsilon)
    result.delta_E, result.residual = extract_shift(result, with_residual=True)
    logger.info("Fitted shift %s: %s (residual %.2e)", state.label, result.delta_E, result.residual)
    return result


def dump_trace(result: EvolutionResult, path: str):
    """Write (t, Re c_phi, Im c_phi) as CSV"""
    frame = pd.DataFrame({
        't': result.times,
        're_c_phi': result.c_phi.real,
        'im_c_phi': result.c_phi.imag,
    })
    frame.to_csv(path, index=False, float_format='%.11e', lineterminator='\n')
