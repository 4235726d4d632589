"""
Radial resolvent amplitudes

    A(E) = < R_nl | r (H_l' - E - i eps)^-1 r | R_nl >

The production path solves one linear system (H_l' - (E + i eps) S) x = s
with s = D v_phi (Dalgarno-Lewis form). The sum-over-states path diagonalizes
the same matrices and is kept as an independent check.

Under complex scaling both dipoles pick up e^(i theta), so the amplitude is
e^(2 i theta) s^T x with c-normalized reference vector and no conjugation.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from hydrogenic.states import AtomicState
from radial_solver.basis import RadialBasis, ReferenceVector
from utils.error_handler import (ResonanceError, ThresholdError, ValidationError,
                                 handle_compute_error)

logger = logging.getLogger(__name__)

RESONANCE_TOLERANCE = 1e-8


@dataclass(frozen=True)
class ResolventQuery:
    state: AtomicState
    l_prime: int
    energy: float
    regularization: float = 0.0

    def __post_init__(self):
        if abs(self.l_prime - self.state.l) != 1 or self.l_prime < 0:
            raise ValidationError("Intermediate channel must satisfy l' = l +- 1", field='l_prime',
                                  value=self.l_prime)
        if self.regularization < 0:
            raise ValidationError("Regularization must be non-negative", field='regularization',
                                  value=self.regularization)


def _band_widths(matrix: np.ndarray, rtol: float = 1e-14):
    rows, cols = np.nonzero(np.abs(matrix) > rtol * np.max(np.abs(matrix)))
    offsets = cols - rows
    return int(max(0, -offsets.min())), int(max(0, offsets.max()))


def _solve(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    size = matrix.shape[0]
    lower, upper = _band_widths(matrix)
    if lower + upper + 1 > size // 3:
        return scipy.linalg.solve(matrix, rhs)
    banded = np.zeros((lower + upper + 1, size), dtype=matrix.dtype)
    for offset in range(-lower, upper + 1):
        diagonal = np.diagonal(matrix, offset)
        if offset >= 0:
            banded[upper - offset, offset:] = diagonal
        else:
            banded[upper - offset, :size + offset] = diagonal
    return scipy.linalg.solve_banded((lower, upper), banded, rhs)


def _check_query(basis: RadialBasis, query: ResolventQuery):
    energy = query.energy
    theta = basis.scaling_angle
    if energy > 0 and theta == 0.0 and query.regularization == 0.0:
        raise ThresholdError(
            f"E = {energy:.6g} a.u. lies above the ionization threshold; complex scaling required",
            energy=energy)
    if query.regularization > 0.0:
        return
    poles = basis.channel_spectrum(query.l_prime, scaled=False).energies
    if theta > 0.0:
        poles = poles[poles < 0.0]
    if poles.size:
        nearest = poles[np.argmin(np.abs(poles - energy))]
        if abs(nearest - energy) < RESONANCE_TOLERANCE:
            raise ResonanceError(
                f"E = {energy:.10g} a.u. is within {RESONANCE_TOLERANCE:g} of the l'={query.l_prime} "
                f"level {nearest:.10g}", energy=energy, pole=float(nearest))


def _source(basis: RadialBasis, query: ResolventQuery) -> np.ndarray:
    reference: ReferenceVector = basis.reference(query.state.n, query.state.l)
    return basis.dipole(query.l_prime, query.state.l) @ reference.vector


@handle_compute_error
def channel_amplitude(basis: RadialBasis, query: ResolventQuery) -> complex:
    """
    Resolvent amplitude by a single (banded) linear solve.

    Args:
        basis: radial basis, unscaled or complex-scaled
        query: reference state, intermediate channel l', energy E and eps

    Returns:
        complex amplitude; Im >= 0 (outgoing waves) above threshold

    Raises:
        ThresholdError: E > 0 on an unscaled basis without regularization
        ResonanceError: E within 1e-8 of a discrete level of channel l'
    """
    if basis.Z != query.state.Z:
        raise ValidationError("Basis and state nuclear charges differ", field='Z', value=query.state.Z)
    _check_query(basis, query)

    theta = basis.scaling_angle
    channel = basis.channel(query.l_prime)
    source = _source(basis, query)
    shifted = query.energy + 1j * query.regularization
    system = channel.hamiltonian() - shifted * channel.overlap
    if theta == 0.0 and query.regularization == 0.0:
        system = system.real
    response = _solve(system, source)
    amplitude = np.exp(2j * theta) * (source @ response)
    logger.debug("Amplitude l'=%d E=%.8f: %s", query.l_prime, query.energy, amplitude)
    return complex(amplitude)


@handle_compute_error
def sum_over_states_amplitude(basis: RadialBasis, query: ResolventQuery,
                              max_states: Optional[int] = None) -> complex:
    """Explicit spectral sum over the discretized channel; max_states keeps the lowest terms only."""
    if basis.Z != query.state.Z:
        raise ValidationError("Basis and state nuclear charges differ", field='Z', value=query.state.Z)
    _check_query(basis, query)

    theta = basis.scaling_angle
    spectrum = basis.channel_spectrum(query.l_prime, scaled=theta > 0.0)
    source = _source(basis, query)
    projections = spectrum.vectors.T @ source
    terms = projections ** 2 / (spectrum.energies - query.energy - 1j * query.regularization)
    if max_states is not None:
        terms = terms[:max_states]
    return complex(np.exp(2j * theta) * np.sum(terms))
