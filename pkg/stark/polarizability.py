"""
Dynamic polarizability for sigma+ circular light.

    P(omega) = sum_m |<m|x_{+1}|phi>|^2 / (E_m - E_phi - omega)
             + sum_m |<m|x_{-1}|phi>|^2 / (E_m - E_phi + omega)

Each sum factorizes into angular weights times a radial resolvent amplitude,
so P = sum_q sum_channels weight^2 * A_l'(E_phi + q omega). In the static
limit P(0) equals the scalar dipole polarizability (4.5 for hydrogen 1S).
"""

import logging
from dataclasses import dataclass, field, replace
from typing import List

from hydrogenic.angular import SphericalComponent, dipole_channels
from hydrogenic.states import AtomicState
from radial_solver.basis import RadialBasis
from radial_solver.resolvent import ResolventQuery, channel_amplitude
from utils.error_handler import PhysicalValueError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolarizabilityTerm:
    """One (photon direction, intermediate channel) contribution; sign +1 absorbs, -1 emits"""
    sign: int
    l_prime: int
    m_prime: int
    weight: float
    amplitude: complex

    @property
    def contribution(self) -> complex:
        return self.weight ** 2 * self.amplitude


@dataclass(frozen=True)
class PolarizabilityResult:
    state: AtomicState
    omega: float
    terms: List[PolarizabilityTerm] = field(default_factory=list)

    @property
    def total(self) -> complex:
        return sum((term.contribution for term in self.terms), 0j)

    @property
    def absorption(self) -> complex:
        return sum((term.contribution for term in self.terms if term.sign > 0), 0j)

    @property
    def emission(self) -> complex:
        return sum((term.contribution for term in self.terms if term.sign < 0), 0j)


def polarizability_terms(state: AtomicState, omega: float, basis: RadialBasis, sign: int,
                         regularization: float = 0.0) -> List[PolarizabilityTerm]:
    """Channel contributions for one photon direction, evaluated at E_phi + sign * omega."""
    q = int(SphericalComponent(sign))
    reference_energy = basis.reference(state.n, state.l).energy
    energy = reference_energy + q * omega
    terms = []
    for channel in dipole_channels(state.l, state.m, q):
        amplitude = channel_amplitude(basis, ResolventQuery(state, channel.l_prime, energy, regularization))
        terms.append(PolarizabilityTerm(q, channel.l_prime, channel.m_prime, channel.weight, amplitude))
    return terms


def dynamic_polarizability(state: AtomicState, omega: float, basis: RadialBasis,
                           regularization: float = 0.0) -> PolarizabilityResult:
    """
    Complex dynamic polarizability of a nondegenerate reference state.

    Args:
        state: reference state (its basis eigenvalue is used as E_phi)
        omega: photon energy in hartree, omega > 0
        basis: radial basis; complex-scaled when E_phi + omega > 0
        regularization: optional +i eps of the damped derivation

    Raises:
        ThresholdError, ResonanceError: from the radial resolvent
    """
    if omega <= 0:
        raise PhysicalValueError("Photon energy must be positive", field='omega', value=omega)
    if basis.Z != state.Z:
        raise ValidationError("Basis and state nuclear charges differ", field='Z', value=state.Z)

    terms = polarizability_terms(state, omega, basis, +1, regularization) \
        + polarizability_terms(state, omega, basis, -1, regularization)
    result = PolarizabilityResult(state, omega, terms)
    logger.debug("P(%s, omega=%.6f) = %s", state.label, omega, result.total)
    return result


def rescale_polarizability(result: PolarizabilityResult, Z: int) -> PolarizabilityResult:
    """Hydrogenic scaling to charge Z: omega -> (Z/Z0)^2 omega, P -> (Z0/Z)^4 P."""
    ratio = Z / result.state.Z
    state = replace(result.state, Z=Z)
    terms = [replace(term, amplitude=term.amplitude / ratio ** 4) for term in result.terms]
    return PolarizabilityResult(state, result.omega * ratio ** 2, terms)
