"""
Single laser mode in a Fock state.

The interaction H_L = -e eps_V [ -x_{+1} a + x_{-1} a^dagger ], with
eps_V = sqrt(hbar omega / (2 eps0 V)), gives the second-order shift of the
dressed level |phi, n>:

    Delta E = (e^2 hbar omega / 2 eps0 V) [ A_+ n + A_- (n + 1) ]

    A_+ = sum_m |<m|x_{+1}|phi>|^2 / (E_phi - E_m + hbar omega)   (absorption, |m, n-1>)
    A_- = sum_m |<m|x_{-1}|phi>|^2 / (E_phi - E_m - hbar omega)   (emission,   |m, n+1>)

At I = varpi c with varpi = n hbar omega / V the classical shift equals the
n-proportional part; the remaining prefactor * A_- is the spontaneous term
and its relative weight falls off as 1/n.
"""

import math
import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

from hydrogenic.angular import SphericalComponent, angular_factor
from hydrogenic.states import AtomicState
from radial_solver.basis import RadialBasis
from stark.polarizability import dynamic_polarizability, polarizability_terms
from stark.shift import LaserField, intensity_from_density, stark_shift
from utils.error_handler import PhysicalValueError, UndefinedDeviationError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FockMode:
    """Laser mode of frequency omega in volume V holding photon_number photons (a.u.)"""
    photon_number: int
    volume: float
    omega: float
    zero_point_offset: float = 0.0

    def __post_init__(self):
        number = self.photon_number
        if isinstance(number, bool) or float(number) != int(number) or number < 0:
            raise PhysicalValueError("Photon number must be a non-negative integer", field='photon_number',
                                     value=number)
        object.__setattr__(self, 'photon_number', int(number))
        if self.volume <= 0:
            raise PhysicalValueError("Mode volume must be positive", field='volume', value=self.volume)
        if self.omega <= 0:
            raise PhysicalValueError("Photon energy must be positive", field='omega', value=self.omega)

    @property
    def coupling(self) -> float:
        """Single-photon field eps_V = sqrt(omega / (2 eps0 V)) with eps0 = 1/(4 pi)"""
        return math.sqrt(2.0 * math.pi * self.omega / self.volume)

    @property
    def prefactor(self) -> float:
        return self.coupling ** 2

    @property
    def energy_density(self) -> float:
        return self.photon_number * self.omega / self.volume

    @property
    def matched_intensity(self) -> float:
        return intensity_from_density(self.energy_density)

    def matched_field(self) -> LaserField:
        return LaserField.from_intensity(self.omega, self.matched_intensity)

    def level_energy(self, photons: float) -> float:
        """Field energy of the n-photon level; the offset is common to every level"""
        return photons * self.omega + self.zero_point_offset

    def level_gap(self, upper: float, lower: float) -> float:
        """Energy difference of two photon levels, taken relative to the vacuum level"""
        return self.level_energy(upper - lower) - self.level_energy(0.0)


class DressedLevel(NamedTuple):
    l: int
    m: int
    photons: int


@dataclass(frozen=True)
class QuantizedShiftResult:
    state: AtomicState
    mode: FockMode
    absorption_amplitude: complex
    emission_amplitude: complex

    @property
    def prefactor(self) -> float:
        return self.mode.prefactor

    @property
    def photon_number(self) -> int:
        return self.mode.photon_number

    @property
    def delta_E(self) -> complex:
        n = float(self.photon_number)
        return self.prefactor * (self.absorption_amplitude * n + self.emission_amplitude * (n + 1.0))


def spontaneous_term(result: QuantizedShiftResult) -> complex:
    """Part of the quantized shift that survives at n = 0"""
    return result.prefactor * result.emission_amplitude


def quantized_shift(state: AtomicState, mode: FockMode, basis: RadialBasis) -> QuantizedShiftResult:
    """
    Second-order shift of |phi, n> in a quantized circular mode.

    Intermediate energies come from dressed-level differences, so a uniform
    offset of the field energies does not change the result. For n = 0 the
    absorption channel is absent.
    """
    n = float(mode.photon_number)
    # A_+- = -(weight^2 * resolvent) at the dressed intermediate energy
    absorption = 0j
    if mode.photon_number > 0:
        photon_gain = mode.level_gap(n, n - 1.0)
        absorption = -sum((t.contribution for t in polarizability_terms(state, photon_gain, basis, +1)), 0j)
    photon_cost = mode.level_gap(n + 1.0, n)
    emission = -sum((t.contribution for t in polarizability_terms(state, photon_cost, basis, -1)), 0j)
    result = QuantizedShiftResult(state, mode, absorption, emission)
    logger.debug("Quantized shift %s n=%d V=%.4e: %s", state.label, mode.photon_number, mode.volume,
                 result.delta_E)
    return result


def classical_limit_deviation(state: AtomicState, mode: FockMode, basis: RadialBasis,
                              field: Optional[LaserField] = None) -> float:
    """
    Relative deviation |Delta E_q - Delta E_c| / |Delta E_c| at matched intensity I = varpi c.

    Raises:
        ValidationError: supplied field does not match the mode intensity
        UndefinedDeviationError: the classical shift vanishes
    """
    if field is None:
        field = mode.matched_field()
    elif abs(field.intensity - mode.matched_intensity) > 1e-12 * max(mode.matched_intensity, 1e-300) \
            or abs(field.omega - mode.omega) > 1e-12 * mode.omega:
        raise ValidationError("Classical field must match the mode frequency and intensity", field='field',
                              value=field.intensity)

    classical = stark_shift(dynamic_polarizability(state, mode.omega, basis), field).delta_E
    if classical == 0:
        raise UndefinedDeviationError("Classical shift is zero; relative deviation undefined")
    quantum = quantized_shift(state, mode, basis).delta_E
    return abs(quantum - classical) / abs(classical)


def coupling_element(mode: FockMode, bra: DressedLevel, ket: DressedLevel, radial: float) -> float:
    """
    <bra| H_L |ket> for H_L = -eps_V [ -x_{+1} a + x_{-1} a^dagger ].

    radial is the (real, symmetric) radial dipole integral between the two
    atomic levels; angular factors supply the rest.
    """
    absorb = 0.0
    if bra.photons == ket.photons - 1:
        absorb = -angular_factor(ket.l, ket.m, int(SphericalComponent.PLUS), bra.l, bra.m) * math.sqrt(ket.photons)
    emit = 0.0
    if bra.photons == ket.photons + 1:
        emit = angular_factor(ket.l, ket.m, int(SphericalComponent.MINUS), bra.l, bra.m) * math.sqrt(ket.photons + 1)
    return -mode.coupling * radial * (absorb + emit)
