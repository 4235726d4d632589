import math
import logging
from dataclasses import dataclass, replace

from hydrogenic.constants import CONSTANTS
from hydrogenic.states import AtomicState
from stark.polarizability import PolarizabilityResult
from utils.error_handler import PhysicalValueError

logger = logging.getLogger(__name__)

C_AU = CONSTANTS.c_au


def intensity_from_field(amplitude: float) -> float:
    """Cycle-averaged intensity c eps_L^2 / (8 pi) of a circular field of amplitude eps_L (a.u.)"""
    if amplitude < 0:
        raise PhysicalValueError("Field amplitude must be non-negative", field='amplitude', value=amplitude)
    return C_AU * amplitude ** 2 / (8.0 * math.pi)


def field_from_intensity(intensity: float) -> float:
    if intensity < 0:
        raise PhysicalValueError("Intensity must be non-negative", field='intensity', value=intensity)
    return math.sqrt(8.0 * math.pi * intensity / C_AU)


def intensity_from_density(energy_density: float) -> float:
    """Intensity I = varpi c of a beam with energy density varpi (a.u.)"""
    if energy_density < 0:
        raise PhysicalValueError("Energy density must be non-negative", field='energy_density',
                                 value=energy_density)
    return energy_density * C_AU


@dataclass(frozen=True)
class LaserField:
    """Circularly polarized field; damping is only used by the time-dependent oracle"""
    omega: float
    amplitude: float
    damping: float = 0.0

    def __post_init__(self):
        if self.omega <= 0:
            raise PhysicalValueError("Photon energy must be positive", field='omega', value=self.omega)
        if self.amplitude < 0:
            raise PhysicalValueError("Field amplitude must be non-negative", field='amplitude',
                                     value=self.amplitude)
        if self.damping < 0:
            raise PhysicalValueError("Damping must be non-negative", field='damping', value=self.damping)

    @property
    def intensity(self) -> float:
        return intensity_from_field(self.amplitude)

    @property
    def intensity_si(self) -> float:
        return CONSTANTS.to_si('intensity', self.intensity)

    @classmethod
    def from_intensity(cls, omega: float, intensity: float, damping: float = 0.0) -> "LaserField":
        """Build from an intensity in atomic units"""
        return cls(omega, field_from_intensity(intensity), damping)

    @classmethod
    def from_si(cls, omega: float, intensity_w_m2: float, damping: float = 0.0) -> "LaserField":
        if intensity_w_m2 < 0:
            raise PhysicalValueError("Intensity must be non-negative", field='intensity', value=intensity_w_m2)
        return cls.from_intensity(omega, CONSTANTS.to_atomic('intensity', intensity_w_m2), damping)

    @classmethod
    def from_wavelength(cls, wavelength_nm: float, intensity_w_m2: float) -> "LaserField":
        if wavelength_nm <= 0:
            raise PhysicalValueError("Wavelength must be positive", field='wavelength_nm', value=wavelength_nm)
        return cls.from_si(CONSTANTS.wavelength_nm_to_omega(wavelength_nm), intensity_w_m2)


@dataclass(frozen=True)
class StarkShiftResult:
    """
    Shift in atomic units plus SI coefficients.

    beta_AC, beta_ioni in s^-1 / (W m^-2), gamma_i in s^-1, sigma_i in m^2,
    delta_E_hz is the complex shift divided by h.
    """
    state: AtomicState
    omega: float
    intensity: float
    polarizability: complex
    delta_E: complex
    beta_AC: float
    beta_ioni: float
    gamma_i: float
    sigma_i: float

    @property
    def Z(self) -> int:
        return self.state.Z

    @property
    def delta_E_hz(self) -> complex:
        return CONSTANTS.energy_to_hz(self.delta_E)

    @property
    def intensity_si(self) -> float:
        return CONSTANTS.to_si('intensity', self.intensity)


def stark_shift(polarizability: PolarizabilityResult, field: LaserField) -> StarkShiftResult:
    """
    Dynamic shift, coefficients and ionization rate.

        Delta E = -(2 pi / c) I P
        beta_AC = Re Delta E / I,  beta_ioni = -Im Delta E / (pi I)
        gamma_i = 2 pi beta_ioni I, sigma_i = 2 pi omega beta_ioni
    """
    if abs(field.omega - polarizability.omega) > 1e-12 * max(1.0, field.omega):
        raise PhysicalValueError("Field frequency differs from the polarizability frequency",
                                 field='omega', value=field.omega)
    total = polarizability.total
    intensity = field.intensity
    delta_e = -(2.0 * math.pi / C_AU) * intensity * total

    beta_ac = -(2.0 * math.pi / C_AU) * total.real
    beta_ioni = (2.0 / C_AU) * total.imag
    gamma = 2.0 * math.pi * beta_ioni * intensity
    sigma = 2.0 * math.pi * field.omega * beta_ioni

    result = StarkShiftResult(
        state=polarizability.state,
        omega=field.omega,
        intensity=intensity,
        polarizability=total,
        delta_E=complex(delta_e),
        beta_AC=CONSTANTS.to_si('intensity_coefficient', beta_ac),
        beta_ioni=CONSTANTS.to_si('intensity_coefficient', beta_ioni),
        gamma_i=CONSTANTS.to_si('rate', gamma),
        sigma_i=CONSTANTS.to_si('area', sigma),
    )
    logger.debug("Shift %s omega=%.6f I=%.4e: %s", polarizability.state.label, field.omega, intensity, delta_e)
    return result


def z_rescale(result: StarkShiftResult, Z: int) -> StarkShiftResult:
    """Predict the result for charge Z at omega' = (Z/Z0)^2 omega and the same intensity."""
    ratio = Z / result.state.Z
    return replace(
        result,
        state=replace(result.state, Z=Z),
        omega=result.omega * ratio ** 2,
        polarizability=result.polarizability / ratio ** 4,
        delta_E=result.delta_E / ratio ** 4,
        beta_AC=result.beta_AC / ratio ** 4,
        beta_ioni=result.beta_ioni / ratio ** 4,
        gamma_i=result.gamma_i / ratio ** 4,
        sigma_i=result.sigma_i / ratio ** 2,
    )


@dataclass(frozen=True)
class TransitionShift:
    """Light shift of a two-photon line between two levels, in Hz"""
    ground: StarkShiftResult
    excited: StarkShiftResult

    @property
    def differential_hz(self) -> complex:
        return self.excited.delta_E_hz - self.ground.delta_E_hz


def two_photon_frequency(ground: AtomicState, excited: AtomicState) -> float:
    """Photon energy (E_e - E_g)/2 of the degenerate two-photon transition"""
    if ground.Z != excited.Z:
        raise PhysicalValueError("Both levels must belong to the same ion", field='Z', value=excited.Z)
    omega = 0.5 * (excited.energy - ground.energy)
    if omega <= 0:
        raise PhysicalValueError("Excited level must lie above the ground level", field='excited',
                                 value=excited.label)
    return omega


def transition_shift(ground: StarkShiftResult, excited: StarkShiftResult) -> TransitionShift:
    if ground.omega != excited.omega or ground.intensity != excited.intensity:
        raise PhysicalValueError("Both shifts must use the same laser field", field='omega', value=excited.omega)
    return TransitionShift(ground, excited)
