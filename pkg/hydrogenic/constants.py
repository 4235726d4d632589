"""
Physical constants and atomic-unit conversions.

All internal formulas use atomic units (hbar = e = m_e = 4*pi*eps0 = 1).
SI values come from CODATA through scipy.constants and appear only at the
result boundary.
"""

import math
from dataclasses import dataclass
from typing import Dict

import numpy as np
from scipy import constants as sc
from scipy.constants import physical_constants

from utils.error_handler import ValidationError


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA constants in SI plus the atomic-unit factors derived from them"""
    hbar: float
    e: float
    m_e: float
    epsilon_0: float
    c: float
    h: float
    bohr_radius: float
    hartree: float
    atomic_time: float
    fine_structure: float

    @classmethod
    def codata(cls) -> "PhysicalConstants":
        return cls(
            hbar=sc.hbar,
            e=sc.e,
            m_e=sc.m_e,
            epsilon_0=sc.epsilon_0,
            c=sc.c,
            h=sc.h,
            bohr_radius=physical_constants['Bohr radius'][0],
            hartree=physical_constants['Hartree energy'][0],
            atomic_time=physical_constants['atomic unit of time'][0],
            fine_structure=sc.fine_structure,
        )

    @property
    def c_au(self) -> float:
        """Speed of light in atomic units (1/alpha)"""
        return 1.0 / self.fine_structure

    @property
    def atomic_field(self) -> float:
        """V/m per atomic unit of electric field"""
        return self.hartree / (self.e * self.bohr_radius)

    @property
    def atomic_intensity(self) -> float:
        """W/m^2 per atomic unit of intensity (E_h / (t_au a0^2))"""
        return self.hartree / (self.atomic_time * self.bohr_radius ** 2)

    @property
    def factors(self) -> Dict[str, float]:
        """SI value of one atomic unit, by quantity name"""
        return {
            'length': self.bohr_radius,
            'area': self.bohr_radius ** 2,
            'energy': self.hartree,
            'time': self.atomic_time,
            'rate': 1.0 / self.atomic_time,
            'angular_frequency': 1.0 / self.atomic_time,
            'field': self.atomic_field,
            'intensity': self.atomic_intensity,
            'intensity_coefficient': (1.0 / self.atomic_time) / self.atomic_intensity,
        }

    def _factor(self, quantity: str) -> float:
        try:
            return self.factors[quantity]
        except KeyError:
            raise ValidationError(f"Unknown quantity '{quantity}'", field='quantity', value=quantity)

    def to_atomic(self, quantity: str, value):
        return np.asarray(value) / self._factor(quantity) if np.ndim(value) else value / self._factor(quantity)

    def to_si(self, quantity: str, value):
        return np.asarray(value) * self._factor(quantity) if np.ndim(value) else value * self._factor(quantity)

    # Frequency and wavelength helpers

    def wavelength_nm_to_omega(self, wavelength_nm: float) -> float:
        omega_si = 2.0 * math.pi * self.c / (wavelength_nm * 1e-9)
        return omega_si * self.atomic_time

    def omega_to_wavelength_nm(self, omega_au: float) -> float:
        if omega_au <= 0:
            return math.inf
        omega_si = omega_au / self.atomic_time
        return 2.0 * math.pi * self.c / omega_si * 1e9

    def hz_to_omega(self, frequency_hz: float) -> float:
        return 2.0 * math.pi * frequency_hz * self.atomic_time

    def omega_to_hz(self, omega_au: float) -> float:
        return omega_au / (2.0 * math.pi * self.atomic_time)

    def energy_to_hz(self, energy_au):
        """Energy in hartree to the equivalent frequency E/h in Hz (complex allowed)"""
        return energy_au * self.hartree / self.h

    def hz_to_energy(self, frequency_hz):
        return frequency_hz * self.h / self.hartree


CONSTANTS = PhysicalConstants.codata()
