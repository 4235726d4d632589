"""
Hydrogenic Module - Analytic Hydrogen-like States

COMPONENTS:
- hydrogenic/constants.py: PhysicalConstants (CODATA via scipy) and atomic-unit conversions
- hydrogenic/states.py: AtomicState, bound_energy, radial_wavefunction
- hydrogenic/angular.py: angular_factor and dipole_channels for x_{+1}, x_{-1}

Usage:
    from hydrogenic import AtomicState, CONSTANTS, angular_factor

    state = AtomicState.from_label("2S", Z=1)
    state.energy                       # -0.125 hartree
    angular_factor(0, 0, +1, 1, 1)     # 1/sqrt(3)
    CONSTANTS.to_si('intensity', 1.0)  # W/m^2 per atomic unit
"""

from hydrogenic.constants import CONSTANTS, PhysicalConstants
from hydrogenic.states import MAX_N, MAX_Z, AtomicState, bound_energy, radial_wavefunction
from hydrogenic.angular import AngularChannel, SphericalComponent, angular_factor, dipole_channels

__all__ = [
    'CONSTANTS',
    'PhysicalConstants',
    'MAX_N',
    'MAX_Z',
    'AtomicState',
    'bound_energy',
    'radial_wavefunction',
    'AngularChannel',
    'SphericalComponent',
    'angular_factor',
    'dipole_channels',
]
