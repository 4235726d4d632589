"""
Stark Module - Dynamic Polarizability, Light Shift and Ionization

COMPONENTS:
- stark/polarizability.py: dynamic_polarizability, PolarizabilityResult, rescale_polarizability
- stark/shift.py: LaserField, stark_shift, StarkShiftResult, z_rescale, two-photon helpers
- stark/scan.py: resonance_frequencies, scan_frequencies (guard band, bracket and threshold flags)
- stark/cartesian.py: cartesian_stark_shift, x/y spectral-sum cross-check

RESULT FLOW:
    RadialBasis -> dynamic_polarizability -> stark_shift(P, LaserField) -> StarkShiftResult (SI)

Usage:
    from stark import LaserField, dynamic_polarizability, stark_shift

    P = dynamic_polarizability(state, omega=0.1, basis=basis)
    result = stark_shift(P, LaserField.from_si(0.1, 1e4))
    result.beta_AC, result.delta_E_hz
"""

from stark.polarizability import (PolarizabilityResult, PolarizabilityTerm, dynamic_polarizability,
                                  polarizability_terms, rescale_polarizability)
from stark.shift import (LaserField, StarkShiftResult, TransitionShift, field_from_intensity,
                         intensity_from_density, intensity_from_field, stark_shift, transition_shift,
                         two_photon_frequency, z_rescale)
from stark.scan import (FLAG_COMPUTE_ERROR, FLAG_RESONANCE_BRACKET, FLAG_RESONANCE_GAP, FLAG_THRESHOLD_OPEN,
                        GUARD_BAND, ScanPoint, frequency_grid, resonance_frequencies, scan_frequencies)
from stark.cartesian import cartesian_stark_shift

__all__ = [
    'PolarizabilityResult',
    'PolarizabilityTerm',
    'dynamic_polarizability',
    'polarizability_terms',
    'rescale_polarizability',
    'LaserField',
    'StarkShiftResult',
    'TransitionShift',
    'field_from_intensity',
    'intensity_from_density',
    'intensity_from_field',
    'stark_shift',
    'transition_shift',
    'two_photon_frequency',
    'z_rescale',
    'FLAG_COMPUTE_ERROR',
    'FLAG_RESONANCE_BRACKET',
    'FLAG_RESONANCE_GAP',
    'FLAG_THRESHOLD_OPEN',
    'GUARD_BAND',
    'ScanPoint',
    'frequency_grid',
    'resonance_frequencies',
    'scan_frequencies',
    'cartesian_stark_shift',
]
