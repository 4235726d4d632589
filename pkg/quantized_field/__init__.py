"""
Quantized Field Module - Light Shift from a Single Mode in a Fock State

COMPONENTS:
- quantized_field/fock.py: FockMode, quantized_shift, classical_limit_deviation, coupling_element

Usage:
    from quantized_field import FockMode, quantized_shift, classical_limit_deviation

    mode = FockMode(photon_number=10**6, volume=1e12, omega=0.1)
    quantized_shift(state, mode, basis).delta_E
    classical_limit_deviation(state, mode, basis)   # ~ |P_-| / (n |P|)
"""

from quantized_field.fock import (DressedLevel, FockMode, QuantizedShiftResult, classical_limit_deviation,
                                  coupling_element, quantized_shift, spontaneous_term)

__all__ = [
    'DressedLevel',
    'FockMode',
    'QuantizedShiftResult',
    'classical_limit_deviation',
    'coupling_element',
    'quantized_shift',
    'spontaneous_term',
]
