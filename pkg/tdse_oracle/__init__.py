"""
TDSE Oracle Module - Time-Dependent Check of the Light Shift

COMPONENTS:
- tdse_oracle/propagation.py: DampedDriveConfig, build_truncation, propagate, perturbative_shift, dump_trace
- tdse_oracle/extraction.py: extract_shift (phase and decay fit against envelope-weighted time)

Usage:
    from stark import LaserField
    from tdse_oracle import DampedDriveConfig, propagate

    field = LaserField(omega=0.1, amplitude=1e-4, damping=1e-3)
    result = propagate(state, DampedDriveConfig.for_field(field), basis)
    result.delta_E
"""

from tdse_oracle.propagation import (DampedDriveConfig, EvolutionResult, TruncatedChannel, build_truncation,
                                     dump_trace, perturbative_shift, propagate)
from tdse_oracle.extraction import extract_shift

__all__ = [
    'DampedDriveConfig',
    'EvolutionResult',
    'TruncatedChannel',
    'build_truncation',
    'dump_trace',
    'perturbative_shift',
    'propagate',
    'extract_shift',
]
