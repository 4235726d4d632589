"""
Radial Solver Module - Discretized Radial Problem and Resolvent Amplitudes

COMPONENTS:
- radial_solver/basis.py: RadialBasisConfig, build_basis, RadialBasis (B-spline or Sturmian)
- radial_solver/resolvent.py: ResolventQuery, channel_amplitude, sum_over_states_amplitude

Usage:
    from hydrogenic import AtomicState
    from radial_solver import RadialBasisConfig, ResolventQuery, build_basis, channel_amplitude

    state = AtomicState(1, 0, 0, Z=1)
    basis = build_basis(RadialBasisConfig.for_state(state), Z=1)
    channel_amplitude(basis, ResolventQuery(state, 1, state.energy))   # 6.75
"""

from radial_solver.basis import (BasisKind, ChannelSpectrum, KnotLayout, RadialBasis, RadialBasisConfig,
                                 ReferenceVector, build_basis)
from radial_solver.resolvent import (RESONANCE_TOLERANCE, ResolventQuery, channel_amplitude,
                                     sum_over_states_amplitude)

__all__ = [
    'BasisKind',
    'ChannelSpectrum',
    'KnotLayout',
    'RadialBasis',
    'RadialBasisConfig',
    'ReferenceVector',
    'build_basis',
    'RESONANCE_TOLERANCE',
    'ResolventQuery',
    'channel_amplitude',
    'sum_over_states_amplitude',
]
