"""
Cartesian sum-over-states form of the shift.

With V(x) = -eps_L x / sqrt(2) and V(y) = -eps_L y / sqrt(2),

    Delta E = 1/4 sum_m sum_{s=+-1}
              [V(x)_pm V(x)_mp + V(y)_pm V(y)_mp + s i V(x)_pm V(y)_mp - s i V(y)_pm V(x)_mp]
              / (E_phi - E_m + s omega + i eps)

Matrix elements of x and y follow from the spherical components:
x = (x_{-1} - x_{+1}) / sqrt(2), y = i (x_{+1} + x_{-1}) / sqrt(2).
The spectral sum runs over every eigenstate of the unscaled basis, so it
checks the spherical-resolvent route through independent algebra.
"""

import math

import numpy as np

from hydrogenic.angular import angular_factor
from hydrogenic.states import AtomicState
from radial_solver.basis import RadialBasis
from stark.shift import LaserField
from utils.error_handler import ThresholdError, ValidationError


def cartesian_stark_shift(state: AtomicState, field: LaserField, basis: RadialBasis,
                          regularization: float = 0.0) -> complex:
    if basis.scaling_angle != 0.0:
        raise ValidationError("Cartesian spectral sum needs an unscaled basis", field='scaling_angle',
                              value=basis.scaling_angle)
    reference = basis.reference(state.n, state.l)
    if reference.energy + field.omega > 0 and regularization == 0.0:
        raise ThresholdError("Cartesian spectral sum below threshold only", energy=reference.energy + field.omega)

    coupling = -field.amplitude / math.sqrt(2.0)
    shift = 0j
    for l_prime in (state.l - 1, state.l + 1):
        if l_prime < 0:
            continue
        spectrum = basis.channel_spectrum(l_prime, scaled=False)
        radial = spectrum.vectors.T @ (basis.dipole(l_prime, state.l) @ reference.vector)
        for m_prime in (state.m - 1, state.m + 1):
            plus = angular_factor(state.l, state.m, +1, l_prime, m_prime)
            minus = angular_factor(state.l, state.m, -1, l_prime, m_prime)
            if plus == 0.0 and minus == 0.0:
                continue
            x_mp = radial * (minus - plus) / math.sqrt(2.0)
            y_mp = 1j * radial * (plus + minus) / math.sqrt(2.0)
            vx_mp, vy_mp = coupling * x_mp, coupling * y_mp
            vx_pm, vy_pm = np.conj(vx_mp), np.conj(vy_mp)
            for sign in (+1, -1):
                numerator = vx_pm * vx_mp + vy_pm * vy_mp + sign * 1j * (vx_pm * vy_mp - vy_pm * vx_mp)
                denominator = reference.energy - spectrum.energies + sign * field.omega + 1j * regularization
                shift += 0.25 * np.sum(numerator / denominator)
    return complex(shift)
