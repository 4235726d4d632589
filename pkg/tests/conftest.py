import os
import sys
import math

import numpy as np
import pytest
from scipy.special import lpmv

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hydrogenic import AtomicState  # noqa: E402
from radial_solver import RadialBasisConfig, build_basis  # noqa: E402


def spherical_harmonic(l, m, theta, phi):
    """Y_lm with the Condon-Shortley phase, built from associated Legendre functions"""
    am = abs(m)
    norm = math.sqrt((2 * l + 1) / (4 * math.pi) * math.factorial(l - am) / math.factorial(l + am))
    y = norm * lpmv(am, l, np.cos(theta)) * np.exp(1j * am * phi)
    return (-1) ** am * np.conj(y) if m < 0 else y


@pytest.fixture(scope="session")
def ground_state():
    return AtomicState(1, 0, 0, Z=1)


@pytest.fixture(scope="session")
def excited_state():
    return AtomicState(2, 0, 0, Z=1)


@pytest.fixture(scope="session")
def ground_basis(ground_state):
    return build_basis(RadialBasisConfig.for_state(ground_state), Z=1)


@pytest.fixture(scope="session")
def ground_scaled_basis(ground_state):
    return build_basis(RadialBasisConfig.for_state(ground_state, scaling_angle=0.2), Z=1)


@pytest.fixture(scope="session")
def excited_basis(excited_state):
    return build_basis(RadialBasisConfig.for_state(excited_state), Z=1)


@pytest.fixture(scope="session")
def excited_scaled_basis(excited_state):
    return build_basis(RadialBasisConfig.for_state(excited_state, scaling_angle=0.2), Z=1)
