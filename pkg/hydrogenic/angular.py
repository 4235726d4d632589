"""
Angular algebra of the spherical dipole components

    x_{+1} = -(x + i y)/sqrt(2)    (absorption of a sigma+ photon, m -> m + 1)
    x_{-1} =  (x - i y)/sqrt(2)    (emission, m -> m - 1)

The matrix element factorizes as <n'l'm'|x_q|nlm> = <R'|r|R> * angular_factor,
with the angular part a reduced Gaunt coefficient <l'm'|C^1_q|lm>.
"""

import math
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import List

from sympy.physics.wigner import wigner_3j

from utils.error_handler import ValidationError


class SphericalComponent(IntEnum):
    PLUS = 1
    MINUS = -1


@dataclass(frozen=True)
class AngularChannel:
    """Intermediate channel (l', m') reached from (l, m) by one component x_q"""
    l_prime: int
    m_prime: int
    weight: float


def _component(q) -> int:
    try:
        return int(SphericalComponent(q))
    except ValueError:
        raise ValidationError("Spherical component must be +1 or -1", field='q', value=q)


@lru_cache(maxsize=4096)
def _reduced_gaunt(l: int, m: int, q: int, l_prime: int, m_prime: int) -> float:
    value = wigner_3j(l_prime, 1, l, 0, 0, 0) * wigner_3j(l_prime, 1, l, -m_prime, q, m)
    return (-1) ** (m_prime % 2) * math.sqrt((2 * l + 1) * (2 * l_prime + 1)) * float(value)


def angular_factor(l: int, m: int, q: int, l_prime: int, m_prime: int) -> float:
    """
    Angular part of <l' m'| x_q / r |l m>.

    Zero unless l' = l +- 1 and m' = m + q; also zero for any (l, m) pair
    that is not a valid orbital.
    """
    q = _component(q)
    if l < 0 or l_prime < 0 or abs(m) > l or abs(m_prime) > l_prime:
        return 0.0
    if abs(l_prime - l) != 1 or m_prime != m + q:
        return 0.0
    return _reduced_gaunt(l, m, q, l_prime, m_prime)


def dipole_channels(l: int, m: int, q: int) -> List[AngularChannel]:
    """Nonzero channels reached from (l, m) by x_q, ordered l - 1 before l + 1."""
    q = _component(q)
    channels = []
    for l_prime in (l - 1, l + 1):
        weight = angular_factor(l, m, q, l_prime, m + q)
        if weight != 0.0:
            channels.append(AngularChannel(l_prime, m + q, weight))
    return channels
