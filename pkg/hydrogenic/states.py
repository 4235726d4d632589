import math
import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from utils.error_handler import QuantumNumberError

logger = logging.getLogger(__name__)

MAX_Z = 11
MAX_N = 10
ORBITAL_LETTERS = "SPDFGHIKLM"


def _validate(n: int, l: int, m: int, Z: int):
    if not 1 <= Z <= MAX_Z:
        raise QuantumNumberError(f"Nuclear charge must lie in 1..{MAX_Z}", field='Z', value=Z)
    if not 1 <= n <= MAX_N:
        raise QuantumNumberError(f"Principal quantum number must lie in 1..{MAX_N}", field='n', value=n)
    if not 0 <= l <= n - 1:
        raise QuantumNumberError(f"Orbital quantum number must lie in 0..{n - 1}", field='l', value=l)
    if abs(m) > l:
        raise QuantumNumberError(f"Magnetic quantum number must satisfy |m| <= {l}", field='m', value=m)


def bound_energy(n: int, Z: int) -> float:
    """Nonrelativistic energy -Z^2/(2 n^2) in hartree."""
    _validate(n, 0, 0, Z)
    return -Z * Z / (2.0 * n * n)


@dataclass(frozen=True)
class AtomicState:
    """Hydrogen-like level |n l m> of nuclear charge Z"""
    n: int
    l: int
    m: int
    Z: int = 1

    def __post_init__(self):
        _validate(self.n, self.l, self.m, self.Z)

    @property
    def energy(self) -> float:
        return bound_energy(self.n, self.Z)

    @property
    def label(self) -> str:
        return f"{self.n}{ORBITAL_LETTERS[self.l]}"

    @classmethod
    def from_label(cls, label: str, Z: int = 1, m: int = 0) -> "AtomicState":
        """Parse spectroscopic labels such as '1S' or '3d'"""
        text = label.strip().upper()
        if len(text) < 2 or not text[:-1].isdigit() or text[-1] not in ORBITAL_LETTERS:
            raise QuantumNumberError(f"Cannot parse state label '{label}'", field='state', value=label)
        return cls(n=int(text[:-1]), l=ORBITAL_LETTERS.index(text[-1]), m=m, Z=Z)


def radial_wavefunction(n: int, l: int, Z: int, r):
    """
    Normalized radial function R_nl(r), with integral of R^2 r^2 dr equal to one.

    Args:
        n, l: principal and orbital quantum numbers
        Z: nuclear charge
        r: radius in bohr, scalar or array, r >= 0

    Returns:
        R_nl evaluated at r, same shape as r
    """
    _validate(n, l, 0, Z)
    radius = np.asarray(r, dtype=float)
    if np.any(radius < 0):
        raise QuantumNumberError("Radius must be non-negative", field='r', value=float(np.min(radius)))

    rho = 2.0 * Z * radius / n
    log_norm = 0.5 * (3.0 * math.log(2.0 * Z / n) + gammaln(n - l) - math.log(2.0 * n) - gammaln(n + l + 1))
    values = math.exp(log_norm) * np.exp(-rho / 2.0) * rho ** l * eval_genlaguerre(n - l - 1, 2 * l + 1, rho)
    return values if np.ndim(r) else float(values)
