"""
Discretized radial Hilbert space.

Each angular channel l is represented by a non-orthogonal set of radial
functions u_i(r) with u_i(0) = 0. Two families are available:

- bspline: B-splines of order k on a linear or exponential knot grid in
  [0, R_max]; the first and last spline are dropped so u(0) = u(R_max) = 0.
  The same functions serve every channel.
- sturmian: Coulomb-Sturmian (Laguerre) functions
  u_i(r) = x^(l+1) e^(-x/2) L_i^(2l+1)(x), x = 2 kappa r, one set per l.

Matrix elements are evaluated by composite Gauss-Legendre quadrature:

    S_ij = <u_i|u_j>              overlap
    K_ij = <u_i|-d2/2 + l(l+1)/2r^2|u_j>
    C_ij = <u_i|1/r|u_j>
    D_ij = <u_i|r|u_j>            (between channels l and l')

Complex scaling r -> r e^(i theta) gives H_theta = e^(-2 i theta) K - e^(-i theta) Z C.
"""

import math
import logging
import threading
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
import scipy.linalg
from numpy.polynomial.legendre import leggauss
from scipy.interpolate import BSpline
from scipy.special import eval_genlaguerre, gammaln

from hydrogenic.states import MAX_Z, AtomicState, bound_energy
from utils.error_handler import BasisConstructionError, QuantumNumberError, ValidationError

logger = logging.getLogger(__name__)

MAX_CONDITION_NUMBER = 1e14
# Basis eigenvalue must match -Z^2/2n^2 to this relative accuracy to count as the reference state
REFERENCE_TOLERANCE = 1e-4


class BasisKind(str, Enum):
    BSPLINE = "bspline"
    STURMIAN = "sturmian"


class KnotLayout(str, Enum):
    LINEAR = "linear"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class RadialBasisConfig:
    """Discretization parameters; count is the number of functions before boundary removal"""
    basis_kind: BasisKind = BasisKind.BSPLINE
    count: int = 80
    box_radius: float = 30.0
    spline_order: int = 7
    knot_layout: KnotLayout = KnotLayout.EXPONENTIAL
    knot_growth: float = 6.0
    scaling_angle: float = 0.0
    sturmian_exponent: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, 'basis_kind', BasisKind(self.basis_kind))
        object.__setattr__(self, 'knot_layout', KnotLayout(self.knot_layout))
        if self.count < 10:
            raise ValidationError("Basis needs at least 10 functions", field='count', value=self.count)
        if self.box_radius <= 0:
            raise ValidationError("Box radius must be positive", field='box_radius', value=self.box_radius)
        if self.spline_order < 4:
            raise ValidationError("Spline order must be at least 4", field='spline_order', value=self.spline_order)
        if self.basis_kind is BasisKind.BSPLINE and self.count - self.spline_order + 1 < 1:
            raise ValidationError("Too few splines for the requested order", field='count', value=self.count)
        if self.knot_growth <= 0:
            raise ValidationError("Knot growth must be positive", field='knot_growth', value=self.knot_growth)
        if not 0.0 <= self.scaling_angle < math.pi / 4:
            raise ValidationError("Scaling angle must lie in [0, pi/4)", field='scaling_angle',
                                  value=self.scaling_angle)
        if self.sturmian_exponent <= 0:
            raise ValidationError("Sturmian exponent must be positive", field='sturmian_exponent',
                                  value=self.sturmian_exponent)

    @classmethod
    def for_state(cls, state: AtomicState, **overrides) -> "RadialBasisConfig":
        """Default discretization for a reference state: R_max = 30 n^2 / Z, kappa = Z / n."""
        defaults = {
            'box_radius': 30.0 * state.n ** 2 / state.Z,
            'sturmian_exponent': state.Z / state.n,
        }
        defaults.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**defaults)

    def with_scaling_angle(self, theta: float) -> "RadialBasisConfig":
        return replace(self, scaling_angle=theta)


@dataclass(frozen=True)
class ChannelSpectrum:
    """Generalized eigenpairs of (H, S); vectors satisfy v^T S v = 1 (no conjugation)"""
    energies: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class ReferenceVector:
    index: int
    energy: float
    vector: np.ndarray


class RadialChannel:
    """Matrices and spectra of one angular channel"""

    def __init__(self, l: int, Z: int, overlap: np.ndarray, kinetic: np.ndarray, coulomb: np.ndarray,
                 scaling_angle: float):
        self.l = l
        self.Z = Z
        self.overlap = overlap
        self.kinetic = kinetic
        self.coulomb = coulomb
        self.scaling_angle = scaling_angle
        self.unscaled = self._hermitian_spectrum()
        self.scaled = self._complex_spectrum() if scaling_angle > 0 else self.unscaled

    def hamiltonian(self, theta: Optional[float] = None) -> np.ndarray:
        theta = self.scaling_angle if theta is None else theta
        if theta == 0.0:
            return self.kinetic - self.Z * self.coulomb
        return np.exp(-2j * theta) * self.kinetic - np.exp(-1j * theta) * self.Z * self.coulomb

    def _hermitian_spectrum(self) -> ChannelSpectrum:
        energies, vectors = scipy.linalg.eigh(self.hamiltonian(0.0), self.overlap)
        return ChannelSpectrum(energies, vectors)

    def _complex_spectrum(self) -> ChannelSpectrum:
        energies, vectors = scipy.linalg.eig(self.hamiltonian(), self.overlap)
        norms = np.sqrt(np.einsum('ik,ij,jk->k', vectors, self.overlap, vectors))
        vectors = vectors / norms
        order = np.argsort(energies.real)
        return ChannelSpectrum(energies[order], vectors[:, order])


class RadialBasis:
    """
    Immutable radial discretization for nuclear charge Z.

    Channel matrices and spectra are built on first access and cached; the
    cache is guarded by a lock so one basis can be shared across threads.
    """

    def __init__(self, config: RadialBasisConfig, Z: int, nodes: np.ndarray, weights: np.ndarray,
                 functions: "_RadialFunctions"):
        self.config = config
        self.Z = Z
        self.nodes = nodes
        self.weights = weights
        self._functions = functions
        self._channels: Dict[int, RadialChannel] = {}
        self._dipoles: Dict[Tuple[int, int], np.ndarray] = {}
        self._lock = threading.RLock()

    @property
    def scaling_angle(self) -> float:
        return self.config.scaling_angle

    @property
    def size(self) -> int:
        return self._functions.size

    def _integrate(self, left: np.ndarray, right: np.ndarray, weight: np.ndarray) -> np.ndarray:
        return left.T @ ((self.weights * weight)[:, None] * right)

    def overlap_matrix(self, l: int) -> np.ndarray:
        values, _ = self._functions.evaluate(l)
        return self._integrate(values, values, np.ones_like(self.nodes))

    def channel(self, l: int) -> RadialChannel:
        if l < 0:
            raise QuantumNumberError("Orbital quantum number must be non-negative", field='l', value=l)
        with self._lock:
            if l not in self._channels:
                values, derivatives = self._functions.evaluate(l)
                r = self.nodes
                overlap = self._integrate(values, values, np.ones_like(r))
                kinetic = 0.5 * self._integrate(derivatives, derivatives, np.ones_like(r)) \
                    + 0.5 * l * (l + 1) * self._integrate(values, values, 1.0 / r ** 2)
                coulomb = self._integrate(values, values, 1.0 / r)
                self._channels[l] = RadialChannel(l, self.Z, overlap, kinetic, coulomb, self.scaling_angle)
                logger.debug("Built channel l=%d (%d functions, theta=%.3f)", l, overlap.shape[0],
                             self.scaling_angle)
            return self._channels[l]

    def dipole(self, l_bra: int, l_ket: int) -> np.ndarray:
        """Radial dipole matrix <u^(l_bra)_i| r |u^(l_ket)_j>"""
        key = (l_bra, l_ket)
        with self._lock:
            if key not in self._dipoles:
                bra, _ = self._functions.evaluate(l_bra)
                ket, _ = self._functions.evaluate(l_ket)
                self._dipoles[key] = self._integrate(bra, ket, self.nodes)
            return self._dipoles[key]

    def channel_spectrum(self, l: int, scaled: bool = True) -> ChannelSpectrum:
        channel = self.channel(l)
        return channel.scaled if scaled else channel.unscaled

    def reference(self, n: int, l: int) -> ReferenceVector:
        """
        Basis representative of the bound state (n, l).

        The energy is the unscaled basis eigenvalue; the vector is c-normalized
        and taken from the complex-scaled spectrum when theta > 0.
        """
        exact = bound_energy(n, self.Z)
        unscaled = self.channel_spectrum(l, scaled=False)
        index = int(np.argmin(np.abs(unscaled.energies - exact)))
        energy = float(unscaled.energies[index])
        if abs(energy - exact) > REFERENCE_TOLERANCE * abs(exact):
            raise BasisConstructionError(
                f"Basis does not resolve n={n}, l={l}: closest eigenvalue {energy:.8g} vs {exact:.8g}",
                basis_kind=self.config.basis_kind.value)
        if self.scaling_angle == 0.0:
            return ReferenceVector(index, energy, unscaled.vectors[:, index])
        scaled = self.channel_spectrum(l, scaled=True)
        scaled_index = int(np.argmin(np.abs(scaled.energies - energy)))
        return ReferenceVector(scaled_index, energy, scaled.vectors[:, scaled_index])


class _RadialFunctions:
    size: int

    def evaluate(self, l: int) -> Tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError


class _BSplineFunctions(_RadialFunctions):
    def __init__(self, knots: np.ndarray, order: int, nodes: np.ndarray):
        total = len(knots) - order
        spline = BSpline(knots, np.eye(total), order - 1, extrapolate=False)
        keep = slice(1, total - 1)
        self._values = np.nan_to_num(spline(nodes))[:, keep]
        self._derivatives = np.nan_to_num(spline.derivative()(nodes))[:, keep]
        self.size = total - 2

    def evaluate(self, l: int) -> Tuple[np.ndarray, np.ndarray]:
        return self._values, self._derivatives


class _SturmianFunctions(_RadialFunctions):
    def __init__(self, count: int, exponent: float, nodes: np.ndarray):
        self.size = count
        self._kappa = exponent
        self._nodes = nodes
        self._cache: Dict[int, Tuple[np.ndarray, np.ndarray]] = {}

    def evaluate(self, l: int) -> Tuple[np.ndarray, np.ndarray]:
        if l not in self._cache:
            x = 2.0 * self._kappa * self._nodes[:, None]
            i = np.arange(self.size)[None, :]
            alpha = 2 * l + 1
            norm = np.exp(0.5 * (gammaln(i + 1) - gammaln(i + alpha + 1)))
            envelope = x ** (l + 1) * np.exp(-x / 2.0)
            laguerre = eval_genlaguerre(i, alpha, x)
            laguerre_slope = np.where(i > 0, -eval_genlaguerre(np.maximum(i - 1, 0), alpha + 1, x), 0.0)
            values = norm * envelope * laguerre
            derivatives = 2.0 * self._kappa * norm * envelope * (((l + 1) / x - 0.5) * laguerre + laguerre_slope)
            self._cache[l] = (values, derivatives)
        return self._cache[l]


def _breakpoints(config: RadialBasisConfig, intervals: int) -> np.ndarray:
    j = np.arange(intervals + 1) / intervals
    if config.knot_layout is KnotLayout.LINEAR:
        return config.box_radius * j
    gamma = config.knot_growth
    return config.box_radius * np.expm1(gamma * j) / math.expm1(gamma)


def _composite_gauss(breakpoints: np.ndarray, points: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = leggauss(points)
    left, right = breakpoints[:-1, None], breakpoints[1:, None]
    half = 0.5 * (right - left)
    nodes = (left + half * (x[None, :] + 1.0)).ravel()
    weights = (half * w[None, :]).ravel()
    return nodes, weights


def build_basis(config: RadialBasisConfig, Z: int) -> RadialBasis:
    """
    Build the radial basis for nuclear charge Z.

    Raises:
        QuantumNumberError: Z outside 1..11
        BasisConstructionError: overlap matrix condition number above 1e14
    """
    if not 1 <= Z <= MAX_Z:
        raise QuantumNumberError(f"Nuclear charge must lie in 1..{MAX_Z}", field='Z', value=Z)

    if config.basis_kind is BasisKind.BSPLINE:
        order = config.spline_order
        breakpoints = _breakpoints(config, config.count - order + 1)
        knots = np.concatenate([np.zeros(order - 1), breakpoints, np.full(order - 1, config.box_radius)])
        nodes, weights = _composite_gauss(breakpoints, order + 2)
        functions = _BSplineFunctions(knots, order, nodes)
    else:
        extent = (4.0 * config.count + 100.0) / (2.0 * config.sturmian_exponent)
        panels = np.concatenate([[0.0], np.geomspace(1e-3 * extent / config.count, extent, config.count + 40)])
        nodes, weights = _composite_gauss(panels, 16)
        functions = _SturmianFunctions(config.count, config.sturmian_exponent, nodes)

    basis = RadialBasis(config, Z, nodes, weights, functions)
    condition = float(np.linalg.cond(basis.overlap_matrix(0)))
    if not np.isfinite(condition) or condition > MAX_CONDITION_NUMBER:
        raise BasisConstructionError(
            f"Overlap matrix is ill-conditioned (cond = {condition:.3e})",
            condition_number=condition, basis_kind=config.basis_kind.value)

    logger.debug("Built %s basis: %d functions, R_max=%.3f, Z=%d, cond(S)=%.3e",
                 config.basis_kind.value, basis.size, config.box_radius, Z, condition)
    return basis
