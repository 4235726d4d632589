"""
Frequency scans of the dynamic polarizability.

Intermediate bound levels give poles of P(omega). Points within the guard
band of a pole are reported as gaps, grid neighbours on either side of a
pole carry a bracket flag, and points above the ionization threshold are
computed on the complex-scaled basis and flagged as open.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from hydrogenic.states import AtomicState
from radial_solver.basis import RadialBasis
from stark.polarizability import PolarizabilityResult, dynamic_polarizability
from utils.error_handler import safe_execute

logger = logging.getLogger(__name__)

GUARD_BAND = 1e-6

FLAG_THRESHOLD_OPEN = "threshold-open"
FLAG_RESONANCE_GAP = "near-resonance-gap"
FLAG_RESONANCE_BRACKET = "resonance-bracket"
FLAG_COMPUTE_ERROR = "compute-error"


@dataclass
class ScanPoint:
    omega: float
    polarizability: Optional[PolarizabilityResult] = None
    flags: List[str] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.polarizability is not None


def resonance_frequencies(state: AtomicState, basis: RadialBasis, omega_max: float = np.inf) -> np.ndarray:
    """Photon energies |E_m - E_phi| of the bound intermediate levels reachable by one dipole step."""
    reference = basis.reference(state.n, state.l).energy
    poles = []
    for l_prime in (state.l - 1, state.l + 1):
        if l_prime < 0:
            continue
        energies = basis.channel_spectrum(l_prime, scaled=False).energies
        bound = energies[energies < 0.0]
        poles.extend(np.abs(bound - reference))
    poles = np.unique(np.asarray(poles, dtype=float))
    return poles[(poles > GUARD_BAND) & (poles <= omega_max)]


def _bracketing_indices(omegas: np.ndarray, poles: np.ndarray) -> set:
    order = np.argsort(omegas)
    ordered = omegas[order]
    marked = set()
    for pole in poles:
        position = int(np.searchsorted(ordered, pole))
        if 0 < position < len(ordered):
            marked.update((int(order[position - 1]), int(order[position])))
    return marked


def scan_frequencies(state: AtomicState, omegas: Sequence[float], basis: RadialBasis,
                     scaled_basis: Optional[RadialBasis] = None, guard_band: float = GUARD_BAND,
                     max_workers: Optional[int] = None) -> List[ScanPoint]:
    """
    Evaluate P(omega) on a grid, in grid order.

    Args:
        state: reference state
        omegas: photon energies (a.u.)
        basis: unscaled basis used below threshold
        scaled_basis: complex-scaled basis used when E_phi + omega > 0
        guard_band: half-width of the excluded window around each pole
        max_workers: thread pool size (None lets the executor choose)
    """
    grid = np.asarray(omegas, dtype=float)
    reference = basis.reference(state.n, state.l).energy
    poles = resonance_frequencies(state, basis)
    brackets = _bracketing_indices(grid, poles)

    def evaluate(index: int) -> ScanPoint:
        omega = float(grid[index])
        point = ScanPoint(omega)
        is_open = reference + omega > 0.0
        if is_open:
            point.flags.append(FLAG_THRESHOLD_OPEN)
        if poles.size and np.min(np.abs(poles - omega)) < guard_band:
            point.flags.append(FLAG_RESONANCE_GAP)
            return point
        if index in brackets:
            point.flags.append(FLAG_RESONANCE_BRACKET)
        target = scaled_basis if is_open and scaled_basis is not None else basis
        outcome = safe_execute(dynamic_polarizability, state, omega, target)
        if outcome["success"]:
            point.polarizability = outcome["result"]
        else:
            point.flags.append(FLAG_COMPUTE_ERROR)
            point.error = outcome["error"]
            logger.warning("Scan point omega=%.8f failed: %s", omega, outcome["error"])
        return point

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        points = list(executor.map(evaluate, range(len(grid))))

    logger.info("Scanned %d frequencies for %s (%d poles, %d gaps)", len(points), state.label, len(poles),
                sum(FLAG_RESONANCE_GAP in p.flags for p in points))
    return points


def frequency_grid(start: float, stop: float, count: int, spacing: str = "linear") -> np.ndarray:
    if spacing == "log":
        return np.geomspace(start, stop, count)
    return np.linspace(start, stop, count)
