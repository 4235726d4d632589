import logging
from typing import Tuple, Union

import numpy as np
from scipy.integrate import cumulative_trapezoid

from tdse_oracle.propagation import EvolutionResult
from utils.error_handler import ExtractionError

logger = logging.getLogger(__name__)

MAX_RELATIVE_RESIDUAL = 0.05
MIN_RAMP_COVERAGE = 3.0
ABSOLUTE_RESIDUAL_FLOOR = 1e-12


def _linear_fit(tau: np.ndarray, values: np.ndarray) -> Tuple[float, float]:
    slope, intercept = np.polyfit(tau, values, 1)
    scatter = float(np.sqrt(np.mean((values - (slope * tau + intercept)) ** 2)))
    return float(slope), scatter


def _decay_slope(times: np.ndarray, envelope: np.ndarray, log_population: np.ndarray) -> float:
    """
    Slope of ln |c_phi|^2 against tau over the whole damped series.

    Below threshold the population dips by an amount proportional to the
    envelope and comes back as the field switches off. A regressor in the
    envelope absorbs that dip so only the accumulated loss enters the slope.
    """
    tau = cumulative_trapezoid(envelope, times, initial=0.0)
    design = np.column_stack([tau, envelope, np.ones_like(tau)])
    coefficients, *_ = np.linalg.lstsq(design, log_population, rcond=None)
    return float(coefficients[0])


def extract_shift(result: EvolutionResult, window_start: float = 0.0,
                  with_residual: bool = False) -> Union[complex, Tuple[complex, float]]:
    """
    Fit Delta E from the reference amplitude over t >= window_start.

    The field strength squared is e^(-2 eps |t|), so the accumulated phase is
    linear in tau(t) = integral of the envelope rather than in t:

        arg c_phi = -Re(Delta E) tau,   ln |c_phi|^2 = 2 Im(Delta E) tau

    For undamped series the envelope is 1 and tau = t. The phase is fitted
    over the window; for damped series the decay is fitted over all samples
    with the envelope as a second regressor, so a bound state that only
    dresses adiabatically gets Im(Delta E) near zero.

    Raises:
        ExtractionError: residual above 5 % of the fitted phase span, too few
            samples, or a damped series that does not cover 3/eps after t = 0
    """
    times = np.asarray(result.times, dtype=float)
    mask = times >= window_start
    if mask.sum() < 3:
        raise ExtractionError("Fewer than three samples in the fit window", reason="window")
    if result.damping > 0 and result.damping * (times[-1] - window_start) < MIN_RAMP_COVERAGE * (1.0 - 1e-9):
        raise ExtractionError("Propagation ends before three ramp timescales after t = 0", reason="coverage")

    envelope = np.asarray(result.envelope, dtype=float)
    tau = cumulative_trapezoid(envelope[mask], times[mask], initial=0.0)
    series = np.asarray(result.c_phi, dtype=complex)
    amplitudes = series[mask]
    if np.any(amplitudes == 0):
        raise ExtractionError("Reference amplitude vanished in the fit window", reason="depleted")

    phase = np.unwrap(np.angle(amplitudes))
    phase_slope, scatter = _linear_fit(tau, phase)
    if result.damping > 0 and np.all(series != 0):
        decay_slope = _decay_slope(times, envelope, np.log(np.abs(series) ** 2))
    else:
        decay_slope, _ = _linear_fit(tau, np.log(np.abs(amplitudes) ** 2))

    span = abs(phase_slope) * (tau[-1] - tau[0])
    residual = scatter / span if span > 0 else 0.0
    if scatter > ABSOLUTE_RESIDUAL_FLOOR and residual > MAX_RELATIVE_RESIDUAL:
        raise ExtractionError(f"Phase fit unreliable (relative residual {residual:.3f})", residual=residual,
                              reason="residual")

    delta_e = complex(-phase_slope, 0.5 * decay_slope)
    logger.debug("Extracted shift %s from %d samples (residual %.2e)", delta_e, mask.sum(), residual)
    return (delta_e, residual) if with_residual else delta_e
