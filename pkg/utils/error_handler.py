"""
Error Handling Utilities for the AC Stark shift toolkit
Provides the exception hierarchy, error logging, and user-friendly error messages
"""

import time
import logging
import traceback
from functools import wraps
from typing import Dict, Any, Optional
from datetime import datetime

import numpy as np
import scipy.linalg

logger = logging.getLogger(__name__)


class AcStarkError(Exception):
    """Base exception for every failure raised by the toolkit"""
    exit_code = 1

    def __init__(self, message: str, error_type: str = "ACSTARK_ERROR", details: Dict[str, Any] = None):
        self.message = message
        self.error_type = error_type
        self.details = details or {}
        super().__init__(self.message)


class ValidationError(AcStarkError):
    """Input validation errors"""
    def __init__(self, message: str, field: str = None, value: Any = None, error_type: str = "VALIDATION_ERROR"):
        super().__init__(message, error_type, {
            "field": field,
            "value": value
        })


class QuantumNumberError(ValidationError):
    """Quantum numbers or nuclear charge outside the supported domain"""
    def __init__(self, message: str, field: str = None, value: Any = None):
        super().__init__(message, field, value, "QUANTUM_NUMBER_ERROR")


class PhysicalValueError(ValidationError):
    """Negative or zero physical quantities where a positive one is required"""
    def __init__(self, message: str, field: str = None, value: Any = None):
        super().__init__(message, field, value, "PHYSICAL_VALUE_ERROR")


class BasisConstructionError(AcStarkError):
    """Radial basis could not be built or does not resolve the requested state"""
    def __init__(self, message: str, condition_number: float = None, basis_kind: str = None):
        super().__init__(message, "BASIS_CONSTRUCTION_ERROR", {
            "condition_number": condition_number,
            "basis_kind": basis_kind
        })


class ResonanceError(AcStarkError):
    """Shifted energy hits a discrete eigenvalue of the intermediate channel"""
    def __init__(self, message: str, energy: float = None, pole: float = None):
        super().__init__(message, "RESONANCE_ERROR", {
            "energy": energy,
            "pole": pole
        })


class ThresholdError(AcStarkError):
    """Energy above the ionization threshold requested on an unscaled basis"""
    def __init__(self, message: str, energy: float = None):
        super().__init__(message, "THRESHOLD_ERROR", {
            "energy": energy
        })


class LinearSolveError(AcStarkError):
    """Singular or failed linear algebra"""
    def __init__(self, message: str, operation: str = None):
        super().__init__(message, "LINEAR_SOLVE_ERROR", {
            "operation": operation
        })


class PropagationError(AcStarkError):
    """Time propagation lost unitarity"""
    def __init__(self, message: str, norm_drift: float = None, time: float = None):
        super().__init__(message, "PROPAGATION_ERROR", {
            "norm_drift": norm_drift,
            "time": time
        })


class ExtractionError(AcStarkError):
    """Shift could not be fitted reliably from a propagated amplitude"""
    def __init__(self, message: str, residual: float = None, reason: str = None):
        super().__init__(message, "EXTRACTION_ERROR", {
            "residual": residual,
            "reason": reason
        })


class UndefinedDeviationError(AcStarkError):
    """Relative deviation requested against a vanishing classical shift"""
    def __init__(self, message: str):
        super().__init__(message, "UNDEFINED_DEVIATION")


class ConfigError(AcStarkError):
    """Run configuration errors (exit code 2)"""
    exit_code = 2

    def __init__(self, message: str, key: str = None, value: Any = None, error_type: str = "CONFIG_ERROR"):
        super().__init__(message, error_type, {
            "key": key,
            "value": value
        })


class UnknownKeyError(ConfigError):
    """Configuration file contains a key no flag corresponds to"""
    exit_code = 3

    def __init__(self, message: str, key: str = None):
        super().__init__(message, key, None, "UNKNOWN_KEY")


class ConflictingUnitsError(ConfigError):
    """The same quantity was given in more than one unit"""
    exit_code = 4

    def __init__(self, message: str, key: str = None, value: Any = None):
        super().__init__(message, key, value, "CONFLICTING_UNITS")


class InvalidValueError(ConfigError):
    """Negative or non-positive physical value in the run configuration"""
    exit_code = 5

    def __init__(self, message: str, key: str = None, value: Any = None):
        super().__init__(message, key, value, "INVALID_VALUE")


class ErrorHandler:
    """Centralized error handling and logging"""

    def __init__(self, max_log_size: int = 1000):
        self.error_log = []
        self.max_log_size = max_log_size

    def log_error(self, error: Exception, context: Dict[str, Any] = None) -> str:
        """Log an error and return error ID"""
        error_id = f"ERR_{int(time.time() * 1000)}"

        error_entry = {
            "id": error_id,
            "timestamp": datetime.now().isoformat(),
            "type": type(error).__name__,
            "message": str(error),
            "context": context or {},
            "traceback": traceback.format_exc()
        }

        self.error_log.append(error_entry)

        if len(self.error_log) > self.max_log_size:
            self.error_log = self.error_log[-self.max_log_size:]

        logger.debug("Logged %s as %s", error_entry["type"], error_id)
        return error_id

    def get_user_friendly_message(self, error: Exception) -> str:
        """Convert technical errors to user-friendly messages"""
        if isinstance(error, ResonanceError):
            pole = error.details.get('pole')
            return f"Resonant denominator: shifted energy lies on the intermediate level {pole:.10g} a.u." \
                if pole is not None else f"Resonant denominator: {error.message}"

        elif isinstance(error, ThresholdError):
            energy = error.details.get('energy')
            return f"Ionization channel open at E = {energy:.6g} a.u.; use a complex-scaled basis (theta > 0)"

        elif isinstance(error, ConfigError):
            key = error.details.get('key') or 'configuration'
            return f"Invalid {key}: {error.message}"

        elif isinstance(error, ValidationError):
            field = error.details.get('field') or 'input'
            return f"Invalid {field}: {error.message}"

        elif isinstance(error, BasisConstructionError):
            return f"Radial basis unusable: {error.message}"

        elif isinstance(error, AcStarkError):
            return f"Computation failed ({error.error_type}): {error.message}"

        else:
            return f"Unexpected error: {str(error)}"

    def get_error_suggestions(self, error: Exception) -> list:
        """Get suggested actions for common errors"""
        suggestions = []

        if isinstance(error, ResonanceError):
            suggestions.extend([
                "Move the laser frequency off the intermediate resonance",
                "Add a small regularization epsilon to the resolvent"
            ])
        elif isinstance(error, ThresholdError):
            suggestions.append("Pass --theta with a complex scaling angle between 0.15 and 0.3")
        elif isinstance(error, BasisConstructionError):
            suggestions.extend([
                "Reduce --basis-n or use the exponential knot layout",
                "Enlarge --box-radius for highly excited states"
            ])
        elif isinstance(error, ExtractionError):
            suggestions.append("Extend t_end or lower the damping rate of the oracle drive")
        elif isinstance(error, PropagationError):
            suggestions.append("Decrease the time step of the oracle propagation")

        return suggestions

    def get_recent_errors(self, limit: int = 10) -> list:
        """Get recent errors from log"""
        return self.error_log[-limit:]

    def clear_errors(self):
        """Clear error log"""
        self.error_log = []


# Global error handler instance
error_handler = ErrorHandler()


def handle_compute_error(func):
    """Decorator mapping linear-algebra failures onto LinearSolveError"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except AcStarkError:
            raise
        except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as e:
            error_handler.log_error(e, {
                "function": func.__name__,
                "args": str(args)[:100],
                "kwargs": str(kwargs)[:100]
            })
            raise LinearSolveError(f"Linear algebra failed: {str(e)}", operation=func.__name__) from e

    return wrapper


def safe_execute(func, *args, **kwargs) -> Dict[str, Any]:
    """Safely execute a function with error handling"""
    try:
        return {"success": True, "result": func(*args, **kwargs)}
    except Exception as e:
        error_id = error_handler.log_error(e, {
            "function": getattr(func, '__name__', repr(func)),
            "args": str(args)[:100],
            "kwargs": str(kwargs)[:100]
        })
        return {
            "success": False,
            "error": error_handler.get_user_friendly_message(e),
            "error_type": getattr(e, 'error_type', type(e).__name__),
            "exception": e,
            "error_id": error_id,
            "suggestions": error_handler.get_error_suggestions(e)
        }
