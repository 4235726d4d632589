"""
Utils Module - Supporting Utilities

This module provides the exception hierarchy, error logging and run logging.

ERROR HIERARCHY:
- utils/error_handler.py: AcStarkError - base class, exit code 1 for compute failures
    ValidationError -> QuantumNumberError, PhysicalValueError
    BasisConstructionError, ResonanceError, ThresholdError, LinearSolveError,
    PropagationError, ExtractionError, UndefinedDeviationError
    ConfigError (exit 2) -> UnknownKeyError (3), ConflictingUnitsError (4), InvalidValueError (5)
- utils/logger.py: setup_logging for entry scripts, log_run CSV journal

Usage:
    from utils.error_handler import ResonanceError, safe_execute, error_handler
    from utils.logger import setup_logging, log_run

    outcome = safe_execute(dynamic_polarizability, state, omega, basis)
    if not outcome["success"]:
        print(outcome["error"], outcome["suggestions"])
"""
