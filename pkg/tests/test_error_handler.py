import numpy as np
import pytest

from utils.error_handler import (AcStarkError, ConfigError, ConflictingUnitsError, ErrorHandler, InvalidValueError,
                                 LinearSolveError, ResonanceError, ThresholdError, UnknownKeyError,
                                 handle_compute_error, safe_execute)


def test_exit_codes():
    assert AcStarkError("x").exit_code == 1
    assert ResonanceError("x").exit_code == 1
    assert ConfigError("x").exit_code == 2
    assert UnknownKeyError("x").exit_code == 3
    assert ConflictingUnitsError("x").exit_code == 4
    assert InvalidValueError("x").exit_code == 5


def test_handle_compute_error_maps_linalg_failures():
    @handle_compute_error
    def singular():
        return np.linalg.solve(np.zeros((2, 2)), np.ones(2))

    with pytest.raises(LinearSolveError) as excinfo:
        singular()
    assert excinfo.value.details['operation'] == 'singular'


def test_handle_compute_error_passes_domain_errors():
    @handle_compute_error
    def resonant():
        raise ResonanceError("on the pole", energy=-0.125, pole=-0.125)

    with pytest.raises(ResonanceError):
        resonant()


def test_safe_execute():
    assert safe_execute(lambda x: 2 * x, 3) == {"success": True, "result": 6}

    def fails():
        raise ThresholdError("open", energy=0.1)

    outcome = safe_execute(fails)
    assert outcome["success"] is False
    assert outcome["error_type"] == "THRESHOLD_ERROR"
    assert "complex-scaled basis" in outcome["error"]
    assert outcome["suggestions"]
    assert outcome["error_id"].startswith("ERR_")


def test_error_log_is_bounded():
    handler = ErrorHandler(max_log_size=3)
    for i in range(5):
        handler.log_error(ValueError(str(i)))
    recent = handler.get_recent_errors()
    assert [entry["message"] for entry in recent] == ["2", "3", "4"]
    handler.clear_errors()
    assert handler.get_recent_errors() == []


def test_user_friendly_messages():
    handler = ErrorHandler()
    assert "-0.125" in handler.get_user_friendly_message(ResonanceError("x", pole=-0.125))
    assert handler.get_user_friendly_message(ConfigError("bad", key="z")).startswith("Invalid z")
    assert handler.get_user_friendly_message(KeyError("k")).startswith("Unexpected error")
