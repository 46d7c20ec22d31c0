"""Tests for custom exception classes."""

import pytest
from gspcover.exceptions import (
    GspCoverError,
    InvalidInstanceError,
    InvalidParameterError,
    CostUnavailableError,
    InvalidScheduleError,
    InvalidCoverError,
    CapExceededError,
    InfeasibleInstanceError,
    LPError,
    RoundingError,
    SerializationError,
)


class TestGspCoverError:
    """Tests for base GspCoverError exception."""

    def test_is_exception(self):
        """GspCoverError should inherit from Exception."""
        assert issubclass(GspCoverError, Exception)

    def test_can_be_raised(self):
        """GspCoverError can be raised and caught."""
        with pytest.raises(GspCoverError):
            raise GspCoverError("Test error")

    def test_message(self):
        """GspCoverError stores message correctly."""
        assert str(GspCoverError("Custom message")) == "Custom message"


class TestHierarchy:
    """Every package error is a GspCoverError."""

    @pytest.mark.parametrize("error", [
        InvalidInstanceError,
        InvalidParameterError,
        CostUnavailableError,
        InvalidScheduleError,
        InvalidCoverError,
        CapExceededError,
        InfeasibleInstanceError,
        LPError,
        RoundingError,
        SerializationError,
    ])
    def test_subclass(self, error):
        """Catching the base class catches each subclass."""
        assert issubclass(error, GspCoverError)
        with pytest.raises(GspCoverError, match="boom"):
            raise error("boom")

    def test_errors_are_distinct(self):
        """Cap and infeasibility errors are not confused by the CLI."""
        assert not issubclass(CapExceededError, InfeasibleInstanceError)
        assert not issubclass(InfeasibleInstanceError, CapExceededError)
