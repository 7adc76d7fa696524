"""Tests for the settings model."""

import pytest
from pydantic import ValidationError

from config.settings import Settings


class TestSettings:
    """Test cases for defaults and validated assignment."""

    def test_defaults(self):
        s = Settings()
        assert s.log_level == "WARNING"
        assert s.weight_enumeration_cap == 24
        assert s.exhaustive_verify_cap == 32768
        assert s.alignment_max_rows == 7
        assert s.eight_block_golden

    def test_assignment_is_validated(self):
        s = Settings()
        with pytest.raises(ValidationError):
            s.log_level = "LOUD"
        with pytest.raises(ValidationError):
            s.alignment_max_rows = 12

    def test_constructor_bounds(self):
        with pytest.raises(ValidationError):
            Settings(weight_enumeration_cap=0)
