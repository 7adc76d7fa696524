"""Tests for the row, check-matrix and records formats."""

import pytest

from catalog.small_catalog import small_code
from utils.code_io import (
    check_matrix_text,
    format_rows,
    header_line,
    load_fixture,
    read_check_matrix,
    read_code_text,
    read_rows,
    render_code,
)
from utils.errors import InvalidParameterError, PauliParseError


class TestRowFormat:
    """Test cases for Pauli row files."""

    def test_comments_and_blank_lines(self):
        rows = read_rows("# header\n\nXZ\n  # indented comment\nYI\n")
        assert format_rows(rows) == "XZ\nYI\n"

    def test_error_carries_line(self):
        with pytest.raises(PauliParseError) as exc_info:
            read_rows("# ok\nXX\nXA\n")
        assert exc_info.value.line == 3
        assert exc_info.value.position == 1

    def test_fixture(self):
        rows = load_fixture("five_qubit.txt")
        assert format_rows(rows).splitlines()[0] == "XXXXI"


class TestCheckMatrix:
    """Test cases for the x-bits|z-bits format."""

    def test_text(self):
        rows = read_rows("XYZI\n")
        assert check_matrix_text(rows) == "1100|0110\n"
        assert read_check_matrix("1100|0110\n") == rows

    @pytest.mark.parametrize("text", ["1100\n", "110|0110\n", "1120|0110\n", "|\n"])
    def test_malformed(self, text):
        with pytest.raises(PauliParseError):
            read_check_matrix(text)


class TestRenderCode:
    """Test cases for rendered codes."""

    def test_header(self, five_qubit_code):
        assert header_line(five_qubit_code) == "# [[5,1,3]] s=4 pure=true via [5]\n"

    def test_degenerate_header(self):
        assert "pure=false" in header_line(small_code(6))

    def test_records(self, five_qubit_code):
        rows, metadata = read_code_text(render_code(five_qubit_code, "records"))
        assert metadata == {"n": "5", "k": "1", "s": "4", "pure": "true", "provenance": "[5]"}
        assert rows == list(five_qubit_code.gens)

    def test_unknown_format(self, five_qubit_code):
        with pytest.raises(InvalidParameterError):
            render_code(five_qubit_code, "json")
