"""Text formats for generator sets: Pauli rows, check matrices and records."""

import logging
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from pauli.pauli_string import PauliString, format_pauli, parse_pauli
from utils.errors import InvalidParameterError, PauliParseError

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "catalog" / "fixtures"

FORMATS = ("pauli", "check", "records")


def read_rows(text: str) -> List[PauliString]:
    """
    Parse the row format: '#' comment lines, then one IXYZ row per line.

    Args:
        text: File contents

    Returns:
        Parsed rows in file order

    Raises:
        PauliParseError: a row has a foreign character, with line number
    """
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append(parse_pauli(line))
        except PauliParseError as e:
            raise PauliParseError(f"line {line_no}: {e}", position=e.position, line=line_no)
    return rows


def format_rows(gens: Sequence[PauliString]) -> str:
    return "".join(format_pauli(g) + "\n" for g in gens)


def check_matrix_text(gens: Sequence[PauliString]) -> str:
    """One "x-bits|z-bits" line per generator."""
    lines = []
    for g in gens:
        x = "".join(str((g.xmask >> q) & 1) for q in range(g.n))
        z = "".join(str((g.zmask >> q) & 1) for q in range(g.n))
        lines.append(f"{x}|{z}\n")
    return "".join(lines)


def read_check_matrix(text: str) -> List[PauliString]:
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        x_bits, sep, z_bits = line.partition("|")
        if not sep or len(x_bits) != len(z_bits) or not x_bits:
            raise PauliParseError(f"line {line_no}: expected 'x-bits|z-bits'", line=line_no)
        for position, char in enumerate(x_bits + z_bits):
            if char not in "01":
                raise PauliParseError(
                    f"line {line_no}: invalid bit {char!r} at position {position}",
                    position=position,
                    line=line_no,
                )
        n = len(x_bits)
        xmask = sum(int(b) << q for q, b in enumerate(x_bits))
        zmask = sum(int(b) << q for q, b in enumerate(z_bits))
        rows.append(PauliString(n, xmask, zmask))
    return rows


def read_code_text(text: str) -> Tuple[List[PauliString], dict]:
    """
    Read any of the three output formats.

    Records lines ("key=value") are returned as metadata; the remaining
    lines are parsed as check-matrix rows when they contain '|', else as
    Pauli rows.
    """
    metadata = {}
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if "=" in line and not line.startswith("#"):
            key, _, value = line.partition("=")
            metadata[key.strip()] = value.strip()
            body.append("")
        else:
            body.append(raw)
    joined = "\n".join(body)
    if any("|" in line and not line.lstrip().startswith("#") for line in body):
        return read_check_matrix(joined), metadata
    return read_rows(joined), metadata


def header_line(code) -> str:
    pure = "true" if code.pure else "false"
    return f"# {code.parameters} s={code.s} pure={pure} via {code.provenance}\n"


def render_code(code, fmt: str = "pauli") -> str:
    """
    Render a StabilizerCode in one of the output formats.

    Args:
        code: The code to render
        fmt: "pauli", "check" or "records"

    Returns:
        Header line followed by the body
    """
    if fmt not in FORMATS:
        raise InvalidParameterError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    out = header_line(code)
    if fmt == "pauli":
        out += format_rows(code.gens)
    elif fmt == "check":
        out += check_matrix_text(code.gens)
    else:
        out += f"n={code.n}\nk={code.k}\ns={code.s}\n"
        out += f"pure={'true' if code.pure else 'false'}\nprovenance={code.provenance}\n"
        out += format_rows(code.gens)
    return out


def load_code_file(path: Union[str, Path]) -> Tuple[List[PauliString], dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return read_code_text(fh.read())


def load_fixture(name: str) -> List[PauliString]:
    """Load a checked-in transcription from the fixture directory."""
    path = FIXTURE_DIR / name
    logger.debug(f"Loading fixture {path}")
    with open(path, "r", encoding="utf-8") as fh:
        return read_rows(fh.read())
