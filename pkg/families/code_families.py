"""Infinite code families: Gottesman [2^m], [8·m], perfect [f_m] and [8f_m]."""

import logging
from typing import List, Optional, Sequence

from config.settings import settings
from gf2.bin_matrix import (
    BinMatrix,
    companion_fixed_point_free,
    hamming_matrix,
    is_fixed_point_free,
    is_invertible,
    matmul,
)
from pasting.block_pasting import fold_chain
from pasting.generator_block import GeneratorBlock, StabilizerCode, make_block, promote
from pauli.pauli_string import PauliString, block_lift, concat_all, restrict
from utils.code_io import load_fixture
from utils.errors import CodeError, InvalidParameterError

logger = logging.getLogger(__name__)

# Fixed-point-free A_5 and invertible R whose [RH_5 | A_5 RH_5] is the
# [[32,25,3]] punctured into the 28-qubit blocks. Columns of H_5 are read
# most significant bit first.
A5_PUNCTURE_BASE = BinMatrix.from_lists(
    [
        [1, 1, 0, 0, 0],
        [1, 1, 0, 1, 0],
        [0, 1, 0, 0, 0],
        [0, 1, 1, 0, 1],
        [0, 1, 1, 0, 0],
    ]
)
R_PUNCTURE_BASE = BinMatrix.from_lists(
    [
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [1, 1, 1, 0, 0],
    ]
)

TABLE2_FIXTURES = {3: "table2_tails_m3.txt", 4: "table2_tails_m4.txt", 6: "table2_tails_m6.txt"}


def gottesman_block(
    m: int,
    a: Optional[BinMatrix] = None,
    r: Optional[BinMatrix] = None,
    msb_first: bool = False,
) -> GeneratorBlock:
    """
    Rows X(2^m), Z(2^m) followed by the check matrix [R H_m | A R H_m].

    Args:
        m: Number of check rows, at least 2
        a: Fixed-point-free m x m matrix, the companion of x^m+x+1 by default
        r: Optional invertible m x m column transform
        msb_first: Read the columns of H_m most significant bit first

    Returns:
        GeneratorBlock with m + 2 rows; it commutes for m >= 3
    """
    if m < 2:
        raise InvalidParameterError(f"Gottesman construction needs m >= 2, got {m}")
    if a is None:
        a = companion_fixed_point_free(m)
    elif not is_fixed_point_free(a):
        raise InvalidParameterError("A_m must be invertible and fixed-point free")
    if r is not None and not is_invertible(r):
        raise InvalidParameterError("R must be invertible")

    h = hamming_matrix(m, msb_first=msb_first)
    if r is not None:
        h = matmul(r, h)
    ah = matmul(a, h)

    n = 1 << m
    rows = [PauliString.all_x(n), PauliString.all_z(n)]
    rows.extend(PauliString(n, h.data[i], ah.data[i]) for i in range(m))
    return make_block(rows)


def gottesman_code(m: int) -> StabilizerCode:
    """Gottesman's [[2^m, 2^m-m-2, 3]] for m >= 3."""
    if m < 3:
        raise InvalidParameterError(f"gottesman_code needs m >= 3, got {m}")
    return promote(gottesman_block(m), provenance=f"[2^{m}]")


def gottesman_code_reference_25() -> StabilizerCode:
    """The [[32,25,3]] built from A5_PUNCTURE_BASE and R_PUNCTURE_BASE."""
    block = gottesman_block(5, a=A5_PUNCTURE_BASE, r=R_PUNCTURE_BASE, msb_first=True)
    return promote(block, provenance="[2^5]")


def _eight_block_head(m: int) -> List[PauliString]:
    base = gottesman_code(3).gens
    return [concat_all([base[i]] * m) for i in range(5)]


def _eight_block(m: int, tails: Sequence[PauliString], provenance: str) -> StabilizerCode:
    rows = _eight_block_head(m) + [block_lift(t, 8) for t in tails]
    return promote(make_block(rows), provenance=provenance)


def eight_block_code(m: int) -> StabilizerCode:
    """
    The [[8m, 8m - l_m - 5, 3]] family, l_m = ceil(log2 m).

    The first five rows are [2^3] repeated over the m blocks of 8 qubits.
    The tail rows are Gottesman [2^{l_m}] without its X/Z rows, cut to the
    first m qubits and lifted to 8-qubit blocks. For m = 3, 4 the printed
    layouts are used when ``settings.eight_block_golden`` is set.
    """
    if m < 3:
        raise InvalidParameterError(f"eight_block_code needs m >= 3, got {m}")
    if settings.eight_block_golden and m in (3, 4):
        return eight_block_code_table2(m)

    l_m = (m - 1).bit_length()
    tails = [restrict(g, range(m)) for g in gottesman_block(l_m).gens[2:]]
    logger.debug(f"[8*{m}] uses {l_m} tail rows from [2^{l_m}]")
    return _eight_block(m, tails, provenance=f"[8*{m}]")


def eight_block_code_table2(m: int) -> StabilizerCode:
    """[8·m] with the tabulated tail rows, m in {3, 4, 6}."""
    fixture = TABLE2_FIXTURES.get(m)
    if fixture is None:
        raise InvalidParameterError(f"no tabulated [8*m] layout for m={m}")
    return _eight_block(m, load_fixture(fixture), provenance=f"[8*{m}]")


def eight_block_optimal(m: int) -> bool:
    """True inside the windows where l_m + 5 meets the Hamming bound."""
    r = 1
    while (1 << (2 * r - 1)) < m:
        f_next = ((1 << (2 * r + 2)) - 1) // 3
        if f_next + 1 <= m <= 1 << (2 * r + 1):
            return True
        if ((1 << (2 * r + 1)) + 1 + 2) // 3 <= m <= 1 << (2 * r):
            return True
        r += 1
    return False


def perfect_code(m: int) -> StabilizerCode:
    """[f_m] = [2^{2(m-1)}] ▷ ... ▷ [2^4] ▷ [5]; m = 2 is [[5,1,3]] itself."""
    if m < 2:
        raise InvalidParameterError(f"perfect_code needs m >= 2, got {m}")
    five = make_block(load_fixture("five_qubit.txt"))
    exponents = list(range(2 * (m - 1), 3, -2))
    blocks = [gottesman_code(e).block for e in exponents] + [five]
    provenance = ">".join([f"[2^{e}]" for e in exponents] + ["[5]"])
    return promote(fold_chain(blocks, aligned=False), provenance=provenance)


def eight_fm_code(m: int) -> StabilizerCode:
    """[8f_m] = [2^{2m+1}] ▷ [2^{2m-1}] ▷ ... ▷ [2^3]."""
    if m < 1:
        raise InvalidParameterError(f"eight_fm_code needs m >= 1, got {m}")
    exponents = list(range(2 * m + 1, 2, -2))
    blocks = [gottesman_code(e).block for e in exponents]
    provenance = ">".join(f"[2^{e}]" for e in exponents)
    code = promote(fold_chain(blocks, aligned=False), provenance=provenance)
    if code.s != 2 * m + 3:
        raise CodeError(f"[8f_{m}] has s={code.s}, expected {2 * m + 3}")
    return code
