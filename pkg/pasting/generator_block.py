"""Generator blocks (possibly noncommuting) and stabilizer codes."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, List, Sequence, Tuple

from gf2.bin_matrix import BinMatrix, gf2_rank
from pauli.pauli_string import PauliString, format_pauli, parse_pauli, symplectic_product
from utils.errors import DimensionMismatchError, InvalidParameterError, PastingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorBlock:
    """
    An ordered list of equal-length Pauli rows.

    ``noncomm`` holds every unordered pair {i, j} of anticommuting rows.
    ``e`` is the number of anticommuting pairs left once the rows are put
    in symplectic normal form, i.e. half the GF(2) rank of the
    commutation matrix; it coincides with ``len(noncomm)`` when the raw
    pairs are disjoint.
    """

    n: int
    gens: Tuple[PauliString, ...]
    noncomm: FrozenSet[Tuple[int, int]] = field(compare=False)
    leading_xz: bool = field(compare=False)

    @property
    def s(self) -> int:
        return len(self.gens)

    @cached_property
    def commutation_rows(self) -> Tuple[int, ...]:
        """Commutation matrix; bit j of row i is set iff rows i and j anticommute."""
        rows = [0] * self.s
        for i, j in self.noncomm:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def e(self) -> int:
        return gf2_rank(self.commutation_rows) // 2

    def symplectic_rows(self) -> List[int]:
        return [g.symplectic() for g in self.gens]

    def symplectic_matrix(self) -> BinMatrix:
        """The s x 2n check matrix [x-bits | z-bits]."""
        return BinMatrix(self.s, 2 * self.n, tuple(self.symplectic_rows()))

    def rows_text(self) -> List[str]:
        return [format_pauli(g) for g in self.gens]


def make_block(rows: Sequence[PauliString]) -> GeneratorBlock:
    """
    Build a block, recomputing its noncommuting pairs.

    Args:
        rows: Nonempty list of equal-length Pauli rows

    Returns:
        GeneratorBlock with ``noncomm`` and ``leading_xz`` filled in
    """
    rows = tuple(rows)
    if not rows:
        raise InvalidParameterError("a generator block needs at least one row")
    n = rows[0].n
    for row in rows:
        if row.n != n:
            raise DimensionMismatchError(f"row lengths differ: {n} vs {row.n}")

    noncomm = frozenset(
        (i, j)
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
        if symplectic_product(rows[i], rows[j])
    )
    leading_xz = (
        len(rows) >= 2 and rows[0] == PauliString.all_x(n) and rows[1] == PauliString.all_z(n)
    )
    return GeneratorBlock(n, rows, noncomm, leading_xz)


def block_from_text(rows: Sequence[str]) -> GeneratorBlock:
    return make_block([parse_pauli(r) for r in rows])


@dataclass(frozen=True)
class StabilizerCode:
    """A commuting, independent generator block with its construction record."""

    block: GeneratorBlock
    pure: bool = True
    provenance: str = ""

    def __post_init__(self):
        if not self.pure and self.n != 6:
            raise InvalidParameterError(
                f"only the length-6 code may be degenerate, got n={self.n}"
            )

    @property
    def n(self) -> int:
        return self.block.n

    @property
    def s(self) -> int:
        return self.block.s

    @property
    def k(self) -> int:
        return self.block.n - self.block.s

    @property
    def gens(self) -> Tuple[PauliString, ...]:
        return self.block.gens

    @property
    def parameters(self) -> str:
        return f"[[{self.n},{self.k},3]]"


def promote(block: GeneratorBlock, provenance: str, pure: bool = True) -> StabilizerCode:
    """
    Turn a block into a StabilizerCode after checking e = 0 and full rank.

    Raises:
        PastingError: the rows do not commute or are dependent
    """
    if block.noncomm:
        raise PastingError(
            f"{provenance}: {len(block.noncomm)} noncommuting pairs remain (e={block.e})"
        )
    if gf2_rank(block.symplectic_rows()) != block.s:
        raise PastingError(f"{provenance}: generators are not independent")
    return StabilizerCode(block, pure=pure, provenance=provenance)
