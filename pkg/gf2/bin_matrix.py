"""Bit-packed binary matrices and GF(2) elimination."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from utils.errors import CodeError, DimensionMismatchError, InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinMatrix:
    """Row-major binary matrix; bit j of ``data[i]`` is entry (i, j)."""

    rows: int
    cols: int
    data: Tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionMismatchError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for row in self.data:
            if not 0 <= row < limit:
                raise DimensionMismatchError(f"row has bits beyond column {self.cols - 1}")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BinMatrix":
        cols = len(entries[0]) if entries else 0
        data = []
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatchError("ragged matrix rows")
            data.append(sum((bit & 1) << j for j, bit in enumerate(row)))
        return cls(len(entries), cols, tuple(data))

    @classmethod
    def identity(cls, m: int) -> "BinMatrix":
        return cls(m, m, tuple(1 << i for i in range(m)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinMatrix":
        return cls(rows, cols, (0,) * rows)

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def to_lists(self) -> List[List[int]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def column(self, j: int) -> int:
        """Column ``j`` packed with row i at bit i."""
        return sum(self.entry(i, j) << i for i in range(self.rows))

    def __xor__(self, other: "BinMatrix") -> "BinMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("matrix shapes differ")
        return BinMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of integer bit rows."""
    return len(echelon_basis(rows))


def echelon_basis(rows: Iterable[int]) -> Dict[int, int]:
    """Reduce rows to a basis keyed by each vector's leading bit."""
    basis: Dict[int, int] = {}
    for v in rows:
        while v:
            lead = v.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = v
                break
            v ^= pivot
    return basis


def reduce_vector(v: int, basis: Dict[int, int]) -> int:
    """Residual of ``v`` against an echelon basis; zero iff v is in the span."""
    while v:
        pivot = basis.get(v.bit_length() - 1)
        if pivot is None:
            return v
        v ^= pivot
    return 0


def rank(M: BinMatrix) -> int:
    return gf2_rank(M.data)


def in_row_space(v: int, M: BinMatrix) -> bool:
    """True iff the bit vector ``v`` lies in the row space of ``M``."""
    if v >> M.cols:
        raise DimensionMismatchError(f"vector has bits beyond column {M.cols - 1}")
    return reduce_vector(v, echelon_basis(M.data)) == 0


def matmul(A: BinMatrix, B: BinMatrix) -> BinMatrix:
    """GF(2) product A·B."""
    if A.cols != B.rows:
        raise DimensionMismatchError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    data = []
    for row in A.data:
        acc = 0
        k = 0
        while row:
            if row & 1:
                acc ^= B.data[k]
            row >>= 1
            k += 1
        data.append(acc)
    return BinMatrix(A.rows, B.cols, tuple(data))


def _require_square(A: BinMatrix):
    if A.rows != A.cols:
        raise DimensionMismatchError(f"matrix is not square: {A.rows}x{A.cols}")


def is_invertible(A: BinMatrix) -> bool:
    _require_square(A)
    return rank(A) == A.rows


def is_fixed_point_free(A: BinMatrix) -> bool:
    """True iff A·s is neither 0 nor s for every nonzero s."""
    _require_square(A)
    return is_invertible(A) and is_invertible(A ^ BinMatrix.identity(A.rows))


def hamming_matrix(m: int, msb_first: bool = False) -> BinMatrix:
    """
    The m x 2^m matrix whose column k is the binary expansion of k.

    Args:
        m: Number of rows
        msb_first: Row 0 holds the most significant bit instead of bit 0

    Returns:
        BinMatrix with column 0 all zero
    """
    if m <= 0:
        raise InvalidParameterError(f"hamming_matrix needs m >= 1, got {m}")
    data = []
    for i in range(m):
        bit = m - 1 - i if msb_first else i
        data.append(sum(((k >> bit) & 1) << k for k in range(1 << m)))
    return BinMatrix(m, 1 << m, tuple(data))


def companion_fixed_point_free(m: int) -> BinMatrix:
    """Companion matrix of x^m + x + 1, asserted invertible and fixed-point free."""
    if m < 2:
        raise InvalidParameterError(f"companion matrix needs m >= 2, got {m}")
    entries = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        entries[i + 1][i] = 1
    entries[0][m - 1] = 1
    entries[1][m - 1] ^= 1
    A = BinMatrix.from_lists(entries)
    if not is_fixed_point_free(A):
        raise CodeError(f"companion of x^{m}+x+1 is not fixed-point free")
    logger.debug(f"Companion matrix for m={m}: {A.to_lists()}")
    return A
