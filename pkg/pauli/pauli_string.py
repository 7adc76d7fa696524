"""Phase-free n-qubit Pauli operators as paired X/Z bit masks."""

from dataclasses import dataclass
from typing import Iterable

from utils.errors import DimensionMismatchError, InvalidParameterError, PauliParseError

LETTERS = "IXZY"
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


@dataclass(frozen=True)
class PauliString:
    """An n-qubit Pauli operator modulo phase.

    Bit q of ``xmask``/``zmask`` addresses qubit q, and qubit 0 is the
    leftmost letter of the printed row.
    """

    n: int
    xmask: int = 0
    zmask: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"qubit count must be positive, got {self.n}")
        limit = 1 << self.n
        if not (0 <= self.xmask < limit and 0 <= self.zmask < limit):
            raise InvalidParameterError(f"mask bits beyond qubit {self.n - 1}")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n)

    @classmethod
    def all_x(cls, n: int) -> "PauliString":
        return cls(n, (1 << n) - 1, 0)

    @classmethod
    def all_z(cls, n: int) -> "PauliString":
        return cls(n, 0, (1 << n) - 1)

    @classmethod
    def all_y(cls, n: int) -> "PauliString":
        full = (1 << n) - 1
        return cls(n, full, full)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliString":
        """Weight-one operator ``letter`` on ``qubit``."""
        x, z = _LETTER_BITS[letter]
        return cls(n, x << qubit, z << qubit)

    @property
    def weight(self) -> int:
        return (self.xmask | self.zmask).bit_count()

    @property
    def support(self) -> int:
        return self.xmask | self.zmask

    def letter(self, qubit: int) -> str:
        return LETTERS[((self.xmask >> qubit) & 1) | (((self.zmask >> qubit) & 1) << 1)]

    def symplectic(self) -> int:
        """Pack as one integer: x bits at 0..n-1, z bits at n..2n-1."""
        return self.xmask | (self.zmask << self.n)

    def __str__(self) -> str:
        return format_pauli(self)


def parse_pauli(text: str) -> PauliString:
    """
    Parse a row over {I, X, Y, Z}.

    Args:
        text: Pauli row, leftmost letter is qubit 0

    Returns:
        The parsed PauliString

    Raises:
        PauliParseError: empty text or a foreign character
    """
    if not text:
        raise PauliParseError("empty Pauli string", position=0)
    xmask = 0
    zmask = 0
    for position, char in enumerate(text):
        bits = _LETTER_BITS.get(char)
        if bits is None:
            raise PauliParseError(
                f"invalid character {char!r} at position {position}", position=position
            )
        xmask |= bits[0] << position
        zmask |= bits[1] << position
    return PauliString(len(text), xmask, zmask)


def format_pauli(p: PauliString) -> str:
    return "".join(p.letter(q) for q in range(p.n))


def _require_same_length(a: PauliString, b: PauliString):
    if a.n != b.n:
        raise DimensionMismatchError(f"Pauli lengths differ: {a.n} vs {b.n}")


def symplectic_product(a: PauliString, b: PauliString) -> int:
    """Symplectic inner product of ``a`` and ``b``; 1 iff they anticommute."""
    _require_same_length(a, b)
    return ((a.xmask & b.zmask).bit_count() + (a.zmask & b.xmask).bit_count()) & 1


def commutes(a: PauliString, b: PauliString) -> bool:
    return symplectic_product(a, b) == 0


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Phase-free product: componentwise XOR of the masks."""
    _require_same_length(a, b)
    return PauliString(a.n, a.xmask ^ b.xmask, a.zmask ^ b.zmask)


def weight(p: PauliString) -> int:
    return p.weight


def concat(a: PauliString, b: PauliString) -> PauliString:
    """Juxtapose ``a`` (qubits 0..a.n-1) and ``b`` (the rest)."""
    return PauliString(a.n + b.n, a.xmask | (b.xmask << a.n), a.zmask | (b.zmask << a.n))


def concat_all(parts: Iterable[PauliString]) -> PauliString:
    parts = list(parts)
    if not parts:
        raise InvalidParameterError("nothing to concatenate")
    result = parts[0]
    for part in parts[1:]:
        result = concat(result, part)
    return result


def block_lift(p: PauliString, b: int) -> PauliString:
    """
    Replace every letter by ``b`` copies of itself.

    Args:
        p: Operator to lift
        b: Block size, at least 1

    Returns:
        Operator on ``b * p.n`` qubits
    """
    if b < 1:
        raise InvalidParameterError(f"block size must be at least 1, got {b}")
    run = (1 << b) - 1
    xmask = 0
    zmask = 0
    for q in range(p.n):
        if (p.xmask >> q) & 1:
            xmask |= run << (q * b)
        if (p.zmask >> q) & 1:
            zmask |= run << (q * b)
    return PauliString(p.n * b, xmask, zmask)


def restrict(p: PauliString, keep: Iterable[int]) -> PauliString:
    """Keep only the listed qubits, in the given order."""
    keep = list(keep)
    xmask = 0
    zmask = 0
    for i, q in enumerate(keep):
        xmask |= ((p.xmask >> q) & 1) << i
        zmask |= ((p.zmask >> q) & 1) << i
    return PauliString(len(keep), xmask, zmask)
