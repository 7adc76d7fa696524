"""Hamming bound, length classification, weight distributions and LP certificates."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np

from config.settings import settings
from utils.errors import EnumerationCapError, InvalidParameterError

logger = logging.getLogger(__name__)

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)
_TABLE_GENERATORS = 12
_SWEEP_CHUNK = 1 << 20

FAMILIES = (
    "plain_a",
    "plain_b",
    "perfect_8fm",
    "perfect_fm",
    "upper_u",
    "lp_l",
    "small",
    "degenerate_6",
)

# Status labels of the tabulated lengths n <= 128
UPPER_HALF_TAGS = {
    6: "β",
    20: "l",
    36: "α",
    37: "α",
    38: "u",
    39: "u",
    41: "l",
    42: "l",
    81: "α",
    82: "u",
    83: "u",
    84: "l",
}
UPPER_HALF_LIMIT = 128
LOWER_HALF_TAGS = {"perfect_8fm": "p", "perfect_fm": "p", "upper_u": "u", "lp_l": "l"}


def hamming_s(n: int) -> int:
    """Least s with 2^s >= 3n + 1, i.e. ceil(log2(3n + 1))."""
    if n < 1:
        raise InvalidParameterError(f"hamming_s needs n >= 1, got {n}")
    return (3 * n).bit_length()


def f_seq(m: int) -> int:
    """f_m = (4^m - 1) / 3: 1, 5, 21, 85, 341, ..."""
    if m < 0:
        raise InvalidParameterError(f"f_seq needs m >= 0, got {m}")
    return ((1 << (2 * m)) - 1) // 3


def f_index(value: int) -> Optional[int]:
    """m >= 1 with f_m == value, or None."""
    m = 1
    while f_seq(m) < value:
        m += 1
    return m if f_seq(m) == value else None


@dataclass(frozen=True)
class LengthClass:
    """Where a length sits in the summary of optimal codes."""

    n: int
    m: int
    family: str
    s_best: int
    optimal_proven: bool
    tag: str


def _family_and_s(n: int) -> Tuple[int, str, int]:
    if n == 5:
        return 0, "perfect_fm", 4
    if n == 6:
        return 1, "degenerate_6", 5

    m = 1
    while f_seq(m + 2) < n:
        m += 1
    eight = 8 * f_seq(m)
    top = f_seq(m + 2)

    if n <= eight - 3:
        return m, "plain_b", 2 * m + 3
    if n < eight:
        return m, "upper_u", 2 * m + 4
    if n == eight:
        return m, "perfect_8fm", 2 * m + 3
    if n <= eight + 2:
        return m, "lp_l", 2 * m + 4
    if n <= top - 4:
        return m, "plain_a", 2 * m + 4
    if n <= top - 2:
        return m, "upper_u", 2 * m + 5
    if n == top - 1:
        return m, "lp_l", 2 * m + 5
    return m, "perfect_fm", 2 * m + 4


def classify_length(n: int) -> LengthClass:
    """
    Classify a length by the family it belongs to.

    The general families start at m = 2 (m = 1 for the p and l ones);
    lengths 7 and 11..19 fall outside them and are reported as "small",
    with the best n - k known from the complete small-length table.

    Args:
        n: Code length, at least 5

    Returns:
        LengthClass with the best known n - k and whether it is proven optimal
    """
    if n < 5:
        raise InvalidParameterError(f"distance-3 codes need n >= 5, got {n}")
    m, family, s_best = _family_and_s(n)
    if m == 1 and family in ("upper_u", "plain_a"):
        family = "small"

    if n <= UPPER_HALF_LIMIT:
        tag = UPPER_HALF_TAGS.get(n, "plain")
    else:
        tag = LOWER_HALF_TAGS.get(family, "plain")
    return LengthClass(
        n=n,
        m=m,
        family=family,
        s_best=s_best,
        optimal_proven=family != "upper_u",
        tag=tag,
    )


@dataclass(frozen=True)
class WeightDistribution:
    """A_0..A_n: number of stabilizer elements of each weight."""

    a: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.a) - 1

    @property
    def total(self) -> int:
        return sum(self.a)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.a)


def _row_bytes(masks: List[int], n: int) -> np.ndarray:
    width = (n + 7) // 8
    return np.array(
        [np.frombuffer(mask.to_bytes(width, "little"), dtype=np.uint8) for mask in masks],
        dtype=np.uint8,
    ).reshape(len(masks), width)


def weight_distribution(code, cap: Optional[int] = None) -> WeightDistribution:
    """
    Count the weights of all 2^s products of the generators.

    The first generators are expanded into a table of products once; the
    remaining ones are folded in one combination at a time.

    Raises:
        EnumerationCapError: s exceeds the enumeration cap
    """
    cap = settings.weight_enumeration_cap if cap is None else cap
    gens = list(code.gens)
    s = len(gens)
    n = gens[0].n
    if s > cap:
        raise EnumerationCapError(f"s={s} exceeds the weight enumeration cap {cap}")

    xb = _row_bytes([g.xmask for g in gens], n)
    zb = _row_bytes([g.zmask for g in gens], n)
    low = min(s, _TABLE_GENERATORS)

    table_x = np.zeros((1, xb.shape[1]), dtype=np.uint8)
    table_z = np.zeros((1, zb.shape[1]), dtype=np.uint8)
    for i in range(low):
        table_x = np.concatenate([table_x, table_x ^ xb[i]])
        table_z = np.concatenate([table_z, table_z ^ zb[i]])

    counts = np.zeros(n + 1, dtype=np.int64)
    for high in range(1 << (s - low)):
        hx = np.zeros(xb.shape[1], dtype=np.uint8)
        hz = np.zeros(zb.shape[1], dtype=np.uint8)
        for j in range(s - low):
            if (high >> j) & 1:
                hx ^= xb[low + j]
                hz ^= zb[low + j]
        weights = _POPCOUNT8[(table_x ^ hx) | (table_z ^ hz)].sum(axis=1)
        counts += np.bincount(weights, minlength=n + 1)

    logger.debug(f"Weight distribution over 2^{s} elements computed")
    return WeightDistribution(tuple(int(c) for c in counts))


def lp_average(fn: Callable[[int], int], w: WeightDistribution, s: int) -> Fraction:
    """<f(x)> = 2^-s * sum over i = 0..n of f(i) A_i, exactly."""
    return Fraction(sum(fn(i) * a for i, a in enumerate(w.a)), 1 << s)


@dataclass(frozen=True)
class LpCheck:
    name: str
    holds: bool
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class LpIdentityReport:
    checks: Tuple[LpCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)


def check_lp_identities(code, w: WeightDistribution) -> LpIdentityReport:
    """Evaluate the weight-one, weight-two and even-weight relations exactly."""
    n = code.n
    s = code.s
    a1 = Fraction(w.a[1]) if n >= 1 else Fraction(0)
    a2 = Fraction(w.a[2]) if n >= 2 else Fraction(0)
    rhs1 = lp_average(lambda x: 3 * n - 4 * x, w, s)
    rhs2 = Fraction(1, 2) * lp_average(lambda x: (4 * x - 3 * n + 1) ** 2 - 3 * n - 1, w, s)
    even = Fraction(sum(w.a[0::2]))
    half = Fraction(1 << (s - 1))
    checks = (
        LpCheck("A_1 = <3n-4x>", a1 == rhs1, a1, rhs1),
        LpCheck("A_2 = <(4x-3n+1)^2-3n-1>/2", a2 == rhs2, a2, rhs2),
        LpCheck("sum A_2i >= 2^(s-1)", even >= half, even, half),
    )
    for check in checks:
        if not check.holds:
            logger.warning(f"LP relation {check.name} fails: {check.lhs} vs {check.rhs}")
    return LpIdentityReport(checks)


@dataclass(frozen=True)
class CertificateCheck:
    name: str
    satisfied: bool
    left: int
    right: int


@dataclass(frozen=True)
class CertificateReport:
    n: int
    family: str
    m: Optional[int]
    checks: Tuple[CertificateCheck, ...]
    hamming_bound: int
    strengthened_bound: int


def lp_family(n: int) -> Tuple[str, Optional[int]]:
    """Which of f_{m+2}-1, 8f_m+1, 8f_m+2 (m >= 1) contains n, if any."""
    j = f_index(n + 1)
    if j is not None and j >= 3:
        return "f_{m+2}-1", j - 2
    for offset in (1, 2):
        if n > offset and (n - offset) % 8 == 0:
            m = f_index((n - offset) // 8)
            if m is not None:
                return f"8f_m+{offset}", m
    return "none", None


def _sweep_min(fn: Callable[[np.ndarray], np.ndarray], stop: int, step: int = 1) -> int:
    """Minimum of fn over 0, step, 2*step, ... <= stop, in int64 chunks."""
    best = None
    for start in range(0, stop + 1, _SWEEP_CHUNK * step):
        x = np.arange(start, min(stop, start + _SWEEP_CHUNK * step - 1) + 1, step, dtype=np.int64)
        value = int(fn(x).min())
        best = value if best is None else min(best, value)
    return best


def _check(name: str, left: int, right: int, relation: str) -> CertificateCheck:
    satisfied = {">": left > right, ">=": left >= right, "==": left == right}[relation]
    return CertificateCheck(name, satisfied, left, right)


def _h_checks(n: int) -> List[CertificateCheck]:
    t = 3 * n

    def h(x):
        return (4 * x - t) * (4 * x - 4 - t)

    return [
        _check("4 | 3n", t % 4, 0, "=="),
        _check("h(i) >= 0 for 0 <= i <= n", _sweep_min(h, n), 0, ">="),
        _check("h(1) > 2(3n+4)", h(1), 2 * (t + 4), ">"),
        _check("h(2) >= 2(3n+4)", h(2), 2 * (t + 4), ">="),
        _check("3n/4 odd", (t // 4) % 2, 1, "=="),
    ]


def _f_checks(n: int) -> List[CertificateCheck]:
    t = 3 * n

    def f(x):
        return (4 * x - t - 1) ** 2

    return [
        _check("4 | 3n+1", (t + 1) % 4, 0, "=="),
        _check("(3n+1)/4 odd", ((t + 1) // 4) % 2, 1, "=="),
        _check("f(0) > (3n+5)(3n-7)+16", f(0), (t + 5) * (t - 7) + 16, ">"),
        _check("f(1) > 4(3n+5)", f(1), 4 * (t + 5), ">"),
        _check("f(2) > 2(3n+5)+16", f(2), 2 * (t + 5) + 16, ">"),
        _check("f(2i) >= 16 for 0 <= 2i <= n", _sweep_min(f, n, step=2), 16, ">="),
    ]


def _g_checks(n: int) -> List[CertificateCheck]:
    t = 3 * n

    def g(x):
        return (4 * x - t - 2) * (4 * x - t + 2)

    return [
        _check("4 | 3n+2", (t + 2) % 4, 0, "=="),
        _check("g(i) >= 0 for 0 <= i <= n", _sweep_min(g, n), 0, ">="),
        _check("g(0) > (3n+2)(3n-4)", g(0), (t + 2) * (t - 4), ">"),
        _check("g(1) > 2(3n+2)", g(1), 2 * (t + 2), ">"),
        _check("g(2) > 2(3n+2)", g(2), 2 * (t + 2), ">"),
    ]


def lp_certificate(n: int) -> CertificateReport:
    """
    Check the integer inequalities that push n - k to s_H + 1.

    All three certificate functions are scaled by 16 so every value is an
    integer: h(x) = (4x-3n)(4x-4-3n), f(x) = (4x-3n-1)^2 and
    g(x) = (4x-3n-2)(4x-3n+2).

    Args:
        n: Code length, at least 5

    Returns:
        CertificateReport; strengthened_bound is s_H + 1 only when n is in
        one of the three families and every check passes
    """
    if n < 5:
        raise InvalidParameterError(f"lp_certificate needs n >= 5, got {n}")
    family, m = lp_family(n)
    checks: List[CertificateCheck] = []
    if family == "f_{m+2}-1":
        checks = _h_checks(n)
    elif family == "8f_m+1":
        checks = _f_checks(n)
    elif family == "8f_m+2":
        checks = _g_checks(n)

    s_h = hamming_s(n)
    strengthened = s_h + 1 if checks and all(c.satisfied for c in checks) else s_h
    logger.debug(f"Certificate for n={n}: family={family} bound={strengthened}")
    return CertificateReport(
        n=n,
        family=family,
        m=m,
        checks=tuple(checks),
        hamming_bound=s_h,
        strengthened_bound=strengthened,
    )
