"""Top-level construction of the best known [[n, k, 3]] for every n >= 5."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from bounds.bounds_lp import f_index, f_seq
from catalog.small_catalog import small_code
from config.settings import settings
from families.code_families import eight_block_code, eight_fm_code, gottesman_code, perfect_code
from pasting.block_pasting import fold_chain
from pasting.generator_block import StabilizerCode, promote
from utils.errors import CodeError, InvalidParameterError, VerificationError
from verifier.code_verifier import verify_code

logger = logging.getLogger(__name__)

MIN_LENGTH = 5
CATALOG_MAX = 37
THEOREM2_MIN = 38


@dataclass(frozen=True)
class Theorem2Plan:
    """
    The pasting chain for a length outside the catalog.

    Case a covers 8f_m - 2 <= n <= f_{m+2} - 4 with f_{m+2} - 4 - n = 8α + β;
    case b covers f_{m+2} - 3 <= n <= 8f_{m+1} - 3 with 8f_{m+1} - 3 - n = 8α + β.
    """

    n: int
    case: str
    m: int
    alpha: int
    beta: int
    chain: Tuple[str, ...]
    lengths: Tuple[int, ...]

    @property
    def generator_count(self) -> int:
        return 2 * self.m + 4 if self.case == "a" else 2 * self.m + 5

    @property
    def expression(self) -> str:
        return ">".join(self.chain)


def theorem2_plan(n: int) -> Theorem2Plan:
    """
    Decompose n >= 38 into a leading [8·j], Gottesman codes and a catalog tail.

    When α = 0 the leading factor has the length and generator count of
    Gottesman's [2^{2m+2}] (case a) or [2^{2m+3}] (case b), which is used
    instead.

    Args:
        n: Code length, at least 38

    Returns:
        Theorem2Plan whose component lengths sum to n
    """
    if n < THEOREM2_MIN:
        raise InvalidParameterError(f"theorem2_plan needs n >= {THEOREM2_MIN}, got {n}")

    m = 2
    while n > 8 * f_seq(m + 1) - 3:
        m += 1
    upper_a = f_seq(m + 2) - 4
    if n <= upper_a:
        case = "a"
        alpha, beta = divmod(upper_a - n, 8)
        lead = (1 << (2 * m - 1)) - alpha
        exponents = list(range(2 * m, 5, -2))
        tail = 17 - beta
        lead_name = f"[2^{2 * m + 2}]" if alpha == 0 else f"[8*{lead}]"
    else:
        case = "b"
        alpha, beta = divmod(8 * f_seq(m + 1) - 3 - n, 8)
        lead = (1 << (2 * m)) - alpha
        exponents = list(range(2 * m + 1, 6, -2))
        tail = 37 - beta
        lead_name = f"[2^{2 * m + 3}]" if alpha == 0 else f"[8*{lead}]"

    if lead < 3:
        raise CodeError(f"internal: leading [8*{lead}] for n={n}")

    chain = (lead_name,) + tuple(f"[2^{e}]" for e in exponents) + (f"[{tail}]",)
    lengths = (8 * lead,) + tuple(1 << e for e in exponents) + (tail,)
    if sum(lengths) != n:
        raise CodeError(f"internal: chain {chain} has length {sum(lengths)}, expected {n}")
    plan = Theorem2Plan(n, case, m, alpha, beta, chain, lengths)
    logger.debug(f"Plan for n={n}: case {case}, m={m}, alpha={alpha}, beta={beta}")
    return plan


def theorem2_lengths(plan: Theorem2Plan) -> Tuple[int, ...]:
    return plan.lengths


def theorem2_generator_count(plan: Theorem2Plan) -> int:
    """2m + 4 generators in case a, 2m + 5 in case b."""
    return plan.generator_count


def _component(name: str) -> StabilizerCode:
    body = name[1:-1]
    if body.startswith("8*"):
        return eight_block_code(int(body[2:]))
    if body.startswith("2^"):
        return gottesman_code(int(body[2:]))
    return small_code(int(body))


def build_theorem2(n: int) -> StabilizerCode:
    plan = theorem2_plan(n)
    blocks = [_component(name).block for name in plan.chain]
    code = promote(fold_chain(blocks, aligned=False), provenance=plan.expression)
    if code.n != sum(theorem2_lengths(plan)):
        raise CodeError(f"{plan.expression} has n={code.n}, expected {n}")
    expected_s = theorem2_generator_count(plan)
    if code.s != expected_s:
        raise CodeError(f"{plan.expression} has s={code.s}, expected {expected_s}")
    return code


def perfect_index(n: int) -> Tuple[Optional[str], Optional[int]]:
    """("8f", m) for n = 8f_m with m >= 2, ("f", m) for n = f_m with m >= 4."""
    if n % 8 == 0:
        m = f_index(n // 8)
        if m is not None and m >= 2:
            return "8f", m
    m = f_index(n)
    if m is not None and m >= 4:
        return "f", m
    return None, None


def build(n: int, prefer_theorem2: bool = False) -> StabilizerCode:
    """
    Build and verify the best known pure code of length n.

    Args:
        n: Code length, at least 5
        prefer_theorem2: Use the general pasting chain at perfect lengths too

    Returns:
        A verified StabilizerCode

    Raises:
        InvalidParameterError: n < 5
        VerificationError: the built code fails any check
    """
    return _build(n, prefer_theorem2, settings.construction_key())


@lru_cache(maxsize=None)
def _build(n: int, prefer_theorem2: bool, construction_key: Tuple) -> StabilizerCode:
    if n < MIN_LENGTH:
        raise InvalidParameterError(f"distance-3 codes need n >= {MIN_LENGTH}, got {n}")

    kind, m = perfect_index(n)
    if n <= CATALOG_MAX:
        code = small_code(n)
    elif kind == "8f" and not prefer_theorem2:
        code = eight_fm_code(m)
    elif kind == "f" and not prefer_theorem2:
        code = perfect_code(m)
    else:
        code = build_theorem2(n)

    expect_optimal = not (prefer_theorem2 and kind is not None)
    report = verify_code(code, expect_optimal=expect_optimal)
    if not report.green:
        raise VerificationError(f"built code for n={n} failed verification", report=report)
    logger.info(f"Built {code.parameters} via {code.provenance}")
    return code
