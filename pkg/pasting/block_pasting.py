"""Stabilizer pasting, aligned 2ed-block pasting, puncturing and assembly."""

import logging
from itertools import permutations
from typing import List, Optional, Sequence

from config.settings import settings
from pasting.generator_block import GeneratorBlock, make_block
from pauli.pauli_string import (
    PauliString,
    block_lift,
    commutes,
    concat,
    concat_all,
    multiply,
    parse_pauli,
    restrict,
)
from utils.errors import InvalidParameterError, PastingError

logger = logging.getLogger(__name__)


def paste(left: GeneratorBlock, right: GeneratorBlock) -> GeneratorBlock:
    """
    Paste ``right`` under the X/Z rows of ``left``.

    Rows 0 and 1 are X(n2)|I(n1) and Z(n2)|I(n1); row 2+i is
    left.gens[2+i] | right.gens[i]. Missing rows on either side are
    padded with identity, so the result has max(s_left, s_right + 2) rows.

    Args:
        left: Block whose first two rows are X(n2), Z(n2)
        right: Any block

    Returns:
        The pasted block on n2 + n1 qubits
    """
    if not left.leading_xz:
        raise PastingError("left operand of a paste must start with X(n) and Z(n) rows")

    pad_left = PauliString.identity(left.n)
    pad_right = PauliString.identity(right.n)
    rows = [concat(left.gens[0], pad_right), concat(left.gens[1], pad_right)]
    for i in range(max(left.s - 2, right.s)):
        l_row = left.gens[2 + i] if 2 + i < left.s else pad_left
        r_row = right.gens[i] if i < right.s else pad_right
        rows.append(concat(l_row, r_row))
    return make_block(rows)


def symplectic_normal_form(rows: Sequence[PauliString]) -> List[PauliString]:
    """
    Rewrite rows as anticommuting pairs followed by commuting rows.

    The row space is unchanged. Each pair (a, b) anticommutes, and every
    row outside a pair commutes with all other output rows.
    """
    remaining = list(rows)
    pairs: List[PauliString] = []
    isotropic: List[PauliString] = []
    while remaining:
        a = remaining.pop(0)
        partner = next((j for j, r in enumerate(remaining) if not commutes(a, r)), None)
        if partner is None:
            isotropic.append(a)
            continue
        b = remaining.pop(partner)
        cleaned = []
        for r in remaining:
            t = r
            if not commutes(r, b):
                t = multiply(t, a)
            if not commutes(r, a):
                t = multiply(t, b)
            cleaned.append(t)
        remaining = cleaned
        pairs.extend((a, b))
    return pairs + isotropic


def _permutation_search(left: GeneratorBlock, right: GeneratorBlock) -> Optional[GeneratorBlock]:
    if right.s > settings.alignment_max_rows:
        logger.debug(f"Skipping permutation search over {right.s} rows")
        return None
    best = None
    for order in permutations(range(right.s)):
        candidate = paste(left, make_block([right.gens[i] for i in order]))
        if best is None or candidate.e < best.e:
            best = candidate
            logger.debug(f"Alignment {order} reaches e={candidate.e}")
            if candidate.e == 0:
                break
    return best


def paste_aligned(left: GeneratorBlock, right: GeneratorBlock) -> GeneratorBlock:
    """
    Paste with the right block's rows arranged to cancel noncommuting pairs.

    Permutations of ``right.gens`` are tried in lexicographic order and the
    first one with the least e wins. If that minimum is still positive,
    both sides are also brought to symplectic normal form, which lines
    their anticommuting pairs up row by row; the lower e is returned.
    """
    best = _permutation_search(left, right)
    if best is not None and best.e == 0:
        return best

    matched_left = make_block(list(left.gens[:2]) + symplectic_normal_form(left.gens[2:]))
    matched = paste(matched_left, make_block(symplectic_normal_form(right.gens)))
    if best is None or matched.e < best.e:
        best = matched
    logger.debug(f"Aligned paste of n={left.n} and n={right.n} reaches e={best.e}")
    return best


def fold_chain(blocks: Sequence[GeneratorBlock], aligned: bool = True) -> GeneratorBlock:
    """Evaluate A ▷ B ▷ ... ▷ Z from right to left."""
    if not blocks:
        raise InvalidParameterError("empty pasting chain")
    join = paste_aligned if aligned else paste
    acc = blocks[-1]
    for block in reversed(blocks[:-1]):
        acc = join(block, acc)
    return acc


def puncture(block: GeneratorBlock, coords: Sequence[int]) -> GeneratorBlock:
    """
    Delete qubit coordinates from every generator.

    Args:
        block: Block to puncture
        coords: Distinct qubit labels in 0..n-1

    Returns:
        Block on the surviving qubits, original order kept
    """
    removed = set(coords)
    if len(removed) != len(coords):
        raise InvalidParameterError(f"duplicate puncture coordinates: {list(coords)}")
    bad = [q for q in removed if not 0 <= q < block.n]
    if bad:
        raise InvalidParameterError(f"puncture coordinates out of range: {sorted(bad)}")
    if len(removed) >= block.n:
        raise InvalidParameterError("cannot puncture every coordinate")
    if not removed:
        return block
    keep = [q for q in range(block.n) if q not in removed]
    return make_block([restrict(g, keep) for g in block.gens])


def assemble_blocks(
    components: Sequence[GeneratorBlock], tails: Sequence[str], head_rows: int = 5
) -> GeneratorBlock:
    """
    Juxtapose the first rows of several blocks and add lifted tail rows.

    Row i < head_rows is the concatenation of every component's row i.
    Each tail string carries one letter per component, repeated over that
    component's width.
    """
    for component in components:
        if component.s < head_rows:
            raise InvalidParameterError(f"component with {component.s} rows, need {head_rows}")
    rows = [concat_all(c.gens[i] for c in components) for i in range(head_rows)]
    for tail in tails:
        if len(tail) != len(components):
            raise InvalidParameterError(f"tail {tail!r} does not match {len(components)} components")
        rows.append(
            concat_all(block_lift(parse_pauli(letter), c.n) for letter, c in zip(tail, components))
        )
    return make_block(rows)
