"""Independent checks of commutation, independence and distance 3."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from bounds.bounds_lp import classify_length
from config.settings import settings
from gf2.bin_matrix import echelon_basis, gf2_rank, reduce_vector
from pauli.pauli_string import PauliString, format_pauli, multiply, symplectic_product
from utils.errors import EnumerationCapError, InvalidParameterError

logger = logging.getLogger(__name__)

ERROR_LETTERS = "XYZ"
MODES = ("pure", "degenerate")

# (qubit, letter index, syndrome)
SingleError = Tuple[int, int, int]


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of a weight <= 2 sweep with the first undetected error."""

    detected: bool
    counterexample: Optional[PauliString] = None

    def __bool__(self) -> bool:
        return self.detected


def _gens(code) -> Tuple[PauliString, ...]:
    gens = tuple(code.gens)
    if not gens:
        raise InvalidParameterError("no generators to verify")
    return gens


def verify_commuting(block) -> List[Tuple[int, int]]:
    """Every pair of anticommuting generators, in index order."""
    gens = _gens(block)
    return [
        (i, j)
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
        if symplectic_product(gens[i], gens[j])
    ]


def verify_independent(block) -> bool:
    gens = _gens(block)
    return gf2_rank(g.symplectic() for g in gens) == len(gens)


def _bit_rows(masks: Sequence[int], n: int) -> np.ndarray:
    width = (n + 7) // 8
    packed = np.array(
        [np.frombuffer(m.to_bytes(width, "little"), dtype=np.uint8) for m in masks],
        dtype=np.uint8,
    ).reshape(len(masks), width)
    return np.unpackbits(packed, axis=1, bitorder="little")[:, :n]


def _pack_columns(bits: np.ndarray) -> List[int]:
    s = bits.shape[0]
    if s <= 62:
        weights = np.left_shift(np.int64(1), np.arange(s, dtype=np.int64))
        return [int(v) for v in weights @ bits.astype(np.int64)]
    return [sum(int(b) << i for i, b in enumerate(col)) for col in bits.T]


def single_error_syndromes(code) -> List[SingleError]:
    """
    Syndromes of all 3n single-qubit errors, ordered by qubit then X < Y < Z.

    Bit i of a syndrome is set iff the error anticommutes with generator i.
    """
    gens = _gens(code)
    n = gens[0].n
    x_bits = _bit_rows([g.xmask for g in gens], n)
    z_bits = _bit_rows([g.zmask for g in gens], n)
    syn_x = _pack_columns(z_bits)
    syn_z = _pack_columns(x_bits)
    table: List[SingleError] = []
    for q in range(n):
        table.append((q, 0, syn_x[q]))
        table.append((q, 1, syn_x[q] ^ syn_z[q]))
        table.append((q, 2, syn_z[q]))
    return table


def _error(n: int, *parts: Tuple[int, int]) -> PauliString:
    result = PauliString.identity(n)
    for qubit, letter in parts:
        result = multiply(result, PauliString.single(n, qubit, ERROR_LETTERS[letter]))
    return result


def detects_all_small_errors(code, mode: str = "pure") -> DetectionResult:
    """
    Check that every error of weight 1 or 2 is detected.

    In pure mode an error is detected when it anticommutes with some
    generator. In degenerate mode an error that commutes with everything
    is also accepted when it lies in the stabilizer row space. The
    reported counterexample is the first failure in the order weight 1
    (by qubit, then X < Y < Z) before weight 2 (by qubit pair, then
    letter pair).

    Args:
        code: StabilizerCode or GeneratorBlock
        mode: "pure" or "degenerate"

    Returns:
        DetectionResult with the first undetected error, if any
    """
    if mode not in MODES:
        raise InvalidParameterError(f"unknown detection mode {mode!r}")
    gens = _gens(code)
    n = gens[0].n
    table = single_error_syndromes(code)
    basis = echelon_basis(g.symplectic() for g in gens) if mode == "degenerate" else None

    def harmless(err: PauliString) -> bool:
        return basis is not None and reduce_vector(err.symplectic(), basis) == 0

    for q, letter, syndrome in table:
        if syndrome == 0:
            err = _error(n, (q, letter))
            if not harmless(err):
                return DetectionResult(False, err)

    groups: Dict[int, List[Tuple[int, int]]] = {}
    for q, letter, syndrome in table:
        groups.setdefault(syndrome, []).append((q, letter))

    first = None
    for members in groups.values():
        if len(members) < 2 or members[0][0] == members[-1][0]:
            continue
        if basis is None:
            q1, l1 = members[0]
            q2, l2 = next(m for m in members if m[0] > q1)
            key = (q1, q2, l1, l2)
            if first is None or key < first:
                first = key
            continue
        for i, (q1, l1) in enumerate(members):
            for q2, l2 in members[i + 1:]:
                if q2 == q1:
                    continue
                key = (q1, q2, l1, l2)
                if (first is None or key < first) and not harmless(_error(n, (q1, l1), (q2, l2))):
                    first = key

    if first is not None:
        q1, q2, l1, l2 = first
        return DetectionResult(False, _error(n, (q1, l1), (q2, l2)))
    return DetectionResult(True)


def sweep_small_errors(code, mode: str = "pure") -> DetectionResult:
    """Brute-force reference for detects_all_small_errors, one error at a time."""
    if mode not in MODES:
        raise InvalidParameterError(f"unknown detection mode {mode!r}")
    gens = _gens(code)
    n = gens[0].n
    basis = echelon_basis(g.symplectic() for g in gens)

    def undetected(err: PauliString) -> bool:
        if any(symplectic_product(err, g) for g in gens):
            return False
        return mode == "pure" or reduce_vector(err.symplectic(), basis) != 0

    for q in range(n):
        for letter in range(3):
            err = _error(n, (q, letter))
            if undetected(err):
                return DetectionResult(False, err)
    for q1 in range(n):
        for q2 in range(q1 + 1, n):
            for l1 in range(3):
                for l2 in range(3):
                    err = _error(n, (q1, l1), (q2, l2))
                    if undetected(err):
                        return DetectionResult(False, err)
    return DetectionResult(True)


def find_weight3_logical(code) -> Optional[PauliString]:
    """
    A weight-3 error commuting with every generator and outside the stabilizer.

    Pairs of single-qubit errors are combined and the third factor is
    looked up by syndrome on a later qubit.

    Raises:
        EnumerationCapError: n exceeds ``settings.exact_distance_max_n``
    """
    gens = _gens(code)
    n = gens[0].n
    if n > settings.exact_distance_max_n:
        raise EnumerationCapError(
            f"weight-3 search limited to n <= {settings.exact_distance_max_n}, got {n}"
        )
    table = single_error_syndromes(code)
    by_syndrome: Dict[int, List[Tuple[int, int]]] = {}
    for q, letter, syndrome in table:
        by_syndrome.setdefault(syndrome, []).append((q, letter))
    basis = echelon_basis(g.symplectic() for g in gens)

    for q1, l1, s1 in table:
        for q2, l2, s2 in table[3 * (q1 + 1):]:
            for q3, l3 in by_syndrome.get(s1 ^ s2, ()):
                if q3 <= q2:
                    continue
                err = _error(n, (q1, l1), (q2, l2), (q3, l3))
                if reduce_vector(err.symplectic(), basis):
                    return err
    return None


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated verification outcome for one generator set."""

    n: int
    s: int
    provenance: str
    noncommuting_pairs: Tuple[Tuple[int, int], ...]
    independent: bool
    mode: str
    detection: Optional[DetectionResult]
    expected_s: Optional[int]
    exact_distance_checked: bool = False
    weight3_witness: Optional[PauliString] = None

    @property
    def k(self) -> int:
        return self.n - self.s

    @property
    def green(self) -> bool:
        if self.noncommuting_pairs or not self.independent:
            return False
        if self.detection is not None and not self.detection.detected:
            return False
        if self.expected_s is not None and self.s != self.expected_s:
            return False
        if self.exact_distance_checked and self.k > 0 and self.weight3_witness is None:
            return False
        return True

    def _detection_text(self) -> str:
        if self.detection is None:
            return "skipped"
        if self.detection.detected:
            return "ok"
        return f"failed at {format_pauli(self.detection.counterexample)}"

    def to_text(self) -> str:
        lines = [f"code: [[{self.n},{self.k},3]] s={self.s} via {self.provenance or 'file'}"]
        if self.noncommuting_pairs:
            pairs = " ".join(f"({i},{j})" for i, j in self.noncommuting_pairs)
            lines.append(f"commuting: failed {pairs}")
        else:
            lines.append("commuting: ok")
        lines.append(f"independent: {'ok' if self.independent else 'failed'}")
        lines.append(f"detection ({self.mode}): {self._detection_text()}")
        if self.expected_s is not None:
            verdict = "ok" if self.s == self.expected_s else "failed"
            lines.append(f"generator count: s={self.s} expected={self.expected_s} {verdict}")
        if self.exact_distance_checked:
            witness = format_pauli(self.weight3_witness) if self.weight3_witness else "none"
            lines.append(f"weight-3 logical: {witness}")
        lines.append(f"status: {'GREEN' if self.green else 'RED'}")
        return "\n".join(lines) + "\n"

    def to_records(self) -> str:
        def flag(value: bool) -> str:
            return "true" if value else "false"

        records = [
            ("n", self.n),
            ("k", self.k),
            ("s", self.s),
            ("commuting", flag(not self.noncommuting_pairs)),
            ("independent", flag(self.independent)),
            ("mode", self.mode),
            ("detects", "skipped" if self.detection is None else flag(self.detection.detected)),
        ]
        if self.detection is not None and self.detection.counterexample is not None:
            records.append(("counterexample", format_pauli(self.detection.counterexample)))
        if self.expected_s is not None:
            records.append(("expected_s", self.expected_s))
        if self.exact_distance_checked:
            witness = format_pauli(self.weight3_witness) if self.weight3_witness else "none"
            records.append(("weight3", witness))
        records.append(("green", flag(self.green)))
        return "".join(f"{key}={value}\n" for key, value in records)


def verify_code(
    code,
    mode: Optional[str] = None,
    exact_distance: bool = False,
    expect_optimal: bool = True,
    exhaustive: Optional[bool] = None,
) -> VerificationReport:
    """
    Run every check on a code or generator block.

    Args:
        code: StabilizerCode or GeneratorBlock
        mode: Detection mode; defaults to the code's purity flag
        exact_distance: Also search for a weight-3 logical operator
        expect_optimal: Compare s with the best known n - k for this length
        exhaustive: Force or skip the weight <= 2 sweep; by default it runs
            up to ``settings.exhaustive_verify_cap`` qubits

    Returns:
        VerificationReport
    """
    gens = _gens(code)
    n = gens[0].n
    if mode is None:
        mode = "pure" if getattr(code, "pure", True) else "degenerate"
    if exhaustive is None:
        exhaustive = n <= settings.exhaustive_verify_cap

    detection = None
    if exhaustive:
        detection = detects_all_small_errors(code, mode)
    else:
        logger.warning(f"Skipping exhaustive weight-2 sweep for n={n}")

    expected_s = classify_length(n).s_best if expect_optimal and n >= 5 else None
    witness = find_weight3_logical(code) if exact_distance else None

    report = VerificationReport(
        n=n,
        s=len(gens),
        provenance=getattr(code, "provenance", ""),
        noncommuting_pairs=tuple(verify_commuting(code)),
        independent=verify_independent(code),
        mode=mode,
        detection=detection,
        expected_s=expected_s,
        exact_distance_checked=exact_distance,
        weight3_witness=witness,
    )
    if report.green:
        logger.info(f"Verified [[{n},{report.k},3]] s={report.s}")
    else:
        logger.error(f"Verification failed for n={n}: {report.to_text().strip()}")
    return report
