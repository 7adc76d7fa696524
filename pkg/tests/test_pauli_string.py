"""Tests for phase-free Pauli strings and GF(2) matrices."""

import numpy as np
import pytest

from gf2.bin_matrix import (
    BinMatrix,
    companion_fixed_point_free,
    echelon_basis,
    gf2_rank,
    hamming_matrix,
    in_row_space,
    is_fixed_point_free,
    is_invertible,
    matmul,
    rank,
    reduce_vector,
)
from pauli.pauli_string import (
    PauliString,
    block_lift,
    commutes,
    concat,
    format_pauli,
    multiply,
    parse_pauli,
    restrict,
    symplectic_product,
)
from utils.errors import DimensionMismatchError, InvalidParameterError, PauliParseError


class TestPauliString:
    """Test cases for parsing and algebra of Pauli rows."""

    def test_parse_masks(self):
        """Leftmost letter is qubit 0."""
        p = parse_pauli("XYZI")
        assert p.n == 4
        assert p.xmask == 0b0011
        assert p.zmask == 0b0110
        assert p.weight == 3
        assert format_pauli(p) == "XYZI"

    def test_parse_invalid_character(self):
        with pytest.raises(PauliParseError) as exc_info:
            parse_pauli("XQZ")
        assert exc_info.value.position == 1

    def test_parse_empty(self):
        with pytest.raises(PauliParseError):
            parse_pauli("")

    def test_masks_beyond_length_rejected(self):
        with pytest.raises(InvalidParameterError):
            PauliString(2, 0b100, 0)

    def test_symplectic_product(self):
        assert symplectic_product(parse_pauli("X"), parse_pauli("Z")) == 1
        assert symplectic_product(parse_pauli("XX"), parse_pauli("ZZ")) == 0
        assert commutes(parse_pauli("XYZ"), parse_pauli("XYZ"))
        assert not commutes(parse_pauli("XI"), parse_pauli("YI"))

    @pytest.mark.parametrize("seed", range(10))
    def test_symplectic_product_symmetric_and_bilinear(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 9))
        a, b, c = (PauliString(n, int(x), int(z)) for x, z in rng.integers(0, 1 << n, size=(3, 2)))
        assert symplectic_product(a, b) == symplectic_product(b, a)
        assert symplectic_product(a, a) == 0
        assert symplectic_product(multiply(a, b), c) == symplectic_product(a, c) ^ symplectic_product(b, c)

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            symplectic_product(parse_pauli("X"), parse_pauli("XX"))

    def test_multiply_drops_phase(self):
        assert format_pauli(multiply(parse_pauli("XZI"), parse_pauli("ZZY"))) == "YIY"

    def test_constructors(self):
        assert str(PauliString.all_x(3)) == "XXX"
        assert str(PauliString.all_z(2)) == "ZZ"
        assert str(PauliString.all_y(2)) == "YY"
        assert str(PauliString.single(4, 2, "Y")) == "IIYI"
        assert PauliString.identity(3).weight == 0

    def test_concat_and_lift(self):
        assert str(concat(parse_pauli("XY"), parse_pauli("Z"))) == "XYZ"
        assert str(block_lift(parse_pauli("XY"), 2)) == "XXYY"
        assert str(block_lift(parse_pauli("IZ"), 3)) == "IIIZZZ"
        with pytest.raises(InvalidParameterError):
            block_lift(parse_pauli("X"), 0)

    def test_restrict_keeps_order(self):
        assert str(restrict(parse_pauli("XYZI"), [2, 0])) == "ZX"

    def test_symplectic_packing(self):
        p = parse_pauli("XZ")
        assert p.symplectic() == 0b1001
        assert p.letter(1) == "Z"


class TestBinMatrix:
    """Test cases for GF(2) elimination and the Hamming matrix."""

    def test_rank(self):
        assert gf2_rank([1, 2, 3]) == 2
        assert gf2_rank([]) == 0
        assert gf2_rank([5, 5]) == 1

    @pytest.mark.parametrize("seed", range(10))
    def test_rank_invariant_under_row_operations(self, seed):
        rng = np.random.default_rng(seed)
        rows = [int(v) for v in rng.integers(0, 1 << 8, size=6)]
        before = rank(BinMatrix(6, 8, tuple(rows)))
        for _ in range(20):
            i, j = (int(v) for v in rng.choice(6, size=2, replace=False))
            if rng.integers(0, 2):
                rows[i] ^= rows[j]
            else:
                rows[i], rows[j] = rows[j], rows[i]
        assert rank(BinMatrix(6, 8, tuple(rows))) == before

    def test_reduce_vector(self):
        basis = echelon_basis([0b110, 0b011])
        assert reduce_vector(0b101, basis) == 0
        assert reduce_vector(0b001, basis) != 0

    def test_in_row_space(self):
        M = BinMatrix.from_lists([[1, 1, 0], [0, 1, 1]])
        assert in_row_space(0b101, M)
        assert not in_row_space(0b111, M)
        with pytest.raises(DimensionMismatchError):
            in_row_space(0b1000, M)

    def test_hamming_matrix_columns(self):
        h = hamming_matrix(2)
        assert h.data == (0b1010, 0b1100)
        assert h.column(3) == 0b11
        assert hamming_matrix(2, msb_first=True).data == (0b1100, 0b1010)

    def test_matmul_identity(self):
        A = companion_fixed_point_free(4)
        assert matmul(BinMatrix.identity(4), A) == A
        assert matmul(A, BinMatrix.identity(4)) == A

    def test_matmul_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            matmul(BinMatrix.identity(2), BinMatrix.identity(3))

    @pytest.mark.parametrize("m", range(2, 13))
    def test_companion_is_fixed_point_free(self, m):
        A = companion_fixed_point_free(m)
        assert is_invertible(A)
        assert is_fixed_point_free(A)

    def test_companion_needs_m_two(self):
        with pytest.raises(InvalidParameterError):
            companion_fixed_point_free(1)

    def test_identity_is_not_fixed_point_free(self):
        assert not is_fixed_point_free(BinMatrix.identity(3))

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_fixed_point_free_matches_direct_check(self, m):
        rng = np.random.default_rng(m)

        def apply(A, v):
            return sum((bin(row & v).count("1") & 1) << i for i, row in enumerate(A.data))

        checked = 0
        for _ in range(200):
            A = BinMatrix(m, m, tuple(int(v) for v in rng.integers(0, 1 << m, size=m)))
            images = [apply(A, v) for v in range(1, 1 << m)]
            if 0 in images:
                assert not is_invertible(A)
                assert not is_fixed_point_free(A)
                continue
            checked += 1
            assert is_invertible(A)
            direct = all(w != v for v, w in enumerate(images, start=1))
            assert is_fixed_point_free(A) == direct
        assert checked > 0

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            BinMatrix.from_lists([[1, 0], [1]])
