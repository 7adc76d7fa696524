"""Tests for the Hamming bound, length classification and LP checks."""

from fractions import Fraction

import pytest

from bounds.bounds_lp import (
    check_lp_identities,
    classify_length,
    f_index,
    f_seq,
    hamming_s,
    lp_average,
    lp_certificate,
    lp_family,
    weight_distribution,
)
from constructor.code_builder import build
from utils.errors import EnumerationCapError, InvalidParameterError


class TestHammingBound:
    """Test cases for s_H and the f_m sequence."""

    @pytest.mark.parametrize("n, s", [(5, 4), (6, 5), (8, 5), (20, 6), (21, 6), (40, 7), (85, 8), (128, 9)])
    def test_hamming_s(self, n, s):
        assert hamming_s(n) == s
        assert (1 << s) >= 3 * n + 1 > (1 << (s - 1))

    def test_f_seq(self):
        assert [f_seq(m) for m in range(6)] == [0, 1, 5, 21, 85, 341]

    def test_f_index(self):
        assert f_index(21) == 3
        assert f_index(22) is None

    def test_invalid(self):
        with pytest.raises(InvalidParameterError):
            hamming_s(0)
        with pytest.raises(InvalidParameterError):
            f_seq(-1)


class TestClassifyLength:
    """Test cases for the summary of optimal lengths."""

    @pytest.mark.parametrize(
        "n, family, s_best, tag",
        [
            (5, "perfect_fm", 4, "plain"),
            (6, "degenerate_6", 5, "β"),
            (7, "small", 6, "plain"),
            (8, "perfect_8fm", 5, "plain"),
            (9, "lp_l", 6, "plain"),
            (10, "lp_l", 6, "plain"),
            (20, "lp_l", 7, "l"),
            (36, "plain_b", 7, "α"),
            (38, "upper_u", 8, "u"),
            (39, "upper_u", 8, "u"),
            (40, "perfect_8fm", 7, "plain"),
            (41, "lp_l", 8, "l"),
            (42, "lp_l", 8, "l"),
            (50, "plain_a", 8, "plain"),
            (81, "plain_a", 8, "α"),
            (84, "lp_l", 9, "l"),
            (85, "perfect_fm", 8, "plain"),
            (128, "plain_b", 9, "plain"),
        ],
    )
    def test_table_rows(self, n, family, s_best, tag):
        cls = classify_length(n)
        assert cls.family == family
        assert cls.s_best == s_best
        assert cls.tag == tag

    def test_lower_half_tags(self):
        assert classify_length(168).tag == "p"
        assert classify_length(166).tag == "u"
        assert classify_length(169).tag == "l"
        assert classify_length(200).tag == "plain"

    def test_upper_lengths_not_proven(self):
        assert not classify_length(39).optimal_proven
        assert classify_length(41).optimal_proven

    @pytest.mark.parametrize("n", range(7, 400))
    def test_gap_to_hamming(self, n):
        cls = classify_length(n)
        gap = cls.s_best - hamming_s(n)
        assert gap in (0, 1)
        assert (gap == 1) == (cls.family in ("upper_u", "lp_l") or n in (7, 18, 19))

    def test_below_five(self):
        with pytest.raises(InvalidParameterError):
            classify_length(4)


class TestWeightDistribution:
    """Test cases for weight enumeration and the LP relations."""

    def test_five_qubit(self, five_qubit_code):
        dist = weight_distribution(five_qubit_code)
        assert str(dist) == "1 0 0 0 15 0"
        assert dist.n == 5

    def test_gottesman_8(self, gottesman_8_code):
        dist = weight_distribution(gottesman_8_code)
        assert str(dist) == "1 0 0 0 0 0 28 0 3"
        assert dist.a[1] == dist.a[2] == 0

    def test_cap(self, five_qubit_code):
        with pytest.raises(EnumerationCapError):
            weight_distribution(five_qubit_code, cap=3)

    def test_lp_average(self, five_qubit_code):
        dist = weight_distribution(five_qubit_code)
        assert lp_average(lambda x: 1, dist, 4) == 1
        assert lp_average(lambda x: 3 * 5 - 4 * x, dist, 4) == Fraction(0)

    def test_identities_hold(self, five_qubit_code, gottesman_8_code):
        for code in (five_qubit_code, gottesman_8_code):
            report = check_lp_identities(code, weight_distribution(code))
            assert report.ok
            assert len(report.checks) == 3

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(5, 342))
    def test_identities_hold_for_built_codes(self, n):
        code = build(n)
        assert code.s <= 13
        dist = weight_distribution(code)
        assert dist.total == 1 << code.s
        assert check_lp_identities(code, dist).ok
        if code.pure:
            assert dist.a[1] == dist.a[2] == 0


class TestLpCertificate:
    """Test cases for the strengthened lower bound."""

    @pytest.mark.parametrize(
        "n, family, bound",
        [
            (20, "f_{m+2}-1", 7),
            (9, "8f_m+1", 6),
            (10, "8f_m+2", 6),
            (41, "8f_m+1", 8),
            (42, "8f_m+2", 8),
            (84, "f_{m+2}-1", 9),
            (23, "none", 7),
            (50, "none", 8),
        ],
    )
    def test_examples(self, n, family, bound):
        report = lp_certificate(n)
        assert report.family == family
        assert report.strengthened_bound == bound

    def test_non_member_has_no_checks(self):
        report = lp_certificate(23)
        assert report.checks == ()
        assert report.strengthened_bound == report.hamming_bound

    @pytest.mark.parametrize("m", range(1, 11))
    def test_every_family_member_passes(self, m):
        for n in (f_seq(m + 2) - 1, 8 * f_seq(m) + 1, 8 * f_seq(m) + 2):
            report = lp_certificate(n)
            assert all(check.satisfied for check in report.checks), n
            assert report.strengthened_bound == hamming_s(n) + 1

    def test_lp_family_index(self):
        assert lp_family(20) == ("f_{m+2}-1", 1)
        assert lp_family(170) == ("8f_m+2", 3)
        assert lp_family(50) == ("none", None)

    def test_below_five(self):
        with pytest.raises(InvalidParameterError):
            lp_certificate(4)
