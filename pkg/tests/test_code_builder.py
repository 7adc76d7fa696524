"""Tests for pasting-chain planning and top-level construction."""

import pytest

from bounds.bounds_lp import classify_length, hamming_s, lp_certificate
from constructor.code_builder import (
    build,
    perfect_index,
    theorem2_generator_count,
    theorem2_lengths,
    theorem2_plan,
)
from config.settings import settings
from utils.errors import InvalidParameterError
from verifier.code_verifier import verify_code


class TestTheorem2Plan:
    """Test cases for the chain decomposition of n >= 38."""

    def test_case_a_two_factors(self):
        plan = theorem2_plan(38)
        assert (plan.case, plan.m, plan.alpha, plan.beta) == ("a", 2, 5, 3)
        assert plan.chain == ("[8*3]", "[14]")
        assert plan.expression == "[8*3]>[14]"

    def test_case_b_three_factors(self):
        plan = theorem2_plan(371)
        assert (plan.case, plan.m, plan.alpha, plan.beta) == ("b", 3, 38, 2)
        assert plan.chain == ("[8*26]", "[2^7]", "[35]")
        assert theorem2_lengths(plan) == (208, 128, 35)

    def test_alpha_zero_uses_gottesman(self):
        plan = theorem2_plan(81)
        assert (plan.case, plan.m, plan.alpha, plan.beta) == ("a", 2, 0, 0)
        assert plan.chain == ("[2^6]", "[17]")

    @pytest.mark.parametrize("n, case, m", [(81, "a", 2), (82, "b", 2), (165, "b", 2), (166, "a", 3), (337, "a", 3), (338, "b", 3), (677, "b", 3), (678, "a", 4)])
    def test_case_boundaries(self, n, case, m):
        plan = theorem2_plan(n)
        assert (plan.case, plan.m) == (case, m)

    @pytest.mark.parametrize("n", range(38, 1400))
    def test_accounting(self, n):
        plan = theorem2_plan(n)
        assert sum(theorem2_lengths(plan)) == n
        assert 0 <= plan.beta <= 7
        expected = 2 * plan.m + 4 if plan.case == "a" else 2 * plan.m + 5
        assert theorem2_generator_count(plan) == expected

    def test_below_range(self):
        with pytest.raises(InvalidParameterError):
            theorem2_plan(37)


class TestBuild:
    """Test cases for build dispatch and its guarantees."""

    def test_perfect_index(self):
        assert perfect_index(40) == ("8f", 2)
        assert perfect_index(85) == ("f", 4)
        assert perfect_index(21) == (None, None)
        assert perfect_index(50) == (None, None)

    def test_build_40_uses_eight_fm(self):
        code = build(40)
        assert code.s == 7
        assert code.provenance == "[2^5]>[2^3]"

    def test_build_85_perfect(self):
        code = build(85)
        assert code.s == 8
        assert 1 << code.s == 3 * 85 + 1

    def test_build_39_best_known(self):
        code = build(39)
        assert code.s == hamming_s(39) + 1
        assert not classify_length(39).optimal_proven

    def test_build_81(self):
        code = build(81)
        assert code.s == 8
        assert code.provenance == "[2^6]>[17]"

    def test_build_38(self):
        assert build(38).provenance == "[8*3]>[14]"

    def test_theorem2_is_one_worse_at_perfect_lengths(self):
        assert build(85, prefer_theorem2=True).s == build(85).s + 1
        assert build(40, prefer_theorem2=True).s == build(40).s + 1

    def test_below_five(self):
        with pytest.raises(InvalidParameterError):
            build(4)

    def test_degenerate_six(self):
        code = build(6)
        assert not code.pure
        assert code.s == 5

    @pytest.mark.parametrize("n", [20, 41, 42, 84, 169, 170])
    def test_meets_lp_bound(self, n):
        assert build(n).s == lp_certificate(n).strengthened_bound

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(5, 129))
    def test_table_upper_half(self, n):
        code = build(n)
        assert code.s == classify_length(n).s_best
        report = verify_code(code)
        assert report.green
        assert report.detection is not None

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [165, 166, 168, 337, 338, 341, 371, 500, 677, 680, 1000, 1365, 2000, 2728, 3000])
    def test_large_lengths(self, n):
        code = build(n)
        assert code.n == n
        assert code.s == classify_length(n).s_best
        report = verify_code(code)
        assert report.green
        assert report.detection is not None

    @pytest.mark.slow
    def test_eight_f5_saturates_hamming(self):
        code = build(2728)
        assert code.s == 13
        assert code.s == hamming_s(2728)
        report = verify_code(code)
        assert report.detection is not None
        assert report.detection.detected

    def test_cache_follows_settings(self, monkeypatch):
        first = build(10)
        assert build(10) is first
        monkeypatch.setattr(settings, "exhaustive_verify_cap", 5)
        rebuilt = build(10)
        assert rebuilt is not first
        assert rebuilt.gens == first.gens
