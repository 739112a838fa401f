from fractions import Fraction
from math import comb, factorial

import pytest

from sepham.bounds import (
    check_inequalities,
    eval_bounds,
    incompat_bound,
    sqrt2_interval,
)
from sepham.errors import DomainError


class TestSqrt2:
    def test_interval_brackets_sqrt2(self):
        lo, hi = sqrt2_interval()
        assert lo * lo < 2 < hi * hi
        assert hi - lo == Fraction(1, 10 ** 40)


class TestEvalBounds:
    def test_n6(self):
        rec = eval_bounds(6)
        assert rec.q_upper_kmm == 15
        assert rec.q_lower_new == 1
        assert rec.r_upper == 90

    def test_n5_mcy_lower(self):
        assert eval_bounds(5).mcy_lower == 6

    def test_n3_empty_product_convention(self):
        assert eval_bounds(3).q_lower_new == 1  # 0!/2^0

    def test_below_threshold(self):
        with pytest.raises(DomainError):
            eval_bounds(2)

    def test_kmm_lower_interval_is_certified(self):
        rec = eval_bounds(10)
        lo, hi = rec.q_lower_kmm
        assert 0 < lo < hi
        # float cross-check of the midpoint plus enclosure tightness
        import math

        approx = factorial(8) / (factorial(5) * (1 + math.sqrt(2)) ** 10)
        assert abs(float(lo) - approx) < 1e-9
        assert float(hi - lo) < 1e-20

    def test_r_lower_vacuous_flagging(self):
        assert eval_bounds(6).r_lower_vacuous
        assert eval_bounds(6).r_lower > 0
        assert not eval_bounds(40).r_lower_vacuous

    def test_incompat_total_bound_thresholds(self):
        assert eval_bounds(5).incompat_total_bound is None
        rec = eval_bounds(8)
        assert rec.incompat_total_bound == 4 * comb(7, 5) * 8 ** 8

    def test_exact_rational_fields_carry_no_rounding(self):
        rec = eval_bounds(9)
        assert rec.q_upper_kmm == Fraction(factorial(9), factorial(4) * 2 ** 4)
        assert rec.r_upper == Fraction(factorial(9), 2 ** 4)


class TestIncompatBound:
    def test_n10_r0(self):
        assert incompat_bound(10, 0) == 11_250_000_000
        # independent big-integer evaluation
        assert incompat_bound(10, 0) == comb(9, 2) * 10 ** 5 * 5 ** 5

    def test_n8_r3(self):
        assert incompat_bound(8, 3) == 21 * 16_777_216

    def test_threshold(self):
        with pytest.raises(DomainError):
            incompat_bound(7, 3)


class TestInequalities:
    def test_n20_passes(self):
        report = check_inequalities([20])
        assert report.ok

    def test_sweep_6_to_30(self):
        report = check_inequalities(range(6, 31))
        assert report.ok
        assert report.first_failure() is None
        for entry in report.entries:
            assert entry.checks["new_dominates_kmm"]
            assert entry.checks["kmm_lt_middle"]
            assert entry.checks["incompat_le_total"]

    def test_base_ratio_one_off(self):
        assert check_inequalities([]).base_ratio_ok

    def test_failure_reporting_carries_both_sides(self):
        report = check_inequalities([8])
        entry = report.entries[0]
        assert "<" in entry.details["new_dominates_kmm"]
