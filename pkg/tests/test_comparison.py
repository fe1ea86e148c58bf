from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpmetric import (
    default_grid,
    linear,
    rational_shrink,
    user_function,
    user_table,
    verify_gamma1,
)

F = Fraction


class TestEvaluate:
    def test_linear_half(self):
        assert linear(F(1, 2))(2) == 1

    def test_zero_maps_to_zero(self):
        for gamma in (linear(F(1, 3)), rational_shrink(), user_function(lambda t: t + 1)):
            assert gamma(0) == 0

    def test_rational_shrink_at_one(self):
        assert rational_shrink()(F(1)) == F(1, 2)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            linear(F(1, 2))(-1)

    def test_exact_arithmetic_preserved(self):
        assert linear(F(1, 2))(F(1, 3)) == F(1, 6)
        assert rational_shrink()(F(1, 3)) == F(1, 4)

    def test_table_previous_knot_rule(self):
        gamma = user_table([(1, F(1, 2)), (2, F(3, 2))])
        assert gamma(F(1, 2)) == 0  # below the first knot: implicit (0, 0)
        assert gamma(1) == F(1, 2)
        assert gamma(F(3, 2)) == F(1, 2)  # left-continuous step
        assert gamma(2) == F(3, 2)
        assert gamma(100) == F(3, 2)

    def test_linear_factor_bounds(self):
        with pytest.raises(ValueError):
            linear(1)
        with pytest.raises(ValueError):
            linear(0)

    def test_table_validation(self):
        with pytest.raises(ValueError):
            user_table([])
        with pytest.raises(ValueError):
            user_table([(2, 1), (1, F(1, 2))])
        with pytest.raises(ValueError):
            user_table([(1, -1)])


class TestCertification:
    def test_builtins_certified(self):
        assert linear(F(1, 2)).certified
        assert rational_shrink().certified

    def test_user_kinds_sampled(self):
        assert not user_table([(1, F(1, 2))]).certified
        assert not user_function(lambda t: t / 2).certified

    def test_grid_pass_never_upgrades(self):
        gamma = user_function(lambda t: t / 2)
        assert verify_gamma1(gamma).passed
        assert not gamma.certified


class TestVerifyGamma1:
    def test_linear_passes_default_grid(self):
        assert verify_gamma1(linear(F(1, 2))).passed

    def test_square_fails_with_witness(self):
        report = verify_gamma1(user_function(lambda t: t * t), [0.5, 2])
        assert not report.passed
        assert report.bound_witness == 2  # gamma(2) = 4 >= 2

    def test_square_fails_on_default_grid(self):
        report = verify_gamma1(user_function(lambda t: t * t))
        assert not report.passed
        assert report.bound_witness is not None
        assert report.bound_witness >= 1  # t*t < t below 1

    def test_zero_function_fails_lower_bound(self):
        report = verify_gamma1(user_function(lambda t: 0 * t), [1])
        assert not report.passed
        assert report.bound_witness == 1

    def test_monotonicity_violation_pair(self):
        gamma = user_function(lambda t: t / 2 if t < 2 else F(1, 10))
        report = verify_gamma1(gamma, [1, 3])
        assert not report.passed
        assert report.monotonicity_witness == (1, 3)

    def test_grid_preconditions(self):
        gamma = linear(F(1, 2))
        with pytest.raises(ValueError):
            verify_gamma1(gamma, [])
        with pytest.raises(ValueError):
            verify_gamma1(gamma, [2, 1])
        with pytest.raises(ValueError):
            verify_gamma1(gamma, [0, 1])

    def test_default_grid_shape(self):
        grid = default_grid()
        assert len(grid) == 64
        assert grid[0] == pytest.approx(1e-6)
        assert grid[-1] == pytest.approx(1e6)
        assert all(b > a for a, b in zip(grid, grid[1:]))


positive_rationals = st.fractions(min_value=F(1, 10**6), max_value=F(10**6))


@given(t=positive_rationals)
def test_builtin_strict_bounds(t):
    for gamma in (linear(F(1, 2)), linear(F(9, 10)), rational_shrink()):
        v = gamma(t)
        assert 0 < v < t


@given(t1=positive_rationals, t2=positive_rationals)
def test_builtin_monotone(t1, t2):
    lo, hi = min(t1, t2), max(t1, t2)
    for gamma in (linear(F(1, 2)), rational_shrink()):
        assert gamma(lo) <= gamma(hi)


@given(ts=st.lists(positive_rationals, min_size=1, max_size=20))
def test_certified_partial_sums_dominated(ts):
    # Finite shadow of the summability-transfer property.
    for gamma in (linear(F(1, 2)), rational_shrink()):
        assert sum(gamma(t) for t in ts) <= sum(ts)
