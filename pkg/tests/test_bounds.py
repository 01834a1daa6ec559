import numpy as np
import pytest
from hypothesis import given, settings

from softguess.core.pmf import dyadic, make_pmf, uniform
from softguess.entropy.renyi import renyi
from softguess.errors import SandwichViolation
from softguess.guessing.bounds import (
    BoundsReport, bounds_report, compare_upper_bounds, converse_factor, explicit_bounds,
    in_comparison_regime, list_index_bounds
)

from .strategies import distortions, eps_values, pmfs, rho_values


class TestListIndexBounds:

    def test_hand_values(self, dyadic4):
        upper, lower = list_index_bounds(dyadic4, 1.0, 1.0, 0.0)
        assert upper == pytest.approx(1.86603, abs=1e-5)
        assert lower == pytest.approx(0.62201, abs=1e-5)

    def test_arikan_reduction(self, dyadic4):
        upper, lower = list_index_bounds(dyadic4, 2.0, 0.0, 0.0)
        h = renyi(dyadic4, 1.0 / 3.0)
        assert upper == pytest.approx(2.0 ** (2.0 * h))
        assert lower == pytest.approx(3.0 ** -2.0 * 2.0 ** (2.0 * h))

    def test_converse_factor(self):
        assert converse_factor(4, 1.0) == pytest.approx(1.0 / 3.0)


class TestExplicitBounds:

    def test_hand_value(self, dyadic4):
        upper, _ = explicit_bounds(dyadic4, 1.0, 1.0, 0.0)
        assert upper == pytest.approx(4.66387, abs=1e-4)

    def test_single_symbol_lists(self, dyadic4):
        upper, _ = explicit_bounds(dyadic4, 1.0, 0.0, 0.0)
        z_upper, _ = list_index_bounds(dyadic4, 1.0, 0.0, 0.0)
        assert upper == pytest.approx(z_upper)


class TestSandwich:

    @settings(max_examples=150)
    @given(pmfs(), rho_values, distortions, eps_values)
    def test_both_pairs_enclose_exact(self, p, rho, D, eps):
        bounds_report(p, rho, D, eps).check()

    def test_check_raises(self):
        report = BoundsReport(exact=5.0, z_upper=4.0, z_lower=1.0, explicit_upper=6.0,
                              explicit_lower=1.0, rho=1.0, D=0.0, eps=0.0)
        with pytest.raises(SandwichViolation):
            report.check()

    def test_point_mass(self):
        report = bounds_report(make_pmf([1.0]), 1.0, 0.0, 0.0).check()
        assert report.exact == pytest.approx(1.0)


class TestComparison:

    def test_regime(self):
        assert in_comparison_regime(1) and in_comparison_regime(2)
        assert not in_comparison_regime(3)

    @settings(max_examples=100)
    @given(pmfs(), rho_values, eps_values)
    def test_list_index_tighter_for_pairs(self, p, rho, eps):
        _, _, tighter = compare_upper_bounds(p, rho, 1.0, eps)
        assert tighter

    @given(pmfs(), rho_values, eps_values)
    def test_coincide_for_single_lists(self, p, rho, eps):
        z_bound, explicit_bound, tighter = compare_upper_bounds(p, rho, 0.0, eps)
        assert tighter
        assert z_bound == pytest.approx(explicit_bound)

    @pytest.mark.parametrize("rho", np.linspace(0.1, 10.0, 12))
    def test_dyadic_ten_quad_lists(self, rho):
        assert compare_upper_bounds(dyadic(10), rho, 2.0, 0.0)[2]

    def test_uniform_beyond_regime_is_reported(self):
        z_bound, explicit_bound, _ = compare_upper_bounds(uniform(9), 1.0, 2.0, 0.1)
        assert z_bound > 0 and explicit_bound > 0
