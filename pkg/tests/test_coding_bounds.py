import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softguess.core.pmf import dyadic
from softguess.coding.bounds import CumulantBounds, cumulant_bounds, zero_error_upper_bounds
from softguess.errors import SandwichViolation

from .strategies import distortions, eps_values, pmfs, rho_values


class TestZeroErrorBounds:

    def test_hand_values(self, dyadic4):
        new, old = zero_error_upper_bounds(dyadic4, 1.0, 1.0)
        assert new == pytest.approx(2.0 * math.log2(math.sqrt(0.75) + 0.5))
        assert old == pytest.approx(math.log2(4.66387), abs=1e-4)

    def test_old_bound_diverges(self):
        p = dyadic(10)
        _, old_small = zero_error_upper_bounds(p, 0.1, 2.0)
        _, old_one = zero_error_upper_bounds(p, 1.0, 2.0)
        _, old_tiny = zero_error_upper_bounds(p, 1e-3, 2.0)
        assert old_small > 4.0 * old_one
        assert old_tiny > 100.0 * old_one

    def test_new_bound_stays_finite(self):
        p = dyadic(10)
        new, _ = zero_error_upper_bounds(p, 1e-3, 2.0)
        assert new <= math.log2(3) + 1e-9

    @given(pmfs(), rho_values, st.sampled_from([0.0, 0.5, 1.0, 1.5]))
    def test_new_not_above_old_for_short_lists(self, p, rho, D):
        new, old = zero_error_upper_bounds(p, rho, D)
        assert new <= old + 1e-9


class TestCumulantBounds:

    @settings(max_examples=150)
    @given(pmfs(), rho_values, distortions, eps_values)
    def test_enclose_exact(self, p, rho, D, eps):
        cumulant_bounds(p, rho, D, eps).check()

    def test_lossless_matches_zero_error_bound(self, dyadic4):
        bounds = cumulant_bounds(dyadic4, 1.0, 1.0, 0.0)
        new, _ = zero_error_upper_bounds(dyadic4, 1.0, 1.0)
        assert bounds.z_upper == pytest.approx(new)

    def test_check_raises(self):
        bounds = CumulantBounds(lambda_star=3.0, z_upper=2.0, explicit_upper=4.0, z_lower=0.0,
                                explicit_lower=0.0, rho=1.0, D=0.0, eps=0.0)
        with pytest.raises(SandwichViolation):
            bounds.check()

    def test_to_dict(self, dyadic4):
        d = cumulant_bounds(dyadic4, 1.0, 1.0, 0.1).to_dict()
        assert set(d) >= {"lambda_star", "z_upper", "explicit_upper", "z_lower", "explicit_lower"}
