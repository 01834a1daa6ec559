import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.stats import norm

from softguess.asymptotics.quantile import gaussian_quantile
from softguess.errors import OutOfDomain

probabilities = st.floats(min_value=1e-12, max_value=1.0 - 1e-12, exclude_min=True)


class TestGaussianQuantile:

    def test_median(self):
        assert gaussian_quantile(0.5) == 0.0

    def test_one_sigma(self):
        assert gaussian_quantile(0.8413447460685429) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("eps", [1e-10, 1e-4, 0.01, 0.02425, 0.05, 0.1, 0.3, 0.7, 0.95, 0.999])
    def test_against_scipy(self, eps):
        assert gaussian_quantile(eps) == pytest.approx(norm.ppf(eps), rel=1e-9, abs=1e-12)

    @given(st.floats(min_value=1e-6, max_value=1.0 - 1e-6))
    def test_odd_about_one_half(self, eps):
        assert gaussian_quantile(eps) == pytest.approx(-gaussian_quantile(1.0 - eps), abs=1e-6)

    @given(probabilities, probabilities)
    def test_monotone(self, a, b):
        lo, hi = sorted((a, b))
        assert gaussian_quantile(lo) <= gaussian_quantile(hi) + 1e-9

    @pytest.mark.parametrize("eps", [0.0, 1.0, -0.5, float("nan")])
    def test_domain(self, eps):
        with pytest.raises(OutOfDomain):
            gaussian_quantile(eps)

    def test_round_trip_through_cdf(self):
        eps = np.linspace(0.001, 0.999, 50)
        values = np.array([gaussian_quantile(e) for e in eps])
        np.testing.assert_allclose(norm.cdf(values), eps, rtol=1e-10)
