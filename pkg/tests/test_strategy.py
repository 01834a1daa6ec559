import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softguess.core.pmf import list_size, make_pmf, uniform, z_variable
from softguess.guessing.strategy import (
    SoftStrategy, build_optimal_strategy, guess_cdf, guess_distribution, min_moment,
    moment_of_list_masses, strategy_error_prob, strategy_moment
)

from .strategies import distortions, eps_values, pmfs, rho_values


def _strategy(lists, lam, L=1):
    lam = np.asarray(lam, dtype=float)
    prev = np.concatenate(([1.0], lam[:-1]))
    pi = 1.0 - np.divide(lam, prev, out=np.zeros_like(lam), where=prev > 0)
    return SoftStrategy(lists=tuple(lists), pi=pi, lam=lam, L=L, cutoff=len(lists))


class TestOptimalStrategy:

    def test_hand_construction(self, dyadic4):
        s = build_optimal_strategy(dyadic4, 1.0, 0.125)
        assert s.L == 2
        assert s.cutoff == 2
        assert s.lists == ((1, 2), (3,), (4,))
        np.testing.assert_allclose(s.pi, [0.0, 0.0, 1.0])
        np.testing.assert_allclose(s.lam, [1.0, 1.0, 0.0])

    def test_arikan_ordering(self, dyadic4):
        s = build_optimal_strategy(dyadic4, 0.0, 0.0)
        assert s.lists == ((1,), (2,), (3,), (4,))
        np.testing.assert_array_equal(s.pi, np.zeros(4))
        np.testing.assert_array_equal(s.lam, np.ones(4))

    def test_single_list(self):
        s = build_optimal_strategy(uniform(4), 2.0, 0.0)
        assert s.lists == ((1, 2, 3, 4),)
        assert s.n_lists == 1

    def test_partial_stop(self, dyadic4):
        s = build_optimal_strategy(dyadic4, 0.0, 0.3)
        assert s.cutoff == 2
        assert s.pi[1] == pytest.approx(1.0 - 0.2 / 0.25)

    @settings(max_examples=80)
    @given(pmfs(), distortions, eps_values)
    def test_error_probability_is_eps(self, p, D, eps):
        s = build_optimal_strategy(p, D, eps)
        assert strategy_error_prob(s, p) == pytest.approx(eps, abs=1e-9)
        assert np.all(np.diff(s.lam) <= 1e-15)
        covered = sorted(i for cell in s.lists for i in cell)
        assert covered == list(range(1, p.size + 1))


class TestErrorProbability:

    def test_optimal_case(self, dyadic4):
        s = build_optimal_strategy(dyadic4, 1.0, 0.125)
        assert strategy_error_prob(s, dyadic4) == pytest.approx(0.125)

    def test_never_give_up(self, dyadic4):
        s = _strategy([(1,), (2,), (3,), (4,)], [1, 1, 1, 1])
        assert strategy_error_prob(s, dyadic4) == pytest.approx(0.0)

    def test_always_give_up(self, dyadic4):
        s = _strategy([(1,), (2,), (3,), (4,)], [0, 0, 0, 0])
        assert strategy_error_prob(s, dyadic4) == pytest.approx(1.0)


class TestMoment:

    def test_mean_guess_count(self):
        s = _strategy([(1,), (2,), (3,), (4,)], [1, 1, 1, 1])
        assert strategy_moment(s, uniform(4), 1.0) == pytest.approx(2.5)

    def test_optimal_strategy_moment(self, dyadic4):
        s = build_optimal_strategy(dyadic4, 1.0, 0.125)
        assert strategy_moment(s, dyadic4, 1.0) == pytest.approx(1.0)

    def test_single_list(self):
        s = _strategy([(1, 2, 3)], [1], L=3)
        assert strategy_moment(s, uniform(3), 2.5) == pytest.approx(1.0)

    def test_guess_distribution(self, dyadic4):
        s = build_optimal_strategy(dyadic4, 1.0, 0.125)
        np.testing.assert_allclose(guess_distribution(s, dyadic4), [0.125, 0.75, 0.125, 0.0])
        np.testing.assert_allclose(guess_cdf(s, dyadic4), [0.75, 0.875, 0.875])


class TestMinMoment:

    @pytest.mark.parametrize("eps, expected", [(0.0, 1.25), (0.125, 1.0)])
    def test_hand_values(self, dyadic4, eps, expected):
        report = min_moment(dyadic4, 1.0, 1.0, eps)
        assert report.moment == pytest.approx(expected)
        assert report.error_prob == pytest.approx(eps)

    def test_uniform_arikan(self):
        assert min_moment(uniform(4), 1.0, 0.0, 0.0).moment == pytest.approx(2.5)

    @pytest.mark.parametrize("eps", [0.0, 0.2, 0.5])
    @pytest.mark.parametrize("rho", [0.5, 3.0])
    def test_one_list(self, eps, rho):
        assert min_moment(uniform(3), rho, np.log2(3), eps).moment == pytest.approx(1.0 - eps)

    def test_list_covers_alphabet(self, dyadic4):
        assert min_moment(dyadic4, 2.0, 3.0, 0.0).moment == pytest.approx(1.0)

    def test_list_masses_helper(self):
        assert moment_of_list_masses(np.array([0.75, 0.25]), 1.0, 0.0) == pytest.approx(1.25)

    @settings(max_examples=80)
    @given(pmfs(), rho_values, distortions, eps_values)
    def test_closed_form_matches_strategy(self, p, rho, D, eps):
        report = min_moment(p, rho, D, eps)
        s = build_optimal_strategy(p, D, eps)
        assert report.moment == pytest.approx(strategy_moment(s, p, rho), rel=1e-9, abs=1e-12)
        assert report.n_lists == s.n_lists
        assert report.cutoff == s.cutoff

    @settings(max_examples=60)
    @given(st.lists(st.sampled_from([1, 2, 3]), min_size=2, max_size=7), rho_values, distortions,
           eps_values, st.data())
    def test_ties_in_any_order(self, weights, rho, D, eps, data):
        shuffled = data.draw(st.permutations(weights))
        total = float(sum(weights))
        a = min_moment(make_pmf([w / total for w in weights]), rho, D, eps).moment
        b = min_moment(make_pmf([w / total for w in shuffled]), rho, D, eps).moment
        assert a == pytest.approx(b, rel=1e-12)

    @settings(max_examples=80)
    @given(pmfs(), rho_values, distortions, eps_values, eps_values)
    def test_non_increasing_in_eps(self, p, rho, D, e1, e2):
        lo, hi = sorted((e1, e2))
        small, large = min_moment(p, rho, D, lo).moment, min_moment(p, rho, D, hi).moment
        assert large <= small + 1e-12 * max(1.0, small)

    @settings(max_examples=80)
    @given(pmfs(), rho_values, distortions, distortions, eps_values)
    def test_non_increasing_in_distortion(self, p, rho, D1, D2, eps):
        lo, hi = sorted((D1, D2))
        small, large = min_moment(p, rho, lo, eps).moment, min_moment(p, rho, hi, eps).moment
        assert large <= small + 1e-12 * max(1.0, small)

    @settings(max_examples=80)
    @given(pmfs(), rho_values, distortions, eps_values)
    def test_same_as_list_index(self, p, rho, D, eps):
        direct = min_moment(p, rho, D, eps).moment
        reduced = min_moment(z_variable(p, list_size(D)), rho, 0.0, eps).moment
        assert direct == pytest.approx(reduced, rel=1e-12, abs=1e-15)
