import math

import numpy as np
import pytest
from hypothesis import given, settings

from softguess.core.pmf import list_size, make_pmf, uniform, z_variable
from softguess.coding.code import (
    build_list_index_code, build_optimal_code, codeword_for_list, codeword_length,
    codeword_lengths, codeword_strings, cumulant_length, cumulant_of_list_masses,
    cumulant_sandwich, excess_distortion_prob, expected_length, max_length
)
from softguess.errors import BadParameter
from softguess.guessing.strategy import min_moment

from .strategies import distortions, eps_values, pmfs, rho_values


class TestCodewords:

    @pytest.mark.parametrize("l, word", [(1, ""), (2, "0"), (3, "1"), (4, "00"), (7, "11"),
                                         (8, "000")])
    def test_lexicographic(self, l, word):
        assert codeword_for_list(l) == word
        assert codeword_length(l) == len(word)

    def test_strings_in_order(self):
        assert codeword_strings(7) == ["", "0", "1", "00", "01", "10", "11"]

    def test_strings_agree_with_index(self):
        assert codeword_strings(40) == [codeword_for_list(l) for l in range(1, 41)]

    def test_lengths(self):
        np.testing.assert_array_equal(codeword_lengths(8), [0, 1, 1, 2, 2, 2, 2, 3])

    def test_lengths_enumerated(self):
        count = 2 ** 16
        expected = [l.bit_length() - 1 for l in range(1, count + 1)]
        np.testing.assert_array_equal(codeword_lengths(count), expected)
        assert [codeword_length(l) for l in range(1, count + 1)] == expected
        assert [len(s) for s in codeword_strings(count)] == expected

    def test_bad_index(self):
        with pytest.raises(BadParameter):
            codeword_for_list(0)


class TestOptimalCode:

    def test_hand_construction(self, dyadic4):
        code = build_optimal_code(dyadic4, 1.0, 0.0)
        assert (code.L, code.l_star, code.alpha) == (2, 2, 0.0)
        np.testing.assert_array_equal(code.lengths, [0, 1])
        assert code.list_members(1, dyadic4.size) == (1, 2)

    def test_single_list(self):
        code = build_optimal_code(uniform(4), 2.0, 0.0)
        assert code.n_lists == 1
        assert cumulant_length(code, uniform(4), 1.0) == pytest.approx(0.0)
        assert max_length(code, uniform(4)) == 0

    def test_eps_equal_to_tail(self, dyadic4):
        code = build_optimal_code(dyadic4, 0.0, 0.125)
        assert code.l_star == 3
        assert code.alpha == pytest.approx(0.0)

    def test_cutoff_at_first_list(self, dyadic4):
        code = build_optimal_code(dyadic4, 1.0, 0.3)
        assert code.l_star == 1
        assert code.alpha == pytest.approx(0.05 / 0.75)

    def test_list_index_code(self, dyadic4):
        z = z_variable(dyadic4, 2)
        code = build_list_index_code(z, 0.1)
        assert code.L == 1
        assert excess_distortion_prob(code, z, 0.0) == pytest.approx(0.1)

    @settings(max_examples=80)
    @given(pmfs(), distortions, eps_values)
    def test_lists_fit_distortion(self, p, D, eps):
        code = build_optimal_code(p, D, eps)
        assert code.L == list_size(D)
        decoded = [code.list_members(l, p.size) for l in range(1, code.n_lists + 1)]
        for members in decoded:
            assert 1 <= len(members) <= code.L
            assert -math.log2(1.0 / len(members)) <= D + 1e-12
        assert sorted(x for members in decoded for x in members) == list(range(1, p.size + 1))

    @settings(max_examples=80)
    @given(pmfs(), distortions, eps_values)
    def test_list_index_code_decodes_single_lists(self, p, D, eps):
        z = z_variable(p, list_size(D))
        code = build_list_index_code(z, eps)
        assert code.L == 1
        assert all(code.list_members(l, z.size) == (l,) for l in range(1, code.n_lists + 1))


class TestExcessDistortion:

    def test_lossless(self, dyadic4):
        assert excess_distortion_prob(build_optimal_code(dyadic4, 1.0, 0.0), dyadic4, 1.0) == 0.0

    def test_hand_value(self, dyadic4):
        code = build_optimal_code(dyadic4, 1.0, 0.125)
        assert excess_distortion_prob(code, dyadic4, 1.0) == pytest.approx(0.125)

    def test_wrong_distortion(self, dyadic4):
        with pytest.raises(BadParameter):
            excess_distortion_prob(build_optimal_code(dyadic4, 1.0, 0.0), dyadic4, 2.0)

    @settings(max_examples=80)
    @given(pmfs(), distortions, eps_values)
    def test_meets_budget(self, p, D, eps):
        code = build_optimal_code(p, D, eps)
        assert excess_distortion_prob(code, p, D) == pytest.approx(eps, abs=1e-9)


class TestCumulant:

    def test_hand_value(self, dyadic4):
        code = build_optimal_code(dyadic4, 1.0, 0.0)
        assert cumulant_length(code, dyadic4, 1.0) == pytest.approx(0.32193, abs=1e-5)

    def test_small_rho_is_expected_length(self, dyadic4):
        code = build_optimal_code(dyadic4, 0.0, 0.1)
        assert cumulant_length(code, dyadic4, 1e-6) == pytest.approx(
            expected_length(code, dyadic4), abs=1e-4)

    def test_expected_and_max_length(self, dyadic4):
        code = build_optimal_code(dyadic4, 0.0, 0.0)
        assert expected_length(code, dyadic4) == pytest.approx(0.25 + 0.125 + 2 * 0.125)
        assert max_length(code, dyadic4) == 2
        assert max_length(build_optimal_code(dyadic4, 0.0, 0.125), dyadic4) == 1

    def test_from_list_masses(self, dyadic4):
        code = build_optimal_code(dyadic4, 1.0, 0.2)
        z = z_variable(dyadic4, 2).probs
        assert cumulant_of_list_masses(z, 2.0, 0.2) == pytest.approx(
            cumulant_length(code, dyadic4, 2.0))


class TestCumulantSandwich:

    def test_hand_values(self, dyadic4):
        report = cumulant_sandwich(dyadic4, 1.0, 1.0, 0.0)
        assert report.strict_lower == pytest.approx(math.log2(0.625))
        assert report.upper == pytest.approx(math.log2(1.25))
        assert report.lambda_star == pytest.approx(report.upper)

    def test_lossless(self):
        p = make_pmf([0.4, 0.3, 0.2, 0.1])
        report = cumulant_sandwich(p, 2.0, 0.0, 0.0)
        moment = min_moment(p, 2.0, 0.0, 0.0).moment
        assert report.upper == pytest.approx(math.log2(moment) / 2.0)

    @settings(max_examples=150)
    @given(pmfs(), rho_values, distortions, eps_values)
    def test_holds(self, p, rho, D, eps):
        report = cumulant_sandwich(p, rho, D, eps)
        assert report.strict_lower < report.lambda_star
