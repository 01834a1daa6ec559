import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softguess.core.pmf import (
    bernoulli, check_eps, check_rho, dyadic, expand_runs, generate, iid_extension,
    iid_joint_extension, independent_joint, list_size, make_joint, make_pmf, merge,
    random_joint, random_pmf, smooth_truncation, truncate, uniform, z_variable
)
from softguess.errors import (
    BadParameter, EmptyInput, NegativeDistortion, NotNormalized, TooLarge
)

from .strategies import eps_values, pmfs


class TestMakePmf:

    def test_sorts_and_strips_zeros(self):
        p = make_pmf([0.25, 0.5, 0.0, 0.25])
        np.testing.assert_array_equal(p.probs, [0.5, 0.25, 0.25])

    def test_point_mass(self):
        assert make_pmf([1.0]).tolist() == [1.0]

    def test_not_normalized(self):
        with pytest.raises(NotNormalized) as info:
            make_pmf([0.3, 0.3, 0.5])
        assert info.value.total == pytest.approx(1.1)

    def test_empty(self):
        with pytest.raises(EmptyInput):
            make_pmf([])

    def test_negative_entry(self):
        with pytest.raises(BadParameter):
            make_pmf([1.2, -0.2])

    def test_probs_are_read_only(self):
        p = make_pmf([0.5, 0.5])
        with pytest.raises(ValueError):
            p.probs[0] = 1.0

    @given(pmfs())
    def test_canonical_form(self, p):
        assert np.all(p.probs > 0)
        assert np.all(np.diff(p.probs) <= 0)
        assert p.probs.sum() == pytest.approx(1.0, abs=1e-9)


class TestGenerators:

    def test_dyadic_ten(self):
        p = dyadic(10)
        expected = [2.0 ** -(i + 1) for i in range(9)] + [2.0 ** -9]
        np.testing.assert_allclose(p.probs, expected)
        assert p.probs.sum() == pytest.approx(1.0)

    def test_uniform(self):
        np.testing.assert_allclose(uniform(4).probs, [0.25] * 4)

    def test_random_is_deterministic(self):
        np.testing.assert_array_equal(random_pmf(5, 42).probs, random_pmf(5, 42).probs)

    def test_random_seeds_differ(self):
        assert not np.allclose(random_pmf(5, 42).probs, random_pmf(5, 43).probs)

    def test_random_joint_shape(self):
        j = random_joint(3, 4, seed=1)
        assert (j.num_y, j.num_x) == (3, 4)
        assert j.matrix.sum() == pytest.approx(1.0)

    def test_bernoulli_is_sorted(self):
        np.testing.assert_allclose(bernoulli(0.2).probs, [0.8, 0.2])

    def test_generate_by_name(self):
        np.testing.assert_allclose(generate("uniform", 3).probs, [1 / 3] * 3)

    def test_generate_unknown(self):
        with pytest.raises(BadParameter):
            generate("zipf", 3)

    def test_generate_wrong_arity(self):
        with pytest.raises(BadParameter):
            generate("random", 3)

    def test_non_integer_size(self):
        with pytest.raises(BadParameter):
            uniform(2.5)


class TestParameterChecks:

    @pytest.mark.parametrize("eps", [-0.1, 1.0, float("nan"), float("inf")])
    def test_bad_eps(self, eps):
        with pytest.raises(BadParameter):
            check_eps(eps)

    def test_eps_one_allowed_on_request(self):
        assert check_eps(1.0, allow_one=True) == 1.0

    @pytest.mark.parametrize("rho", [0.0, -1.0, float("inf")])
    def test_bad_rho(self, rho):
        with pytest.raises(BadParameter):
            check_rho(rho)


class TestListSize:

    @pytest.mark.parametrize("D, L", [(0.0, 1), (0.9, 1), (1.0, 2), (2.0, 4), (2.5, 5)])
    def test_floor(self, D, L):
        assert list_size(D) == L

    def test_snaps_log2_three(self):
        assert list_size(math.log2(3)) == 3

    def test_snaps_just_below_log2_three(self):
        D = math.nextafter(math.log2(3), 0.0)
        assert list_size(D) == 3

    def test_negative(self):
        with pytest.raises(NegativeDistortion):
            list_size(-0.5)


class TestTruncation:

    def test_eps_zero_keeps_everything(self):
        i_star, q = truncate(uniform(4).probs, 0.0)
        assert i_star == 4
        np.testing.assert_allclose(q, [0.25] * 4)

    def test_boundary_atom_kept_whole(self, dyadic4):
        t = smooth_truncation(dyadic4, 0.125)
        assert t.i_star == 3
        np.testing.assert_allclose(t.q, [0.5, 0.25, 0.125])

    def test_cumulative_boundary(self):
        t = smooth_truncation(uniform(4), 0.25)
        assert t.i_star == 3
        np.testing.assert_allclose(t.q, [0.25, 0.25, 0.25])

    def test_partial_last_mass(self, dyadic4):
        t = smooth_truncation(dyadic4, 0.3)
        assert t.i_star == 2
        np.testing.assert_allclose(t.q, [0.5, 0.2])

    @given(pmfs(), eps_values)
    def test_mass_is_one_minus_eps(self, p, eps):
        t = smooth_truncation(p, eps)
        assert t.mass == pytest.approx(1.0 - eps, abs=1e-12)
        assert 1 <= t.i_star <= p.size
        assert np.all(t.q <= p.probs[:t.i_star] + 1e-15)


class TestListIndex:

    def test_pairs(self, dyadic4):
        np.testing.assert_allclose(z_variable(dyadic4, 2).probs, [0.75, 0.25])

    def test_identity_for_single_lists(self, dyadic4):
        assert z_variable(dyadic4, 1) is dyadic4

    def test_short_last_list(self):
        np.testing.assert_allclose(z_variable(uniform(5), 2).probs, [0.4, 0.4, 0.2])

    @given(pmfs(), st.integers(1, 5))
    def test_descending(self, p, L):
        z = z_variable(p, L)
        assert np.all(np.diff(z.probs) <= 0)
        assert z.size == math.ceil(p.size / L)

    def test_merge(self):
        p = make_pmf([0.4, 0.3, 0.2, 0.1])
        np.testing.assert_allclose(merge(p, [0, 1, 0, 1]).probs, [0.6, 0.4])

    def test_merge_needs_one_label_per_atom(self):
        with pytest.raises(BadParameter):
            merge(uniform(3), [0, 1])


class TestProducts:

    def test_uniform_binary_is_one_run(self):
        runs = iid_extension(bernoulli(0.5), 3)
        np.testing.assert_allclose(runs.values, [0.125])
        assert runs.counts == (8,)

    def test_binomial_runs(self):
        runs = iid_extension(bernoulli(0.2), 2)
        np.testing.assert_allclose(runs.values, [0.64, 0.16, 0.04])
        assert runs.counts == (1, 2, 1)

    def test_budget(self):
        with pytest.raises(TooLarge):
            iid_extension(bernoulli(0.3), 64)

    @settings(max_examples=25)
    @given(pmfs(max_size=4), st.integers(1, 4))
    def test_runs_match_expansion(self, p, n):
        runs = iid_extension(p, n)
        assert runs.total_atoms == p.size ** n
        assert runs.mass() == pytest.approx(1.0)
        atoms = np.array([1.0])
        for _ in range(n):
            atoms = np.outer(atoms, p.probs).ravel()
        np.testing.assert_allclose(expand_runs(runs).probs, np.sort(atoms)[::-1], atol=1e-15)

    def test_joint_extension(self, joint_2x4):
        block = iid_joint_extension(joint_2x4, 2)
        assert (block.num_y, block.num_x) == (4, 16)
        np.testing.assert_allclose(block.p_y, np.kron(joint_2x4.p_y, joint_2x4.p_y))


class TestJoint:

    def test_strips_empty_rows_and_columns(self):
        j = make_joint([[0.5, 0.0], [0.0, 0.0], [0.5, 0.0]])
        assert (j.num_y, j.num_x) == (2, 1)

    def test_rows_are_conditionals(self):
        j = make_joint([[0.1, 0.3], [0.4, 0.2]])
        np.testing.assert_allclose(j.row(0).probs, [0.75, 0.25])
        np.testing.assert_allclose(j.p_y, [0.4, 0.6])
        np.testing.assert_allclose(j.p_x().probs, [0.5, 0.5])

    def test_independent(self):
        j = independent_joint(bernoulli(0.2), uniform(2))
        np.testing.assert_allclose(j.row(1).probs, [0.8, 0.2])

    def test_ragged(self):
        with pytest.raises(BadParameter):
            make_joint([[0.5], [0.25, 0.25]])
