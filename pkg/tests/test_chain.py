import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softguess.core.pmf import make_pmf, random_joint, uniform
from softguess.entropy.chain import chain_rule_sides, conditional_chain_rule_sides, grouped_by_label
from softguess.entropy.renyi import renyi
from softguess.errors import BadParameter

from .strategies import pmfs


class TestGroupedByLabel:

    def test_rows_per_label(self):
        mat = grouped_by_label(np.array([0.4, 0.3, 0.2, 0.1]), np.array([1, 0, 1, 0]))
        np.testing.assert_allclose(mat, [[0.0, 0.3, 0.0, 0.1], [0.4, 0.0, 0.2, 0.0]])

    def test_unused_labels_are_dropped(self):
        mat = grouped_by_label(np.array([0.5, 0.5]), np.array([0, 4]))
        assert mat.shape == (2, 2)


class TestChainRule:

    def test_identity_labels_are_tight(self):
        p = make_pmf([0.5, 0.3, 0.2])
        lhs, rhs = chain_rule_sides(p, [0, 1, 2], 0.5, 0.0)
        assert lhs == pytest.approx(rhs)

    def test_constant_label(self):
        p = uniform(4)
        lhs, rhs = chain_rule_sides(p, [0, 0, 0, 0], 0.5, 0.0)
        assert rhs == pytest.approx(renyi(p, 0.5))
        assert lhs == pytest.approx(rhs)

    def test_label_count(self):
        with pytest.raises(BadParameter):
            chain_rule_sides(uniform(3), [0, 1], 0.5, 0.0)

    @settings(max_examples=60, deadline=None)
    @given(pmfs(max_size=6), st.sampled_from([0.2, 0.5, 0.9]),
           st.sampled_from([0.0, 0.1, 0.3]), st.data())
    def test_unconditional(self, p, alpha, eps, data):
        labels = data.draw(st.lists(st.integers(0, 2), min_size=p.size, max_size=p.size))
        lhs, rhs = chain_rule_sides(p, labels, alpha, eps)
        assert lhs <= rhs + 1e-9

    @pytest.mark.parametrize("seed", range(5))
    @pytest.mark.parametrize("eps", [0.0, 0.1, 0.3])
    def test_conditional(self, seed, eps):
        j = random_joint(2, 4, seed=seed)
        lhs, rhs = conditional_chain_rule_sides(j, [0, 1, 0, 2], 0.5, eps)
        assert lhs <= rhs + 1e-9
