"""Shared fixtures."""

import numpy as np
import pytest

from softguess.core.pmf import Pmf, make_joint, make_pmf, random_joint


@pytest.fixture
def dyadic4() -> Pmf:
    """The hand-checked source [1/2, 1/4, 1/8, 1/8]."""
    return make_pmf([0.5, 0.25, 0.125, 0.125])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def joint_2x4():
    return random_joint(2, 4, seed=11)


@pytest.fixture
def identity_joint():
    """X = Y, uniform on three symbols."""
    return make_joint(np.eye(3) / 3.0)
