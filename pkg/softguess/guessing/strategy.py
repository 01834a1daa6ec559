"""
Optimal soft guessing allowing errors.

The guesser proposes uniform distributions over lists of L = floor(2^D)
symbols of the probability-sorted alphabet. Before each guess it may give
up; the optimal schedule never gives up before the list holding the
eps-truncation boundary, randomizes at that list, and always gives up
after it.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.pmf import (
    Pmf, check_eps, check_rho, list_size, smooth_truncation, truncate, z_variable
)
from ..errors import PropertyViolation

logger = logging.getLogger("SOFTGUESS.guessing")

_CLAMP_DRIFT = 1e-12


@dataclass(frozen=True, eq=False)
class SoftStrategy:
    """
    Lists, stopping probabilities and survival probabilities of a strategy.

    ``lists`` holds 1-based symbol indices into the sorted pmf.
    ``lam[i]`` is the probability that guess i+1 is made at all.
    """
    lists: Tuple[Tuple[int, ...], ...]
    pi: np.ndarray
    lam: np.ndarray
    L: int
    cutoff: int

    @property
    def n_lists(self) -> int:
        return len(self.lists)

    def cell_masses(self, p: Pmf) -> np.ndarray:
        return np.array([p.probs[np.asarray(cell) - 1].sum() for cell in self.lists])


@dataclass(frozen=True)
class MomentReport:
    """Minimal rho-th guessing moment and the parameters that produced it."""
    moment: float
    error_prob: float
    rho: float
    D: float
    eps: float
    n_lists: int
    cutoff: int


def guess_weights(count: int, rho: float) -> np.ndarray:
    """i^rho for i = 1..count, as exp(rho ln i)."""
    return np.exp(rho * np.log(np.arange(1, count + 1, dtype=float)))


def build_optimal_strategy(p: Pmf, D: float, eps: float) -> SoftStrategy:
    """
    Construct the optimal soft guessing strategy with give-up.

    Args:
        p: Source pmf
        D: Distortion level in bits (lists have size floor(2^D))
        eps: Allowed error probability

    Returns:
        SoftStrategy whose induced error probability is eps
    """
    eps = check_eps(eps)
    L = list_size(D)
    n = p.size
    trunc = smooth_truncation(p, eps)
    i_star = trunc.i_star

    K = math.ceil(i_star / L)
    K_tail = math.ceil((n - i_star) / L)

    lists = [tuple(range((i - 1) * L + 1, i * L + 1)) for i in range(1, K)]
    lists.append(tuple(range((K - 1) * L + 1, i_star + 1)))
    lists += [tuple(range(s, min(s + L, n + 1))) for s in range(i_star + 1, n + 1, L)]
    assert len(lists) == K + K_tail

    start = (K - 1) * L
    kept = float(trunc.q[start:i_star].sum())
    offered = float(p.probs[start:i_star].sum())
    raw = 1.0 - kept / offered
    pi_k = min(max(raw, 0.0), 1.0)
    drift = abs(raw - pi_k)
    if drift > 1e-15:
        logger.debug("stopping probability clamped from %.17g (drift %.3g)", raw, drift)
    if drift >= _CLAMP_DRIFT:
        raise PropertyViolation(f"Stopping probability {raw!r} drifted outside [0, 1]")

    pi = np.zeros(K + K_tail)
    pi[K - 1] = pi_k
    pi[K:] = 1.0
    lam = np.cumprod(1.0 - pi)
    return SoftStrategy(lists=tuple(lists), pi=pi, lam=lam, L=L, cutoff=K)


def guess_distribution(s: SoftStrategy, p: Pmf) -> np.ndarray:
    """P[G = i] for i = 0..N; entry 0 is the probability of giving up."""
    success = s.lam * s.cell_masses(p)
    return np.concatenate(([max(1.0 - success.sum(), 0.0)], success))


def guess_cdf(s: SoftStrategy, p: Pmf) -> np.ndarray:
    """P[success within k guesses] for k = 1..N."""
    return np.cumsum(s.lam * s.cell_masses(p))


def strategy_error_prob(s: SoftStrategy, p: Pmf) -> float:
    return float(1.0 - np.dot(s.lam, s.cell_masses(p)))


def strategy_moment(s: SoftStrategy, p: Pmf, rho: float) -> float:
    """sum_i lam_i P(cell_i) i^rho."""
    rho = check_rho(rho)
    return float(np.dot(s.lam * s.cell_masses(p), guess_weights(s.n_lists, rho)))


def moment_of_list_masses(z_masses: np.ndarray, rho: float, eps: float) -> float:
    """sum_{i <= i*} Q^eps_Z(i) i^rho for descending list masses."""
    i_star, q = truncate(z_masses, eps)
    return float(np.dot(q, guess_weights(i_star, rho)))


def min_moment(p: Pmf, rho: float, D: float, eps: float) -> MomentReport:
    """
    Minimal rho-th soft guessing moment M*(rho, D, eps).

    Computed in closed form from the list index Z = ceil(X/L) truncated at
    eps; equal to the moment of build_optimal_strategy.
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    L = list_size(D)
    z = z_variable(p, L)
    i_z, q_z = truncate(z.probs, eps)
    moment = float(np.dot(q_z, guess_weights(i_z, rho)))

    i_star = smooth_truncation(p, eps).i_star
    K = math.ceil(i_star / L)
    N = K + math.ceil((p.size - i_star) / L)
    error_prob = min(max(1.0 - float(q_z.sum()), 0.0), 1.0)
    return MomentReport(moment=moment, error_prob=error_prob, rho=rho, D=float(D), eps=eps,
                        n_lists=N, cutoff=K)
