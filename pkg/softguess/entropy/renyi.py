"""
Renyi-type entropies of pmfs and joint pmfs, in bits.

Orders are restricted to (0, 1]; an order within SHANNON_WINDOW of 1 is
evaluated as the Shannon limit. Masses below ZERO_MASS count as zero, so
0^alpha is 0.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy.stats import entropy as scipy_entropy

from ..config import SHANNON_WINDOW, ZERO_MASS
from ..core.pmf import JointPmf, Pmf, check_eps, truncate
from ..errors import BadParameter

logger = logging.getLogger("SOFTGUESS.entropy")


@dataclass(frozen=True)
class EntropyOrder:
    """Order alpha in (0, 1]; 1 is the Shannon limit."""
    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not (math.isfinite(a) and 0.0 < a <= 1.0):
            raise BadParameter(f"Entropy order must lie in (0, 1], got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)

    @property
    def is_shannon(self) -> bool:
        return abs(1.0 - self.alpha) < SHANNON_WINDOW

    @classmethod
    def for_moment(cls, rho: float) -> "EntropyOrder":
        """The order 1/(1+rho) that governs rho-th moments."""
        return cls(1.0 / (1.0 + float(rho)))


OrderLike = Union[float, EntropyOrder]


@dataclass(frozen=True)
class SourceStats:
    """Mean, variance and third absolute central moment of -log2 P(X)."""
    h: float
    v: float
    t: float


def as_order(order: OrderLike) -> EntropyOrder:
    return order if isinstance(order, EntropyOrder) else EntropyOrder(order)


def strict_order(order: OrderLike) -> EntropyOrder:
    order = as_order(order)
    if order.is_shannon:
        raise BadParameter(f"Smooth entropies need an order below 1, got {order.alpha!r}")
    return order


def power_sum(masses: np.ndarray, alpha: float) -> float:
    """Sum of m^alpha over masses m >= ZERO_MASS."""
    kept = masses[masses >= ZERO_MASS]
    return float(np.sum(kept ** alpha))


# =============================================================================
# Unconditional
# =============================================================================

def shannon(p: Pmf) -> float:
    return float(scipy_entropy(p.probs, base=2))


def renyi_of_masses(masses: np.ndarray, alpha: float) -> float:
    """(1/(1-alpha)) log2 sum m^alpha for a mass vector (possibly sub-normalized)."""
    return math.log2(power_sum(masses, alpha)) / (1.0 - alpha)


def renyi(p: Pmf, order: OrderLike) -> float:
    """Renyi entropy H_alpha(X); Shannon entropy at alpha = 1."""
    order = as_order(order)
    if order.is_shannon:
        return shannon(p)
    return renyi_of_masses(p.probs, order.alpha)


def smooth_renyi(p: Pmf, order: OrderLike, eps: float) -> float:
    """
    Smooth Renyi entropy H^eps_alpha(X) for alpha in (0, 1).

    Evaluated in closed form on the eps-truncated head of the sorted pmf;
    at eps = 0 it is the Renyi entropy.
    """
    eps = check_eps(eps)
    if eps == 0.0:
        return renyi(p, order)
    order = strict_order(order)
    _, q = truncate(p.probs, eps)
    return renyi_of_masses(q, order.alpha)


def source_stats(p: Pmf) -> SourceStats:
    """Entropy, varentropy and third absolute central moment."""
    info = -np.log2(p.probs)
    h = float(np.dot(p.probs, info))
    dev = info - h
    return SourceStats(
        h=h,
        v=float(np.dot(p.probs, dev ** 2)),
        t=float(np.dot(p.probs, np.abs(dev) ** 3)),
    )


# =============================================================================
# Conditional
# =============================================================================

def conditional_shannon(j: JointPmf) -> float:
    """H(X|Y) in bits."""
    return conditional_stats(j)[0]


def conditional_stats(j: JointPmf) -> Tuple[float, float]:
    """(H(X|Y), U(X|Y)): mean and variance of -log2 P_{X|Y}(X|Y)."""
    mat = j.matrix
    cond = mat / j.p_y[:, np.newaxis]
    mask = mat > 0
    info = np.zeros_like(mat)
    info[mask] = -np.log2(cond[mask])
    h = float(np.sum(mat * info))
    dev = np.where(mask, info - h, 0.0)
    return h, float(np.sum(mat * dev ** 2))


def arimoto_renyi_conditional(j: JointPmf, order: OrderLike) -> float:
    """
    Arimoto-Renyi conditional entropy H_alpha(X|Y).

    (alpha/(1-alpha)) log2 sum_y (sum_x P(x,y)^alpha)^(1/alpha); the
    Shannon limit H(X|Y) at alpha = 1.
    """
    order = as_order(order)
    if order.is_shannon:
        return conditional_shannon(j)
    a = order.alpha
    inner = np.array([power_sum(row, a) for row in j.matrix])
    return a / (1.0 - a) * math.log2(float(np.sum(inner ** (1.0 / a))))


def renner_wolf_conditional_zero(j: JointPmf, order: OrderLike) -> float:
    """Zero-smoothing conditional entropy: max over y of H_alpha(X | Y=y)."""
    order = as_order(order)
    return max(renyi(row, order) for row in j.rows())
