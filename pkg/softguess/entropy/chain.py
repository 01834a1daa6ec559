"""
Chain-rule sides for a deterministic function Z = f(X).

Both helpers return (lhs, rhs) in bits so callers can assert lhs <= rhs:

    H^eps(X, Z)     <= H~^0(X | Z)    + H^eps(Z)
    H^eps(X, Z | Y) <= H~^0(X | Z, Y) + H^eps(Z | Y)

Because Z is a function of X, the pair (X, Z) carries the distribution of X.
"""

from typing import Sequence, Tuple

import numpy as np

from ..config import DEFAULT_SETTINGS, Settings
from ..core.pmf import JointPmf, Pmf, merge
from ..errors import BadParameter
from .allocation import kuzuoka_conditional_smooth
from .renyi import OrderLike, renner_wolf_conditional_zero, smooth_renyi


def _labels(labels: Sequence[int], size: int) -> np.ndarray:
    labels = np.asarray(labels, dtype=int)
    if labels.shape != (size,) or np.any(labels < 0):
        raise BadParameter(f"Need {size} nonnegative labels, got {labels.tolist()}")
    return labels


def grouped_by_label(masses: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Matrix with one row per label z of positive mass, holding the masses of f^-1(z)."""
    used = np.unique(labels)
    mat = np.zeros((used.size, masses.size))
    for row, z in enumerate(used):
        keep = labels == z
        mat[row, keep] = masses[keep]
    return mat[mat.sum(axis=1) > 0]


def chain_rule_sides(p: Pmf, labels: Sequence[int], order: OrderLike,
                     eps: float) -> Tuple[float, float]:
    """Sides of the unconditional chain rule; labels follow the sorted order of p."""
    labels = _labels(labels, p.size)
    given_z = JointPmf(matrix=grouped_by_label(p.probs, labels), atol=p.atol)
    lhs = smooth_renyi(p, order, eps)
    rhs = renner_wolf_conditional_zero(given_z, order) + smooth_renyi(merge(p, labels), order, eps)
    return lhs, rhs


def conditional_chain_rule_sides(j: JointPmf, labels: Sequence[int], order: OrderLike,
                                 eps: float,
                                 settings: Settings = DEFAULT_SETTINGS) -> Tuple[float, float]:
    """Sides of the conditional chain rule; labels index the columns of j."""
    labels = _labels(labels, j.num_x)
    lhs = kuzuoka_conditional_smooth(j, order, eps, settings)

    # rows (y, z) for the zero-smoothing term, rows y for Z given Y
    given_zy = JointPmf(matrix=np.vstack([grouped_by_label(row, labels) for row in j.matrix]),
                        atol=j.atol)
    z_given_y = JointPmf(matrix=np.stack([np.bincount(labels, weights=row) for row in j.matrix]),
                         atol=j.atol)
    rhs = (renner_wolf_conditional_zero(given_zy, order)
           + kuzuoka_conditional_smooth(z_given_y, order, eps, settings))
    return lhs, rhs
