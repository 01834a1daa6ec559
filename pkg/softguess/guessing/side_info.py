"""
Soft guessing allowing errors when the guesser observes side information Y.

For each y the guesser runs the optimal strategy for P_{X|Y=y} with its own
error budget eps_y, subject to sum_y P_Y(y) eps_y = eps. As a function of
eps_y the minimal moment of one row is piecewise linear and convex, so the
best split is found by spending budget on the steepest segments first.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..config import DEFAULT_SETTINGS, Settings
from ..core.pmf import (
    JointPmf, Pmf, check_eps, check_rho, list_masses, list_size
)
from ..entropy.allocation import feasible_allocations, kuzuoka_conditional_smooth
from ..entropy.renyi import EntropyOrder, conditional_shannon
from ..errors import DistortionAboveEntropy, TooLargeForOracle
from .bounds import BoundsReport, converse_factor, explicit_from_entropy
from .strategy import guess_weights

logger = logging.getLogger("SOFTGUESS.guessing.side_info")


@dataclass(frozen=True)
class EpsAllocation:
    """Per-row error budgets eps_y and the row masses P_Y(y)."""
    eps_y: np.ndarray
    p_y: np.ndarray

    @property
    def total(self) -> float:
        return float(np.dot(self.p_y, self.eps_y))


@dataclass(frozen=True, eq=False)
class MomentCurve:
    """
    eps -> minimal moment of one row, piecewise linear on [0, 1].

    ``knots`` ascend from 0 to 1; segment j runs from knots[j] to
    knots[j+1] with slope ``slopes[j]`` (the list being truncated there is
    list ``lists[j]``).
    """
    knots: np.ndarray
    values: np.ndarray
    slopes: np.ndarray
    lists: np.ndarray

    def __call__(self, eps) -> np.ndarray:
        return np.interp(eps, self.knots, self.values)

    def at(self, eps: float) -> float:
        return float(np.interp(eps, self.knots, self.values))


def moment_curve(p_row: Pmf, rho: float, D: float) -> MomentCurve:
    """
    Exact curve eps -> M*(rho, D, eps) for one pmf.

    Raising eps removes mass from the last surviving list i at rate i^rho,
    so the knots are the tail sums of P_Z and the slopes are -i^rho.
    """
    rho = check_rho(rho)
    z = list_masses(p_row.probs, list_size(D))
    n = z.size
    weights = guess_weights(n, rho)

    # tails[k] = mass of lists k+1..n, for k = n..0
    tails = np.concatenate(([0.0], np.cumsum(z[::-1])))
    heads = np.concatenate(([0.0], np.cumsum(z * weights)))
    knots = np.clip(tails, 0.0, 1.0)
    values = heads[::-1]
    lists = np.arange(n, 0, -1)

    # merge knots that coincide
    keep = np.concatenate(([True], np.diff(knots) > 0))
    seg_keep = keep[1:]
    knots, values = knots[keep], values[keep]
    lists = lists[seg_keep]
    knots[-1] = 1.0
    values[-1] = 0.0
    return MomentCurve(knots=knots, values=values, slopes=-weights[lists - 1], lists=lists)


def conditional_min_moment(j: JointPmf, rho: float, D: float,
                           eps: float) -> Tuple[float, EpsAllocation]:
    """
    Minimal moment with side information and the allocation achieving it.

    All row segments are merged and sorted by |slope|, ties going to the
    smaller y; budget is spent on the steepest segment first.
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    p_y = j.p_y
    curves = [moment_curve(row, rho, D) for row in j.rows()]

    segments = []
    for y, curve in enumerate(curves):
        for k, slope in enumerate(curve.slopes):
            length = curve.knots[k + 1] - curve.knots[k]
            segments.append((-abs(slope), y, k, length))
    segments.sort()

    eps_y = np.zeros(j.num_y)
    remaining = eps
    for _, y, _, length in segments:
        if remaining <= 0.0:
            break
        if eps_y[y] >= 1.0:
            continue
        take = min(p_y[y] * length, remaining)
        eps_y[y] = min(eps_y[y] + take / p_y[y], 1.0)
        remaining -= take

    value = float(sum(w * c.at(e) for w, c, e in zip(p_y, curves, eps_y)))
    return value, EpsAllocation(eps_y=eps_y, p_y=p_y.copy())


def allocation_grid_oracle(j: JointPmf, rho: float, D: float, eps: float,
                           step: float = 1e-5) -> float:
    """Dense grid reference for conditional_min_moment (|Y| <= 3)."""
    rho = check_rho(rho)
    eps = check_eps(eps)
    curves = [moment_curve(row, rho, D) for row in j.rows()]
    grid = feasible_allocations(j.p_y, eps, [c.knots for c in curves], step)
    total = np.zeros(grid.shape[0])
    for col, (w, curve) in enumerate(zip(j.p_y, curves)):
        total += w * curve(grid[:, col])
    return float(total.min())


def list_index_joint(j: JointPmf, D: float) -> JointPmf:
    """Joint pmf of (Z, Y) with Z the list index of X within each row."""
    L = list_size(D)
    rows: List[np.ndarray] = [list_masses(row.probs, L) * w for row, w in zip(j.rows(), j.p_y)]
    width = max(r.size for r in rows)
    mat = np.zeros((len(rows), width))
    for y, r in enumerate(rows):
        mat[y, :r.size] = r
    return JointPmf(matrix=mat, atol=j.atol)


def conditional_list_index_bounds(j: JointPmf, rho: float, D: float, eps: float,
                                  settings: Settings = DEFAULT_SETTINGS) -> Tuple[float, float]:
    """
    Bounds through the per-row list index.

    upper = 2^(rho H^eps_{1/(1+rho)}(Z|Y)), lower = (1 + log2|X|)^(-rho) upper.

    Raises:
        OptimizerNotConverged: from the conditional entropy solver
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    h = kuzuoka_conditional_smooth(list_index_joint(j, D), EntropyOrder.for_moment(rho),
                                   eps, settings)
    upper = 2.0 ** (rho * h)
    return upper, converse_factor(j.num_x, rho) * upper


def conditional_explicit_bounds(j: JointPmf, rho: float, D: float, eps: float,
                                settings: Settings = DEFAULT_SETTINGS) -> Tuple[float, float]:
    """Explicit bounds from H^eps_{1/(1+rho)}(X|Y) and L; 2^(rho H) upper when L = 1."""
    rho = check_rho(rho)
    eps = check_eps(eps)
    h = kuzuoka_conditional_smooth(j, EntropyOrder.for_moment(rho), eps, settings)
    return explicit_from_entropy(h, rho, eps, list_size(D), j.num_x)


def conditional_bounds_report(j: JointPmf, rho: float, D: float, eps: float,
                              settings: Settings = DEFAULT_SETTINGS) -> BoundsReport:
    exact, _ = conditional_min_moment(j, rho, D, eps)
    z_upper, z_lower = conditional_list_index_bounds(j, rho, D, eps, settings)
    explicit_upper, explicit_lower = conditional_explicit_bounds(j, rho, D, eps, settings)
    return BoundsReport(exact=exact, z_upper=z_upper, z_lower=z_lower,
                        explicit_upper=explicit_upper, explicit_lower=explicit_lower,
                        rho=float(rho), D=float(D), eps=float(eps), side_information=True)


def side_info_exponent(j: JointPmf, rho: float, D: float) -> float:
    """rho (H(X|Y) - D), the growth rate of the block moment with side information."""
    rho = check_rho(rho)
    h = conditional_shannon(j)
    if D >= h:
        raise DistortionAboveEntropy(
            f"D={D:g} must be below H(X|Y)={h:.6g} for a positive exponent"
        )
    return rho * (h - D)
