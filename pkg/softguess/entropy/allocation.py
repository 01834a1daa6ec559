"""
Conditional smooth Renyi entropy with an error budget split across rows.

The quantity is an infimum over allocations (eps_y) with
sum_y P_Y(y) eps_y = eps of

    (alpha/(1-alpha)) log2 sum_y P_Y(y) f_y(eps_y),
    f_y(e) = (sum_j Q^e_{X|Y=y}(j)^alpha)^(1/alpha).

Each f_y is continuous and non-increasing with breakpoints at the tail
sums of its sorted row. Between breakpoints it is concave, so the minimum
sits where all but one coordinate are at breakpoints. The solver runs
cyclic pairwise budget exchange (exact breakpoint scan plus a bounded
golden-section refinement on each pair) and, when the breakpoint product
is small, an exhaustive scan of those vertices; the better value wins.
"""

import bisect
import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from ..config import DEFAULT_SETTINGS, Settings, ZERO_MASS
from ..core.pmf import JointPmf, Pmf, check_eps
from ..errors import BadParameter, OptimizerNotConverged, TooLargeForOracle
from .renyi import OrderLike, strict_order, arimoto_renyi_conditional, smooth_renyi

logger = logging.getLogger("SOFTGUESS.entropy.allocation")

_CUM_TOL = 1e-12
_FEASIBLE_TOL = 1e-12
_ORACLE_MAX_POINTS = 5_000_000


class RowProfile:
    """f(e) = (sum_j Q^e(j)^alpha)^(1/alpha) for one sorted conditional row."""

    def __init__(self, masses: np.ndarray, alpha: float):
        self.masses = np.asarray(masses, dtype=float)
        self.alpha = float(alpha)
        self.cum = np.cumsum(self.masses)
        self.cum_prev = np.concatenate(([0.0], self.cum[:-1]))
        powered = np.where(self.masses >= ZERO_MASS, self.masses, 0.0) ** self.alpha
        self.pow_prev = np.concatenate(([0.0], np.cumsum(powered)[:-1]))
        # plain lists for the scalar path
        self._cum_list = self.cum.tolist()
        self._cum_prev_list = self.cum_prev.tolist()
        self._pow_prev_list = self.pow_prev.tolist()
        self._mass_list = self.masses.tolist()

    @classmethod
    def from_pmf(cls, p: Pmf, alpha: float) -> "RowProfile":
        return cls(p.probs, alpha)

    def breakpoints(self) -> np.ndarray:
        """Budgets at which the truncation index changes, including 0 and 1."""
        tails = 1.0 - np.concatenate(([0.0], self.cum))
        return np.unique(np.clip(np.append(tails, [0.0, 1.0]), 0.0, 1.0))

    def value(self, e: float) -> float:
        target = 1.0 - e
        k = min(bisect.bisect_left(self._cum_list, target - _CUM_TOL), len(self._cum_list) - 1)
        u = min(max(target - self._cum_prev_list[k], 0.0), self._mass_list[k])
        g = self._pow_prev_list[k] + (u ** self.alpha if u >= ZERO_MASS else 0.0)
        return g ** (1.0 / self.alpha)

    def values(self, e: np.ndarray) -> np.ndarray:
        target = 1.0 - np.asarray(e, dtype=float)
        k = np.minimum(np.searchsorted(self.cum, target - _CUM_TOL, side="left"),
                       self.masses.size - 1)
        u = np.clip(target - self.cum_prev[k], 0.0, self.masses[k])
        g = self.pow_prev[k] + np.where(u >= ZERO_MASS, u, 0.0) ** self.alpha
        return g ** (1.0 / self.alpha)


@dataclass
class AllocationResult:
    """Minimizer of sum_y P_Y(y) f_y(eps_y) under the budget constraint."""
    objective: float
    eps_y: np.ndarray
    method: str
    sweeps: int = 0
    exchange_gain: float = 0.0


# =============================================================================
# Solver
# =============================================================================

def objective(profiles: Sequence[RowProfile], p_y: np.ndarray, eps_y: Sequence[float]) -> float:
    return float(sum(w * prof.value(e) for w, prof, e in zip(p_y, profiles, eps_y)))


def minimize_allocation(profiles: Sequence[RowProfile], p_y: np.ndarray, eps: float,
                        settings: Settings = DEFAULT_SETTINGS) -> AllocationResult:
    """
    Minimize sum_y P_Y(y) f_y(eps_y) over eps_y in [0,1], sum P_Y eps_y = eps.

    Raises:
        OptimizerNotConverged: pairwise descent used up its sweep limit
    """
    p_y = np.asarray(p_y, dtype=float)
    m = len(profiles)
    if eps == 0.0:
        zeros = np.zeros(m)
        return AllocationResult(objective(profiles, p_y, zeros), zeros, "zero")
    if m == 1:
        e = np.array([min(eps / p_y[0], 1.0)])
        return AllocationResult(objective(profiles, p_y, e), e, "single")

    vertex_count = _vertex_count(profiles)
    use_vertices = vertex_count <= settings.vertex_limit
    starts = [np.full(m, eps)]
    if not use_vertices:
        starts += [_fill_in_order(p_y, eps, range(m)), _fill_in_order(p_y, eps, reversed(range(m)))]

    best: Optional[AllocationResult] = None
    for start in starts:
        result = _pairwise_descent(profiles, p_y, start, settings)
        if best is None or result.objective < best.objective:
            best = result

    if use_vertices:
        vertex = _vertex_search(profiles, p_y, eps)
        if vertex.objective < best.objective - settings.solver_gain:
            logger.debug("vertex scan improved descent: %.15g -> %.15g (%d vertices)",
                         best.objective, vertex.objective, vertex_count)
            vertex.sweeps = best.sweeps
            best = vertex
    return best


def _fill_in_order(p_y: np.ndarray, eps: float, order) -> np.ndarray:
    """Spend the budget by saturating rows one at a time."""
    e = np.zeros(p_y.size)
    remaining = eps
    for y in order:
        take = min(p_y[y], remaining)
        e[y] = min(take / p_y[y], 1.0)
        remaining -= take
        if remaining <= 0:
            break
    return e


def _pairwise_descent(profiles: Sequence[RowProfile], p_y: np.ndarray, start: np.ndarray,
                      settings: Settings) -> AllocationResult:
    e = start.astype(float).copy()
    m = len(profiles)
    for sweep in range(1, settings.solver_max_sweeps + 1):
        improved = False
        for a, b in itertools.combinations(range(m), 2):
            current = p_y[a] * profiles[a].value(e[a]) + p_y[b] * profiles[b].value(e[b])
            ea, eb, value = _pair_line_search(profiles[a], profiles[b], p_y[a], p_y[b], e[a], e[b])
            if current - value > settings.solver_gain:
                e[a], e[b] = ea, eb
                improved = True
        if improved:
            continue
        gain = exchange_gain(profiles, p_y, e, settings.solver_delta)
        if gain <= settings.solver_gain:
            return AllocationResult(objective(profiles, p_y, e), e, "descent",
                                    sweeps=sweep, exchange_gain=gain)

    gain = exchange_gain(profiles, p_y, e, settings.solver_delta)
    raise OptimizerNotConverged({
        "sweeps": settings.solver_max_sweeps,
        "exchange_gain": f"{gain:.3g}",
        "target": f"{settings.solver_gain:.3g}",
    })


def _pair_line_search(fa: RowProfile, fb: RowProfile, pa: float, pb: float,
                      ea: float, eb: float) -> Tuple[float, float, float]:
    """Best transfer s of joint budget from row b to row a."""
    s_lo = max(-ea * pa, (eb - 1.0) * pb)
    s_hi = min((1.0 - ea) * pa, eb * pb)

    def phi(s: float) -> float:
        return pa * fa.value(min(max(ea + s / pa, 0.0), 1.0)) + \
            pb * fb.value(min(max(eb - s / pb, 0.0), 1.0))

    if s_hi - s_lo <= 0.0:
        return ea, eb, phi(0.0)

    cands = np.concatenate((
        [s_lo, 0.0, s_hi],
        (fa.breakpoints() - ea) * pa,
        (eb - fb.breakpoints()) * pb,
    ))
    cands = np.unique(cands[(cands >= s_lo) & (cands <= s_hi)])
    scores = [phi(s) for s in cands]
    i = int(np.argmin(scores))
    best_s, best_v = float(cands[i]), scores[i]

    # golden-section polish on the two segments around the best breakpoint
    for lo, hi in ((cands[max(i - 1, 0)], best_s), (best_s, cands[min(i + 1, cands.size - 1)])):
        if hi - lo > 1e-12:
            res = minimize_scalar(phi, bounds=(lo, hi), method="bounded",
                                  options={"xatol": 1e-12})
            if res.fun < best_v:
                best_s, best_v = float(res.x), float(res.fun)

    new_a = min(max(ea + best_s / pa, 0.0), 1.0)
    new_b = min(max(eb - best_s / pb, 0.0), 1.0)
    return new_a, new_b, best_v


def exchange_gain(profiles: Sequence[RowProfile], p_y: np.ndarray, e: np.ndarray,
                  delta: float) -> float:
    """Largest decrease of the objective from moving delta of budget between two rows."""
    best = 0.0
    for a, b in itertools.permutations(range(len(profiles)), 2):
        ea, eb = e[a] + delta / p_y[a], e[b] - delta / p_y[b]
        if ea > 1.0 or eb < 0.0:
            continue
        before = p_y[a] * profiles[a].value(e[a]) + p_y[b] * profiles[b].value(e[b])
        after = p_y[a] * profiles[a].value(ea) + p_y[b] * profiles[b].value(eb)
        best = max(best, before - after)
    return best


def _vertex_count(profiles: Sequence[RowProfile]) -> int:
    sizes = [prof.breakpoints().size for prof in profiles]
    total = 0
    for y0 in range(len(sizes)):
        total += math.prod(s for y, s in enumerate(sizes) if y != y0)
    return total


def _vertex_search(profiles: Sequence[RowProfile], p_y: np.ndarray, eps: float) -> AllocationResult:
    """Scan allocations with every row but one at a breakpoint."""
    m = len(profiles)
    best_value = math.inf
    best_e = np.full(m, eps)
    for y0 in range(m):
        others = [y for y in range(m) if y != y0]
        grids = np.meshgrid(*[profiles[y].breakpoints() for y in others], indexing="ij")
        fixed = np.stack([g.ravel() for g in grids], axis=1)
        free = (eps - fixed @ p_y[others]) / p_y[y0]
        ok = (free >= -_FEASIBLE_TOL) & (free <= 1.0 + _FEASIBLE_TOL)
        if not np.any(ok):
            continue
        fixed, free = fixed[ok], np.clip(free[ok], 0.0, 1.0)
        total = p_y[y0] * profiles[y0].values(free)
        for col, y in enumerate(others):
            total = total + p_y[y] * profiles[y].values(fixed[:, col])
        i = int(np.argmin(total))
        if total[i] < best_value:
            best_value = float(total[i])
            best_e = np.empty(m)
            best_e[y0] = free[i]
            best_e[others] = fixed[i]
    return AllocationResult(best_value, best_e, "vertices")


# =============================================================================
# Dense grid reference
# =============================================================================

def feasible_allocations(p_y: np.ndarray, eps: float, knots: Sequence[np.ndarray],
                         step: float) -> np.ndarray:
    """
    Allocations on a grid of the free coordinates (|Y| <= 3).

    The grid is refined with every point where a coordinate sits on one of
    its knots, so piecewise functions with kinks there are scanned exactly
    at the kinks.

    Returns:
        Array of shape (count, |Y|)

    Raises:
        TooLargeForOracle: more than three rows or too many grid points
    """
    p_y = np.asarray(p_y, dtype=float)
    m = p_y.size
    if m > 3:
        raise TooLargeForOracle(f"Grid reference supports at most 3 rows, got {m}")
    if step <= 0:
        raise BadParameter(f"Grid step must be positive, got {step!r}")
    if m == 1:
        return np.array([[min(eps / p_y[0], 1.0)]])

    def candidates(lo: float, hi: float, extra: List[np.ndarray]) -> np.ndarray:
        pts = np.concatenate([np.arange(lo, hi, step), [lo, hi]] + extra)
        pts = pts[(pts >= lo - _FEASIBLE_TOL) & (pts <= hi + _FEASIBLE_TOL)]
        return np.unique(np.clip(pts, lo, hi))

    if m == 2:
        p1, p2 = p_y
        lo, hi = max(0.0, (eps - p2) / p1), min(1.0, eps / p1)
        e1 = candidates(lo, hi, [knots[0], (eps - p2 * knots[1]) / p1])
        e2 = np.clip((eps - p1 * e1) / p2, 0.0, 1.0)
        return np.stack([e1, e2], axis=1)

    p1, p2, p3 = p_y
    k2, k3 = np.meshgrid(knots[1], knots[2], indexing="ij")
    lo1, hi1 = max(0.0, (eps - p2 - p3) / p1), min(1.0, eps / p1)
    outer = candidates(lo1, hi1, [knots[0], ((eps - p2 * k2 - p3 * k3) / p1).ravel()])
    if outer.size * (1.0 / step + knots[1].size + knots[2].size) > _ORACLE_MAX_POINTS:
        raise TooLargeForOracle(f"Grid with step {step:g} is too dense for 3 rows")

    blocks = []
    for e1 in outer:
        r = eps - p1 * e1
        lo2, hi2 = max(0.0, (r - p3) / p2), min(1.0, r / p2)
        if hi2 < lo2:
            continue
        e2 = candidates(lo2, hi2, [knots[1], (r - p3 * knots[2]) / p2])
        e3 = np.clip((r - p2 * e2) / p3, 0.0, 1.0)
        blocks.append(np.stack([np.full(e2.size, e1), e2, e3], axis=1))
    return np.vstack(blocks)


# =============================================================================
# Public entropy functions
# =============================================================================

def _profiles(j: JointPmf, alpha: float) -> List[RowProfile]:
    return [RowProfile.from_pmf(row, alpha) for row in j.rows()]


def _to_bits(alpha: float, g: float) -> float:
    return alpha / (1.0 - alpha) * math.log2(g)


def kuzuoka_allocation(j: JointPmf, order: OrderLike, eps: float,
                       settings: Settings = DEFAULT_SETTINGS) -> Tuple[float, np.ndarray]:
    """
    Conditional smooth Renyi entropy H^eps_alpha(X|Y) and its allocation.

    Returns:
        (value in bits, eps_y per row of j)
    """
    eps = check_eps(eps)
    order = strict_order(order)
    if eps == 0.0:
        return arimoto_renyi_conditional(j, order), np.zeros(j.num_y)
    result = minimize_allocation(_profiles(j, order.alpha), j.p_y, eps, settings)
    return _to_bits(order.alpha, result.objective), result.eps_y


def kuzuoka_conditional_smooth(j: JointPmf, order: OrderLike, eps: float,
                               settings: Settings = DEFAULT_SETTINGS) -> float:
    """Kuzuoka's conditional smooth Renyi entropy H^eps_alpha(X|Y) in bits."""
    if j.num_y == 1 and check_eps(eps) > 0.0:
        return smooth_renyi(j.row(0), order, eps)
    return kuzuoka_allocation(j, order, eps, settings)[0]


def smooth_renyi_of_allocation(j: JointPmf, order: OrderLike, eps_y: Sequence[float]) -> float:
    """The objective of the conditional infimum at a given allocation, in bits."""
    order = strict_order(order)
    eps_y = np.asarray(eps_y, dtype=float)
    if eps_y.shape != (j.num_y,) or np.any(eps_y < 0) or np.any(eps_y > 1):
        raise BadParameter(f"Need {j.num_y} budgets in [0, 1], got {eps_y.tolist()}")
    return _to_bits(order.alpha, objective(_profiles(j, order.alpha), j.p_y, eps_y))


def kuzuoka_grid_oracle(j: JointPmf, order: OrderLike, eps: float, step: float = 1e-5) -> float:
    """Dense-grid reference for kuzuoka_conditional_smooth (|Y| <= 3)."""
    eps = check_eps(eps)
    order = strict_order(order)
    profiles = _profiles(j, order.alpha)
    grid = feasible_allocations(j.p_y, eps, [prof.breakpoints() for prof in profiles], step)
    total = np.zeros(grid.shape[0])
    for col, (w, prof) in enumerate(zip(j.p_y, profiles)):
        total += w * prof.values(grid[:, col])
    return _to_bits(order.alpha, float(total.min()))
