"""
Exact block computations for i.i.d. sources and their large-n expansions.

The block pmf is kept as runs of equal probabilities, so list masses are
read off the cumulative mass F(k) of the first k atoms. F is linear inside
a run; a list of L_n atoms may straddle run boundaries without the atoms
ever being materialized.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from typing import Dict, List, Sequence

import numpy as np

from ..coding.code import cumulant_of_list_masses
from ..config import MAX_WORKERS, RUN_BUDGET, ZERO_MASS
from ..core.pmf import (
    JointPmf, Pmf, RunLengthPmf, check_eps, check_rho, iid_extension,
    iid_joint_extension, list_size, truncate
)
from ..entropy.renyi import (
    EntropyOrder, conditional_shannon, renyi_of_masses, shannon, source_stats
)
from ..errors import BadParameter, DistortionAboveEntropy, NegativeDistortion, TooLarge
from ..guessing.bounds import BoundsReport, converse_factor, explicit_from_entropy
from ..guessing.side_info import conditional_min_moment
from ..guessing.strategy import moment_of_list_masses
from .quantile import gaussian_quantile

logger = logging.getLogger("SOFTGUESS.asymptotics")

EXPANSION_KINDS = ("moment", "cumulant")
EXPANSION_COLUMNS = ("n", "exact_per_symbol", "predicted", "residual")

# Side-information blocks are built cell by cell
SIDE_INFO_MAX_N = 6


@dataclass(frozen=True)
class ExpansionReport:
    """Exact per-symbol value at block length n against the expansion."""
    n: int
    exact: float
    predicted: float
    residual: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def as_row(self) -> tuple:
        return (self.n, self.exact, self.predicted, self.residual)


# =============================================================================
# Run-wise block quantities
# =============================================================================

def block_list_size(n: int, D: float, atoms: int) -> int:
    """
    L_n = floor(2^(nD)), capped at the block alphabet size.

    Once 2^(nD) covers the whole alphabet the cap is returned directly, so
    2^(nD) is never formed for large nD.
    """
    if D < 0:
        raise NegativeDistortion(f"Distortion must be >= 0, got {D!r}")
    exponent = n * float(D)
    if exponent >= math.log2(atoms):
        return int(atoms)
    return min(list_size(exponent), int(atoms))


def run_list_masses(runs: RunLengthPmf, L: int, budget: int = RUN_BUDGET) -> np.ndarray:
    """Masses of the size-L lists of a run-length pmf."""
    counts = np.asarray(runs.counts, dtype=np.int64)
    edges = np.concatenate(([0], np.cumsum(counts)))
    cum_mass = np.concatenate(([0.0], np.cumsum(runs.values * counts)))
    atoms = int(edges[-1])
    n_lists = -(-atoms // L)
    if n_lists > budget:
        raise TooLarge(n_lists, budget, what="lists")
    cuts = np.append(np.arange(0, atoms, L, dtype=np.int64), atoms)
    masses = np.diff(np.interp(cuts, edges, cum_mass))
    return np.minimum.accumulate(np.maximum(masses, 0.0))


def _block(base: Pmf, n: int, D: float, budget: int):
    runs = iid_extension(base, n, budget)
    L = block_list_size(n, D, runs.total_atoms)
    return runs, L, run_list_masses(runs, L, budget)


def smooth_renyi_of_runs(runs: RunLengthPmf, order: EntropyOrder, eps: float) -> float:
    """
    H^eps_alpha of a run-length pmf.

    The truncation keeps whole runs, then whole atoms of the boundary run,
    then one partial atom.
    """
    eps = check_eps(eps)
    values = runs.values
    counts = np.asarray(runs.counts, dtype=float)
    if order.is_shannon:
        return float(-np.sum(counts * values * np.log2(values)))
    a = order.alpha
    powered = counts * values ** a
    if eps == 0.0:
        return math.log2(float(powered.sum())) / (1.0 - a)

    target = 1.0 - eps
    cum = np.cumsum(values * counts)
    r = min(int(np.searchsorted(cum, target - 1e-12, side="left")), values.size - 1)
    prev = float(cum[r - 1]) if r > 0 else 0.0
    remaining = max(target - prev, 0.0)
    v = float(values[r])
    whole = min(math.floor(remaining / v), runs.counts[r])
    partial = remaining - whole * v
    power = float(powered[:r].sum()) + whole * v ** a
    if partial >= ZERO_MASS:
        power += partial ** a
    return math.log2(power) / (1.0 - a)


def exact_block_moment(base: Pmf, n: int, rho: float, D: float, eps: float,
                       budget: int = RUN_BUDGET) -> float:
    """M*(rho, D, eps) of the n-fold block, lists of size floor(2^(nD))."""
    rho = check_rho(rho)
    eps = check_eps(eps)
    _, _, z = _block(base, n, D, budget)
    return moment_of_list_masses(z, rho, eps)


def exact_block_cumulant(base: Pmf, n: int, rho: float, D: float, eps: float,
                         budget: int = RUN_BUDGET) -> float:
    """Lambda* of the n-fold block."""
    rho = check_rho(rho)
    eps = check_eps(eps)
    _, _, z = _block(base, n, D, budget)
    return cumulant_of_list_masses(z, rho, eps)


def block_bounds(base: Pmf, n: int, rho: float, D: float, eps: float,
                 budget: int = RUN_BUDGET) -> BoundsReport:
    """List-index and explicit bounds on the block moment, with its exact value."""
    rho = check_rho(rho)
    eps = check_eps(eps)
    runs, L, z = _block(base, n, D, budget)
    order = EntropyOrder.for_moment(rho)
    exact = moment_of_list_masses(z, rho, eps)

    _, q_z = truncate(z, eps)
    z_upper = 2.0 ** (rho * renyi_of_masses(q_z, order.alpha))
    factor = converse_factor(runs.total_atoms, rho)
    h = smooth_renyi_of_runs(runs, order, eps)
    explicit_upper, explicit_lower = explicit_from_entropy(h, rho, eps, L, runs.total_atoms)
    return BoundsReport(exact=exact, z_upper=z_upper, z_lower=factor * z_upper,
                        explicit_upper=explicit_upper, explicit_lower=explicit_lower,
                        rho=rho, D=float(D), eps=eps)


# =============================================================================
# Expansions
# =============================================================================

def max_distortion(p: Pmf) -> float:
    """H(X): above it a single reconstruction covers the block asymptotically."""
    return shannon(p)


def _check_below_entropy(D: float, h: float, what: str = "H(X)") -> None:
    if D < 0:
        raise NegativeDistortion(f"Distortion must be >= 0, got {D!r}")
    if D >= h:
        raise DistortionAboveEntropy(
            f"D={D:g} must lie in [0, {what}={h:.6g}) for a positive exponent"
        )


def guessing_exponent(base: Pmf, rho: float, D: float) -> float:
    """rho (H(X) - D), the limit of (1/n) log2 M* of the block."""
    rho = check_rho(rho)
    h = shannon(base)
    _check_below_entropy(D, h)
    return rho * (h - D)


def _second_order(base: Pmf, n: int, D: float, eps: float) -> float:
    """H - D - sqrt(V/n) Phi^-1(eps)."""
    stats = source_stats(base)
    _check_below_entropy(D, stats.h)
    return stats.h - D - math.sqrt(stats.v / n) * gaussian_quantile(eps)


def expansion_moment(base: Pmf, n: int, rho: float, D: float, eps: float,
                     budget: int = RUN_BUDGET) -> ExpansionReport:
    """(1/n) log2 M* of the block against rho (H - D - sqrt(V/n) Phi^-1(eps))."""
    rho = check_rho(rho)
    predicted = rho * _second_order(base, n, D, eps)
    exact = math.log2(exact_block_moment(base, n, rho, D, eps, budget)) / n
    return ExpansionReport(n=n, exact=exact, predicted=predicted, residual=exact - predicted)


def expansion_cumulant(base: Pmf, n: int, rho: float, D: float, eps: float,
                       budget: int = RUN_BUDGET) -> ExpansionReport:
    """(1/n) Lambda* of the block against H - D - sqrt(V/n) Phi^-1(eps)."""
    rho = check_rho(rho)
    predicted = _second_order(base, n, D, eps)
    exact = exact_block_cumulant(base, n, rho, D, eps, budget) / n
    return ExpansionReport(n=n, exact=exact, predicted=predicted, residual=exact - predicted)


def expansion_side_info(joint: JointPmf, n: int, rho: float, D: float, eps: float,
                        budget: int = RUN_BUDGET) -> ExpansionReport:
    """
    (1/n) log2 M* with side information against rho (H(X|Y) - D).

    First order only; blocks are built explicitly, hence n <= SIDE_INFO_MAX_N.
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    if n > SIDE_INFO_MAX_N:
        raise BadParameter(f"Side-information blocks support n <= {SIDE_INFO_MAX_N}, got {n}")
    h = conditional_shannon(joint)
    _check_below_entropy(D, h, "H(X|Y)")
    block = iid_joint_extension(joint, n, budget)
    value, _ = conditional_min_moment(block, rho, n * D, eps)
    exact = math.log2(value) / n
    predicted = rho * (h - D)
    return ExpansionReport(n=n, exact=exact, predicted=predicted, residual=exact - predicted)


def expansion_table(base: Pmf, ns: Sequence[int], rho: float, D: float, eps: float,
                    kind: str = "moment", budget: int = RUN_BUDGET,
                    max_workers: int = MAX_WORKERS) -> List[ExpansionReport]:
    """One report per block length, in the order of ``ns``."""
    if kind not in EXPANSION_KINDS:
        raise BadParameter(f"Unknown expansion kind '{kind}'. Expected one of {EXPANSION_KINDS}")
    fn = expansion_moment if kind == "moment" else expansion_cumulant
    # fail on the parameters before the pool starts
    _second_order(base, 1, D, eps)

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        reports = list(executor.map(lambda n: fn(base, int(n), rho, D, eps, budget), ns))
    logger.debug("%s expansion over n=%s", kind, list(ns))
    return reports
