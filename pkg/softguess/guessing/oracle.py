"""
Brute-force reference for the minimal soft guessing moment.

Every ordered partition of the alphabet into cells of at most L symbols is
tried. A reconstruction can only cover more than L symbols at log-loss D
if it is not uniform on them, so cells of size <= L lose nothing.

For fixed cells the best give-up schedule is greedy: survive with
probability 1 through the first k cells, fractionally through cell k+1,
and give up afterwards, with total success mass exactly 1 - eps. The cost
per unit of success mass in cell i is i^rho, which grows with i, so moving
success mass to an earlier cell never increases the moment.
"""

import logging
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from ..config import ORACLE_MAX_ATOMS
from ..core.pmf import Pmf, check_eps, check_rho, list_size
from ..errors import TooLargeForOracle
from .strategy import SoftStrategy, guess_weights

logger = logging.getLogger("SOFTGUESS.guessing.oracle")

Cells = Tuple[Tuple[int, ...], ...]


def enumerate_strategies(size: int, L: int) -> Iterator[Cells]:
    """Ordered partitions of {1..size} into cells of size <= L."""

    def extend(remaining: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
        if not remaining:
            yield []
            return
        n = len(remaining)
        for mask in range(1, 1 << n):
            cell = tuple(remaining[i] for i in range(n) if mask >> i & 1)
            if len(cell) > L:
                continue
            rest = tuple(remaining[i] for i in range(n) if not mask >> i & 1)
            for tail in extend(rest):
                yield [cell] + tail

    for cells in extend(tuple(range(1, size + 1))):
        yield tuple(cells)


@lru_cache(maxsize=32)
def _partitions(size: int, L: int) -> Tuple[Cells, ...]:
    return tuple(enumerate_strategies(size, L))


def greedy_survival(masses: Sequence[float], eps: float) -> np.ndarray:
    """Survival probabilities that spend success mass 1 - eps front to back."""
    lam = np.zeros(len(masses))
    remaining = 1.0 - eps
    for i, m in enumerate(masses):
        if remaining <= 0.0:
            break
        take = min(m, remaining)
        lam[i] = take / m
        remaining -= take
    return lam


def competitor_strategy(cells: Cells, p: Pmf, eps: float) -> SoftStrategy:
    """Strategy on the given cells with the greedy give-up schedule."""
    masses = [float(p.probs[np.asarray(c) - 1].sum()) for c in cells]
    lam = greedy_survival(masses, eps)
    prev = np.concatenate(([1.0], lam[:-1]))
    with np.errstate(divide="ignore", invalid="ignore"):
        pi = np.where(prev > 0, 1.0 - lam / prev, 1.0)
    cutoff = int(np.argmax(pi > 0)) + 1 if np.any(pi > 0) else len(cells)
    return SoftStrategy(lists=cells, pi=pi, lam=lam,
                        L=max(len(c) for c in cells), cutoff=cutoff)


def brute_force_min_moment(p: Pmf, rho: float, D: float, eps: float,
                           max_atoms: int = ORACLE_MAX_ATOMS) -> float:
    """
    Minimal moment by exhaustive search over list partitions.

    Raises:
        TooLargeForOracle: alphabet larger than max_atoms
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    if p.size > max_atoms:
        raise TooLargeForOracle(
            f"Brute force handles at most {max_atoms} atoms, got {p.size}"
        )
    L = list_size(D)
    weights = guess_weights(p.size, rho)
    probs = p.probs

    best = np.inf
    count = 0
    for cells in _partitions(p.size, L):
        count += 1
        remaining = 1.0 - eps
        value = 0.0
        for i, cell in enumerate(cells):
            if remaining <= 0.0:
                break
            take = min(float(probs[np.asarray(cell) - 1].sum()), remaining)
            value += take * weights[i]
            remaining -= take
        best = min(best, value)

    logger.debug("brute force scanned %d partitions (|X|=%d, L=%d)", count, p.size, L)
    return float(best)
