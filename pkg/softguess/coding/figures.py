"""
Zero-error cumulant bounds over a rho grid for six reference sources.

Case 1 uses ten symbols with D = 2, case 2 fifty symbols with D = 4;
(a) is dyadic, (b) uniform and (c) a seeded random pmf.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import MAX_WORKERS
from ..core.pmf import Pmf, dyadic, random_pmf, uniform
from ..errors import BadParameter
from .bounds import zero_error_upper_bounds
from .code import build_optimal_code, cumulant_length

logger = logging.getLogger("SOFTGUESS.coding.figures")

DEFAULT_SEED = 2024
DEFAULT_RHO_GRID = np.linspace(0.1, 10.0, 100)
FIGURE_COLUMNS = ("rho", "new_upper", "old_upper", "lambda_exact")


@dataclass(frozen=True)
class FigureCase:
    name: str
    source: Callable[[int], Pmf]
    D: float


FIGURE_CASES: Dict[str, FigureCase] = {
    "1a": FigureCase("1a", lambda seed: dyadic(10), 2.0),
    "1b": FigureCase("1b", lambda seed: uniform(10), 2.0),
    "1c": FigureCase("1c", lambda seed: random_pmf(10, seed), 2.0),
    "2a": FigureCase("2a", lambda seed: dyadic(50), 4.0),
    "2b": FigureCase("2b", lambda seed: uniform(50), 4.0),
    "2c": FigureCase("2c", lambda seed: random_pmf(50, seed), 4.0),
}


@dataclass(frozen=True)
class FigureRow:
    rho: float
    new_upper: float
    old_upper: float
    lambda_exact: float

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.rho, self.new_upper, self.old_upper, self.lambda_exact)


def case_source(case: str, seed: int = DEFAULT_SEED) -> Tuple[Pmf, float]:
    """(pmf, D) of a named case."""
    spec = FIGURE_CASES.get(case)
    if spec is None:
        raise BadParameter(f"Unknown case '{case}'. Expected one of {sorted(FIGURE_CASES)}")
    return spec.source(seed), spec.D


def figure_data(case: str, rho_grid: Optional[Sequence[float]] = None,
                seed: int = DEFAULT_SEED, max_workers: int = MAX_WORKERS) -> List[FigureRow]:
    """
    Rows (rho, new bound, old bound, exact Lambda*) at eps = 0.

    Grid points are evaluated in a thread pool; rows come back in grid order.
    """
    p, D = case_source(case, seed)
    grid = [float(r) for r in (DEFAULT_RHO_GRID if rho_grid is None else rho_grid)]
    code = build_optimal_code(p, D, 0.0)

    def evaluate(rho: float) -> FigureRow:
        new, old = zero_error_upper_bounds(p, rho, D)
        return FigureRow(rho=rho, new_upper=new, old_upper=old,
                         lambda_exact=cumulant_length(code, p, rho))

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        rows = list(executor.map(evaluate, grid))

    logger.debug("case %s: %d grid points", case, len(rows))
    return rows
