"""
One-shot bounds on the minimal soft guessing moment.

Two pairs are available. The list-index pair is driven by the smooth Renyi
entropy of Z = ceil(X/L) and is tight up to the factor
(1 + log2|X|)^(-rho). The explicit pair only needs the smooth Renyi entropy
of X itself and the list size.
"""

import logging
import math
from dataclasses import dataclass, asdict
from typing import Dict, Tuple

from ..core.pmf import Pmf, check_eps, check_rho, list_size, z_variable
from ..entropy.renyi import EntropyOrder, smooth_renyi
from ..errors import SandwichViolation
from .strategy import min_moment

logger = logging.getLogger("SOFTGUESS.guessing.bounds")

SANDWICH_TOL = 1e-9


def converse_factor(alphabet_size: int, rho: float) -> float:
    """(1 + log2|X|)^(-rho)."""
    return (1.0 + math.log2(alphabet_size)) ** (-rho)


def explicit_from_entropy(h: float, rho: float, eps: float, L: int,
                          alphabet_size: int) -> Tuple[float, float]:
    """Explicit (upper, lower) pair from a smooth entropy value h in bits."""
    scaled = 2.0 ** (rho * h - rho * math.log2(L))
    if L == 1:
        upper = 2.0 ** (rho * h)
    else:
        upper = 1.0 - eps + 2.0 ** rho * scaled
    return upper, converse_factor(alphabet_size, rho) * scaled


@dataclass(frozen=True)
class BoundsReport:
    """Exact minimal moment with the list-index and explicit bound pairs."""
    exact: float
    z_upper: float
    z_lower: float
    explicit_upper: float
    explicit_lower: float
    rho: float
    D: float
    eps: float
    side_information: bool = False

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def check(self, tol: float = SANDWICH_TOL) -> "BoundsReport":
        """Raise SandwichViolation unless both pairs enclose the exact value."""
        label = "side-information" if self.side_information else "unconditional"
        scale = max(1.0, abs(self.exact))
        if not (self.z_lower - tol * scale <= self.exact <= self.z_upper + tol * scale):
            raise SandwichViolation(f"{label} list-index bounds",
                                    self.z_lower, self.exact, self.z_upper)
        if not (self.explicit_lower - tol * scale <= self.exact <= self.explicit_upper + tol * scale):
            raise SandwichViolation(f"{label} explicit bounds",
                                    self.explicit_lower, self.exact, self.explicit_upper)
        return self


def list_index_bounds(p: Pmf, rho: float, D: float, eps: float) -> Tuple[float, float]:
    """
    Bounds through the list index Z.

    upper = 2^(rho H^eps_{1/(1+rho)}(Z)), lower = (1 + log2|X|)^(-rho) upper.
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    z = z_variable(p, list_size(D))
    upper = 2.0 ** (rho * smooth_renyi(z, EntropyOrder.for_moment(rho), eps))
    return upper, converse_factor(p.size, rho) * upper


def explicit_bounds(p: Pmf, rho: float, D: float, eps: float) -> Tuple[float, float]:
    """
    Bounds from H^eps_{1/(1+rho)}(X) and L.

    upper = 1 - eps + 2^rho 2^(rho H - rho log2 L), or 2^(rho H) when L = 1;
    lower = (1 + log2|X|)^(-rho) 2^(rho H - rho log2 L).
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    h = smooth_renyi(p, EntropyOrder.for_moment(rho), eps)
    return explicit_from_entropy(h, rho, eps, list_size(D), p.size)


def in_comparison_regime(L: int) -> bool:
    """Whether the list-index upper bound is known to beat the explicit one."""
    return L <= 2


def compare_upper_bounds(p: Pmf, rho: float, D: float, eps: float,
                         tol: float = SANDWICH_TOL) -> Tuple[float, float, bool]:
    """
    Both upper bounds and whether the list-index one is at most the explicit one.

    For L > 2 the outcome is only logged.
    """
    z_bound, _ = list_index_bounds(p, rho, D, eps)
    explicit_bound, _ = explicit_bounds(p, rho, D, eps)
    z_tighter = z_bound <= explicit_bound + tol * max(1.0, explicit_bound)
    L = list_size(D)
    if not in_comparison_regime(L):
        logger.info("comparison outside proven regime (L=%d, rho=%g, eps=%g): "
                    "list-index %.12g vs explicit %.12g, tighter=%s",
                    L, rho, eps, z_bound, explicit_bound, z_tighter)
    return z_bound, explicit_bound, z_tighter


def bounds_report(p: Pmf, rho: float, D: float, eps: float) -> BoundsReport:
    exact = min_moment(p, rho, D, eps).moment
    z_upper, z_lower = list_index_bounds(p, rho, D, eps)
    explicit_upper, explicit_lower = explicit_bounds(p, rho, D, eps)
    return BoundsReport(exact=exact, z_upper=z_upper, z_lower=z_lower,
                        explicit_upper=explicit_upper, explicit_lower=explicit_lower,
                        rho=float(rho), D=float(D), eps=float(eps))
