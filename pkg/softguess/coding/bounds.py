"""
Upper and lower bounds on the optimal normalized cumulant Lambda*.
"""

import logging
import math
from dataclasses import dataclass, asdict
from typing import Dict, Tuple

from ..core.pmf import Pmf, check_eps, check_rho, list_size, z_variable
from ..entropy.renyi import EntropyOrder, renyi
from ..errors import SandwichViolation
from ..guessing.bounds import explicit_bounds, list_index_bounds
from .code import SANDWICH_TOL, build_optimal_code, cumulant_length

logger = logging.getLogger("SOFTGUESS.coding.bounds")


@dataclass(frozen=True)
class CumulantBounds:
    """Lambda* with list-index and explicit bounds, all in bits."""
    lambda_star: float
    z_upper: float
    explicit_upper: float
    z_lower: float
    explicit_lower: float
    rho: float
    D: float
    eps: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def check(self, tol: float = SANDWICH_TOL) -> "CumulantBounds":
        lam = self.lambda_star
        slack = tol * max(1.0, abs(lam))
        if not (self.z_lower < lam <= self.z_upper + slack):
            raise SandwichViolation("cumulant list-index bounds", self.z_lower, lam, self.z_upper)
        if not (self.explicit_lower < lam <= self.explicit_upper + slack):
            raise SandwichViolation("cumulant explicit bounds",
                                    self.explicit_lower, lam, self.explicit_upper)
        return self


def zero_error_upper_bounds(p: Pmf, rho: float, D: float) -> Tuple[float, float]:
    """
    The two eps = 0 upper bounds on Lambda*.

    new = H_{1/(1+rho)}(Z); old = (1/rho) log2(1 + 2^rho 2^(rho H_{1/(1+rho)}(X) - rho log2 L)).
    The old one grows without bound as rho -> 0.
    """
    rho = check_rho(rho)
    L = list_size(D)
    order = EntropyOrder.for_moment(rho)
    new = renyi(z_variable(p, L), order)
    exponent = rho * renyi(p, order) - rho * math.log2(L)
    old = math.log2(1.0 + 2.0 ** rho * 2.0 ** exponent) / rho
    return new, old


def cumulant_bounds(p: Pmf, rho: float, D: float, eps: float) -> CumulantBounds:
    """
    Bounds on Lambda* for any eps in [0, 1).

    Upper: (1/rho) log2(U + eps) with U either guessing-moment upper bound.
    Lower: (1/rho) log2(2^-rho W + eps) with W either guessing-moment lower bound.
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    z_up, z_low = list_index_bounds(p, rho, D, eps)
    x_up, x_low = explicit_bounds(p, rho, D, eps)
    lam = cumulant_length(build_optimal_code(p, D, eps), p, rho)

    def to_cumulant(moment: float, shrink: bool) -> float:
        scale = 2.0 ** (-rho) if shrink else 1.0
        return math.log2(scale * moment + eps) / rho

    return CumulantBounds(
        lambda_star=lam,
        z_upper=to_cumulant(z_up, False),
        explicit_upper=to_cumulant(x_up, False),
        z_lower=to_cumulant(z_low, True),
        explicit_lower=to_cumulant(x_low, True),
        rho=rho, D=float(D), eps=eps,
    )
