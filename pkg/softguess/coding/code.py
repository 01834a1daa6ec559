"""
Optimal variable-length lossy code under log-loss allowing errors.

The sorted alphabet is cut into lists of L = floor(2^D) symbols. List l is
sent as the l-th binary string in lexicographic order (empty string first),
so its length is floor(log2 l), and decoded to the uniform distribution on
that list. Lists after the cutoff l* are sent as the empty string and
decoded wrongly; the cutoff list itself is sent that way with probability
alpha, chosen so the excess-distortion probability is exactly eps.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..core.pmf import (
    Pmf, check_eps, check_rho, list_masses, list_size, smooth_truncation, truncate
)
from ..errors import BadParameter, PropertyViolation, SandwichViolation
from ..guessing.strategy import min_moment

logger = logging.getLogger("SOFTGUESS.coding")

_CLAMP_DRIFT = 1e-12
SANDWICH_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class VlCode:
    """
    Codeword lengths per list, randomization weight and cutoff list.

    ``lengths[l-1]`` is floor(log2 l) for list l (1-based).
    """
    lengths: np.ndarray
    alpha: float
    l_star: int
    L: int
    eps: float

    @property
    def n_lists(self) -> int:
        return int(self.lengths.size)

    def list_members(self, l: int, size: int) -> Tuple[int, ...]:
        """1-based symbols decoded from list l (the reconstruction's support)."""
        return tuple(range((l - 1) * self.L + 1, min(l * self.L, size) + 1))


@dataclass(frozen=True)
class CumulantReport:
    """Normalized cumulant generating function of the optimal code and its sandwich."""
    lambda_star: float
    rho: float
    D: float
    eps: float
    moment: float
    strict_lower: float
    upper: float


# =============================================================================
# Codewords
# =============================================================================

def codeword_length(l: int) -> int:
    """floor(log2 l) for a 1-based list index."""
    return int(l).bit_length() - 1


def codeword_for_list(l: int) -> str:
    """The l-th binary string in lexicographic order: '', '0', '1', '00', ..."""
    if l < 1:
        raise BadParameter(f"List index must be >= 1, got {l}")
    return bin(l)[3:]


def codeword_lengths(count: int) -> np.ndarray:
    """floor(log2 l) for l = 1..count."""
    return np.frexp(np.arange(1, count + 1, dtype=float))[1].astype(int) - 1


def codeword_strings(count: int) -> List[str]:
    """The first ``count`` strings of {0,1}* in lexicographic order."""
    out: List[str] = []
    for length in itertools.count():
        for bits in itertools.product("01", repeat=length):
            if len(out) == count:
                return out
            out.append("".join(bits))
    return out


# =============================================================================
# Construction and evaluation
# =============================================================================

def build_optimal_code(p: Pmf, D: float, eps: float) -> VlCode:
    """
    Build the optimal code for excess-distortion probability eps.

    l* is the list holding the eps-truncation boundary of X; alpha solves
    eps = alpha P_Z(l*) + sum_{l > l*} P_Z(l).
    """
    eps = check_eps(eps)
    L = list_size(D)
    p_z = list_masses(p.probs, L)
    l_star = math.ceil(smooth_truncation(p, eps).i_star / L)

    tail = float(p_z[l_star:].sum())
    raw = (eps - tail) / float(p_z[l_star - 1])
    alpha = min(max(raw, 0.0), 1.0)
    drift = abs(raw - alpha)
    if drift > 1e-15:
        logger.debug("alpha clamped from %.17g (drift %.3g)", raw, drift)
    if drift >= _CLAMP_DRIFT:
        raise PropertyViolation(f"Randomization weight {raw!r} drifted outside [0, 1]")

    return VlCode(lengths=codeword_lengths(p_z.size), alpha=alpha, l_star=l_star, L=L, eps=eps)


def build_list_index_code(p_z: Pmf, eps: float) -> VlCode:
    """Code for the list index itself (zero distortion)."""
    return build_optimal_code(p_z, 0.0, eps)


def _masses_for(code: VlCode, p: Pmf) -> np.ndarray:
    p_z = list_masses(p.probs, code.L)
    if p_z.size != code.n_lists:
        raise BadParameter(f"Code has {code.n_lists} lists, pmf gives {p_z.size}")
    return p_z


def _encoded_masses(code: VlCode, p_z: np.ndarray) -> np.ndarray:
    """Probability that list l is sent with its own codeword."""
    sent = np.zeros(code.n_lists)
    sent[:code.l_star - 1] = p_z[:code.l_star - 1]
    sent[code.l_star - 1] = (1.0 - code.alpha) * p_z[code.l_star - 1]
    return sent


def excess_distortion_prob(code: VlCode, p: Pmf, D: float) -> float:
    """P[log-loss of the decoded reconstruction > D] = alpha P_Z(l*) + tail."""
    if list_size(D) != code.L:
        raise BadParameter(f"Code was built for L={code.L}, D={D:g} gives L={list_size(D)}")
    p_z = _masses_for(code, p)
    return float(code.alpha * p_z[code.l_star - 1] + p_z[code.l_star:].sum())


def cumulant_length(code: VlCode, p: Pmf, rho: float) -> float:
    """(1/rho) log2 E[2^(rho len)], the excess mass contributing 2^0."""
    rho = check_rho(rho)
    p_z = _masses_for(code, p)
    sent = _encoded_masses(code, p_z)
    missed = float(p_z.sum() - sent.sum())
    total = float(np.dot(sent, np.exp2(rho * code.lengths))) + missed
    return math.log2(total) / rho


def cumulant_of_list_masses(z_masses: np.ndarray, rho: float, eps: float) -> float:
    """
    Lambda* straight from descending list masses.

    The cutoff list is where the eps-truncation of Z ends, so the sent
    masses are Q^eps_Z and the excess eps is sent as the empty string.
    """
    rho = check_rho(rho)
    i_z, q_z = truncate(z_masses, eps)
    missed = max(float(z_masses.sum() - q_z.sum()), 0.0)
    total = float(np.dot(q_z, np.exp2(rho * codeword_lengths(i_z)))) + missed
    return math.log2(total) / rho


def expected_length(code: VlCode, p: Pmf) -> float:
    """E[len], the rho -> 0 limit of cumulant_length."""
    sent = _encoded_masses(code, _masses_for(code, p))
    return float(np.dot(sent, code.lengths))


def max_length(code: VlCode, p: Pmf) -> int:
    """Longest codeword sent with positive probability, the rho -> infinity limit."""
    sent = _encoded_masses(code, _masses_for(code, p))
    used = np.nonzero(sent > 0)[0]
    return int(code.lengths[used].max()) if used.size else 0


def cumulant_sandwich(p: Pmf, rho: float, D: float, eps: float,
                      tol: float = SANDWICH_TOL) -> CumulantReport:
    """
    Optimal cumulant against the minimal guessing moment M*.

    (1/rho) log2(2^-rho M* + eps) < Lambda* <= (1/rho) log2(M* + eps)

    Raises:
        SandwichViolation: either side fails
    """
    rho = check_rho(rho)
    eps = check_eps(eps)
    moment = min_moment(p, rho, D, eps).moment
    lam = cumulant_length(build_optimal_code(p, D, eps), p, rho)
    lower = math.log2(2.0 ** (-rho) * moment + eps) / rho
    upper = math.log2(moment + eps) / rho
    if not (lower < lam <= upper + tol * max(1.0, abs(upper))):
        raise SandwichViolation("cumulant vs guessing moment", lower, lam, upper)
    return CumulantReport(lambda_star=lam, rho=rho, D=float(D), eps=eps, moment=moment,
                          strict_lower=lower, upper=upper)
