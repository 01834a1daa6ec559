"""
Probability mass functions - validated values, generators and the list index.

A Pmf is always sorted in descending order with zero atoms removed, so
index i (0-based here, 1-based in reports) is the i-th most likely symbol.
JointPmf keeps the side-information symbol on the rows and the source
symbol on the columns.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from math import factorial
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_ATOL, RUN_BUDGET, SNAP_WINDOW
from ..errors import (
    BadParameter, EmptyInput, NegativeDistortion, NotNormalized, TooLarge
)

logger = logging.getLogger("SOFTGUESS.pmf")

# Cumulative sums within this of the target count as reaching it
_CUM_TOL = 1e-12


# =============================================================================
# Parameter checks shared by every module
# =============================================================================

def check_eps(eps: float, allow_one: bool = False) -> float:
    """Validate an error budget: 0 <= eps < 1 (or <= 1 with allow_one)."""
    eps = float(eps)
    upper_ok = eps <= 1.0 if allow_one else eps < 1.0
    if not (math.isfinite(eps) and eps >= 0.0 and upper_ok):
        bound = "1]" if allow_one else "1)"
        raise BadParameter(f"eps must lie in [0, {bound}, got {eps!r}")
    return eps


def check_rho(rho: float) -> float:
    """Validate a moment order: rho > 0 and finite."""
    rho = float(rho)
    if not (math.isfinite(rho) and rho > 0.0):
        raise BadParameter(f"rho must be a positive real, got {rho!r}")
    return rho


# =============================================================================
# Types
# =============================================================================

@dataclass(frozen=True, eq=False)
class Pmf:
    """Descending, strictly positive probability vector."""
    probs: np.ndarray
    atol: float = DEFAULT_ATOL

    def __post_init__(self):
        self.probs.setflags(write=False)

    def __len__(self) -> int:
        return int(self.probs.size)

    @property
    def size(self) -> int:
        return int(self.probs.size)

    def cumulative(self) -> np.ndarray:
        return np.cumsum(self.probs)

    def tolist(self) -> List[float]:
        return self.probs.tolist()


@dataclass(frozen=True, eq=False)
class JointPmf:
    """Joint pmf P_{X,Y}; row y holds the masses P_{X,Y}(., y)."""
    matrix: np.ndarray
    atol: float = DEFAULT_ATOL

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def num_x(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def num_y(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def p_y(self) -> np.ndarray:
        return self.matrix.sum(axis=1)

    def p_x(self) -> Pmf:
        """Marginal of X as a sorted Pmf."""
        return make_pmf(self.matrix.sum(axis=0), self.atol)

    def row(self, y: int) -> Pmf:
        """Conditional pmf P_{X|Y=y}, sorted."""
        masses = self.matrix[y]
        return make_pmf(masses / masses.sum(), self.atol)

    def rows(self) -> List[Pmf]:
        return [self.row(y) for y in range(self.num_y)]

    def flatten(self) -> Pmf:
        """The pair (X, Y) viewed as a single random variable."""
        return make_pmf(self.matrix.ravel(), self.atol)


@dataclass(frozen=True)
class SmoothTruncation:
    """The eps-truncated sub-distribution Q^eps: first i_star masses."""
    i_star: int
    q: np.ndarray

    @property
    def mass(self) -> float:
        return float(self.q.sum())


@dataclass(frozen=True, eq=False)
class RunLengthPmf:
    """
    Sorted pmf stored as runs of identical probabilities.

    ``counts`` are Python ints so multiplicities beyond 2**53 stay exact.
    """
    values: np.ndarray
    counts: Tuple[int, ...]

    @property
    def num_runs(self) -> int:
        return len(self.counts)

    @property
    def total_atoms(self) -> int:
        return sum(self.counts)

    def mass(self) -> float:
        return float(sum(v * c for v, c in zip(self.values.tolist(), self.counts)))


# =============================================================================
# Construction
# =============================================================================

def make_pmf(raw: Iterable[float], atol: float = DEFAULT_ATOL) -> Pmf:
    """
    Validate a probability vector and bring it to canonical form.

    Args:
        raw: Nonnegative masses in any order
        atol: Tolerance on the sum-to-one check

    Returns:
        Pmf with zero atoms removed and masses sorted descending (stable)

    Raises:
        EmptyInput: raw has no entries
        BadParameter: a negative or non-finite entry
        NotNormalized: the sum differs from 1 by more than atol
    """
    arr = np.asarray(list(raw) if not isinstance(raw, np.ndarray) else raw,
                     dtype=float).ravel()
    if arr.size == 0:
        raise EmptyInput("Probability vector is empty")
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise BadParameter(f"Probabilities must be finite and nonnegative: {arr.tolist()}")

    total = float(arr.sum())
    if abs(total - 1.0) > atol:
        raise NotNormalized(total, atol)

    arr = arr[arr > 0]
    order = np.argsort(-arr, kind="stable")
    return Pmf(probs=arr[order].copy(), atol=atol)


def make_joint(raw: Sequence[Sequence[float]], atol: float = DEFAULT_ATOL) -> JointPmf:
    """
    Validate a joint pmf given as a |Y| x |X| matrix.

    All-zero rows (side-information symbols that never occur) and all-zero
    columns are removed. Column order is kept; rows are sorted only when a
    conditional pmf is requested.
    """
    try:
        mat = np.array(raw, dtype=float)
    except ValueError as e:
        raise BadParameter(f"Joint pmf must be a rectangular matrix: {e}") from e
    if mat.size == 0:
        raise EmptyInput("Joint pmf is empty")
    if mat.ndim == 1:
        mat = mat[np.newaxis, :]
    if mat.ndim != 2:
        raise BadParameter(f"Joint pmf must be two-dimensional, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)) or np.any(mat < 0):
        raise BadParameter("Joint probabilities must be finite and nonnegative")

    total = float(mat.sum())
    if abs(total - 1.0) > atol:
        raise NotNormalized(total, atol)

    mat = mat[mat.sum(axis=1) > 0]
    mat = mat[:, mat.sum(axis=0) > 0]
    return JointPmf(matrix=mat.copy(), atol=atol)


def independent_joint(px: Pmf, py: Pmf) -> JointPmf:
    """Product joint P_X x P_Y."""
    return JointPmf(matrix=np.outer(py.probs, px.probs), atol=max(px.atol, py.atol))


# =============================================================================
# Generators
# =============================================================================

def dyadic(m: int) -> Pmf:
    """1/2, 1/4, ..., 1/2^(m-1), 1/2^(m-1)."""
    m = _check_count(m)
    if m == 1:
        return Pmf(probs=np.array([1.0]))
    probs = 0.5 ** np.arange(1, m, dtype=float)
    return Pmf(probs=np.append(probs, probs[-1]))


def uniform(m: int) -> Pmf:
    m = _check_count(m)
    return Pmf(probs=np.full(m, 1.0 / m))


def random_pmf(m: int, seed: int) -> Pmf:
    """Seeded sample from the uniform distribution on the simplex."""
    m = _check_count(m)
    rng = np.random.default_rng(int(seed) & 0xFFFF_FFFF_FFFF_FFFF)
    weights = rng.dirichlet(np.ones(m))
    weights = weights / weights.sum()
    return make_pmf(weights)


def random_joint(num_y: int, num_x: int, seed: int) -> JointPmf:
    """Seeded |Y| x |X| joint pmf drawn uniformly from the simplex."""
    num_y, num_x = _check_count(num_y), _check_count(num_x)
    rng = np.random.default_rng(int(seed) & 0xFFFF_FFFF_FFFF_FFFF)
    weights = rng.dirichlet(np.ones(num_y * num_x))
    return make_joint((weights / weights.sum()).reshape(num_y, num_x))


def bernoulli(p: float) -> Pmf:
    p = float(p)
    if not (0.0 < p < 1.0):
        raise BadParameter(f"bernoulli parameter must lie in (0, 1), got {p!r}")
    return Pmf(probs=np.array([max(p, 1.0 - p), min(p, 1.0 - p)]))


GENERATORS = {
    "dyadic": dyadic,
    "uniform": uniform,
    "random": random_pmf,
    "bernoulli": bernoulli,
}


def generate(kind: str, *args) -> Pmf:
    """
    Build one of the named source models.

    Args:
        kind: "dyadic", "uniform", "random" or "bernoulli"
        *args: m for dyadic/uniform, (m, seed) for random, p for bernoulli

    Raises:
        BadParameter: unknown kind or wrong arguments
    """
    factory = GENERATORS.get(kind)
    if factory is None:
        raise BadParameter(f"Unknown generator '{kind}'. Expected one of {sorted(GENERATORS)}")
    try:
        return factory(*args)
    except TypeError as e:
        raise BadParameter(f"Wrong arguments for generator '{kind}': {args}") from e


def _check_count(m) -> int:
    if isinstance(m, float) and not m.is_integer():
        raise BadParameter(f"Alphabet size must be an integer, got {m!r}")
    m = int(m)
    if m < 1:
        raise BadParameter(f"Alphabet size must be >= 1, got {m}")
    return m


# =============================================================================
# Derived variables
# =============================================================================

def list_size(D: float, snap_window: float = SNAP_WINDOW) -> int:
    """
    L = floor(2^D) with a snap guard.

    If D lies within ``snap_window`` of log2(k) for an integer k, k is
    returned, so D = log2(3) evaluated in floating point still gives 3.

    Raises:
        NegativeDistortion: D < 0
    """
    D = float(D)
    if math.isnan(D):
        raise BadParameter("D must be a number")
    if D < 0:
        raise NegativeDistortion(f"Distortion must be >= 0, got {D!r}")
    if D >= 1023:
        raise BadParameter(f"D={D!r} exceeds the floating-point range of 2^D")

    x = 2.0 ** D
    k = max(1, int(round(x)))
    if abs(D - math.log2(k)) <= snap_window:
        return k
    return int(math.floor(x))


def truncate(masses: np.ndarray, eps: float) -> Tuple[int, np.ndarray]:
    """
    Smooth truncation on a descending mass vector (eps may be 1).

    Returns (i_star, q): i_star is the smallest 1-based index whose
    cumulative mass reaches 1 - eps; q keeps the first i_star masses with
    the last one lowered so that sum(q) = 1 - eps.
    """
    n = masses.size
    if eps == 0.0:
        return n, masses.copy()

    cum = np.cumsum(masses)
    target = 1.0 - eps
    i_star = min(int(np.searchsorted(cum, target - _CUM_TOL, side="left")) + 1, n)
    q = masses[:i_star].copy()
    prev = float(cum[i_star - 2]) if i_star > 1 else 0.0
    q[-1] = min(max(target - prev, 0.0), float(masses[i_star - 1]))
    return i_star, q


def smooth_truncation(p: Pmf, eps: float) -> SmoothTruncation:
    """Q^eps of a sorted pmf: smallest head carrying mass 1 - eps."""
    eps = check_eps(eps)
    i_star, q = truncate(p.probs, eps)
    return SmoothTruncation(i_star=i_star, q=q)


def list_masses(masses: np.ndarray, L: int) -> np.ndarray:
    """Masses of consecutive blocks of size L (the last may be shorter)."""
    return np.add.reduceat(masses, np.arange(0, masses.size, L))


def z_variable(p: Pmf, L: int) -> Pmf:
    """
    Distribution of the list index Z = ceil(X / L).

    The block sums of a descending pmf are descending already; ties that
    drift by round-off are levelled instead of re-sorted.
    """
    if int(L) < 1:
        raise BadParameter(f"List size must be >= 1, got {L!r}")
    L = int(L)
    if L == 1:
        return p

    z = list_masses(p.probs, L)
    drift = float(np.max(np.diff(z), initial=0.0))
    assert drift < 1e-12, f"list masses not descending (drift {drift:g})"
    return Pmf(probs=np.minimum.accumulate(z), atol=p.atol)


def lists_of(size: int, L: int) -> List[range]:
    """0-based index ranges of the size-L lists of a sorted alphabet."""
    return [range(s, min(s + L, size)) for s in range(0, size, L)]


def merge(p: Pmf, labels: Sequence[int]) -> Pmf:
    """Distribution of f(X) for the map x -> labels[x] (x in sorted order)."""
    labels = np.asarray(labels, dtype=int)
    if labels.shape != p.probs.shape:
        raise BadParameter(f"Need one label per atom ({p.size}), got {labels.size}")
    if np.any(labels < 0):
        raise BadParameter("Labels must be nonnegative integers")
    return make_pmf(np.bincount(labels, weights=p.probs), p.atol)


# =============================================================================
# Product sources
# =============================================================================

def iid_extension(base: Pmf, n: int, budget: int = RUN_BUDGET) -> RunLengthPmf:
    """
    Sorted n-fold product pmf as runs (value, multiplicity).

    Atoms are grouped by type class over the distinct base values, then
    runs whose values coincide are merged.

    Raises:
        TooLarge: |base|^n exceeds the budget
    """
    n = int(n)
    if n < 1:
        raise BadParameter(f"Block length must be >= 1, got {n}")
    atoms = float(base.size) ** n
    if atoms > budget:
        raise TooLarge(atoms, budget)

    values, tie_counts = np.unique(base.probs, return_counts=True)
    values = values[::-1]
    tie_counts = tie_counts[::-1].tolist()

    run_values: List[float] = []
    run_counts: List[int] = []
    for exps in _compositions(n, len(values)):
        mult = factorial(n)
        for e, c in zip(exps, tie_counts):
            mult = mult // factorial(e) * c ** e
        run_values.append(float(np.prod(values ** exps)))
        run_counts.append(mult)

    order = np.argsort(-np.asarray(run_values), kind="stable")
    merged_values: List[float] = []
    merged_counts: List[int] = []
    for idx in order:
        v, c = run_values[idx], run_counts[idx]
        if merged_values and math.isclose(v, merged_values[-1], rel_tol=1e-12, abs_tol=0.0):
            merged_counts[-1] += c
        else:
            merged_values.append(v)
            merged_counts.append(c)

    return RunLengthPmf(values=np.asarray(merged_values), counts=tuple(merged_counts))


def _compositions(n: int, k: int):
    """Weak compositions of n into k nonnegative parts."""
    for bars in itertools.combinations(range(n + k - 1), k - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(n + k - 2 - prev)
        yield np.asarray(parts)


def expand_runs(runs: RunLengthPmf, budget: int = RUN_BUDGET) -> Pmf:
    """Atom-level pmf of a run-length pmf."""
    if runs.total_atoms > budget:
        raise TooLarge(runs.total_atoms, budget)
    probs = np.repeat(runs.values, np.asarray(runs.counts, dtype=np.int64))
    return Pmf(probs=probs)


def iid_joint_extension(joint: JointPmf, n: int, budget: int = RUN_BUDGET) -> JointPmf:
    """n-fold product of a joint pmf: rows are y^n, columns x^n."""
    n = int(n)
    if n < 1:
        raise BadParameter(f"Block length must be >= 1, got {n}")
    cells = float(joint.num_x * joint.num_y) ** n
    if cells > budget:
        raise TooLarge(cells, budget, what="joint cells")
    mat = joint.matrix
    for _ in range(n - 1):
        mat = np.kron(mat, joint.matrix)
    return JointPmf(matrix=mat, atol=joint.atol)

