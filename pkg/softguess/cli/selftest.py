"""
In-process acceptance suite behind ``softguess selftest``.

Each property draws its instances from a generator seeded with
(seed, property index), so runs are reproducible and properties are
independent of each other. A property returns a short detail string or
raises PropertyViolation (or AssertionError) on the first failing instance.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..coding.bounds import zero_error_upper_bounds
from ..coding.code import (
    build_list_index_code, build_optimal_code, cumulant_length, cumulant_sandwich
)
from ..coding.figures import FIGURE_CASES, case_source, figure_data
from ..config import ASYMPTOTIC_ENVELOPE, DEFAULT_SETTINGS, Settings
from ..core.pmf import (
    JointPmf, Pmf, list_size, random_joint, random_pmf, uniform, bernoulli, z_variable
)
from ..entropy.allocation import kuzuoka_conditional_smooth, kuzuoka_grid_oracle
from ..entropy.chain import chain_rule_sides, conditional_chain_rule_sides
from ..entropy.renyi import EntropyOrder
from ..errors import PropertyViolation
from ..asymptotics.expansion import expansion_cumulant, expansion_moment, expansion_table
from ..guessing.bounds import bounds_report, compare_upper_bounds
from ..guessing.oracle import brute_force_min_moment
from ..guessing.side_info import conditional_bounds_report
from ..guessing.strategy import min_moment

logger = logging.getLogger("SOFTGUESS.selftest")

TOL = 1e-9
EPS_GRID = (0.0, 0.05, 0.125, 0.3)
RHO_GRID = (0.5, 1.0, 2.0)
D_GRID = (0.0, 0.5, 1.0, math.log2(3), 2.0)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass
class SelftestSummary:
    passed: bool
    properties: List[PropertyResult] = field(default_factory=list)
    failed: Optional[str] = None


@dataclass(frozen=True)
class SelftestContext:
    seed: int = 0
    quick: bool = False
    settings: Settings = DEFAULT_SETTINGS
    extra: Optional[Pmf] = None

    def rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed & 0xFFFF_FFFF, salt])

    def count(self, full: int, quick: int) -> int:
        return quick if self.quick else full


def _fail(label: str, value: float, reference: float) -> PropertyViolation:
    return PropertyViolation(f"{label}: {value:.15g} vs {reference:.15g}")


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2 ** 63))


def _random_instance(rng: np.random.Generator, max_atoms: int = 12) -> Tuple[Pmf, float, float, float]:
    p = random_pmf(int(rng.integers(2, max_atoms + 1)), _seed(rng))
    return (p, float(rng.choice(RHO_GRID)), float(rng.choice(D_GRID)),
            float(rng.choice(EPS_GRID)))


def _random_joint(rng: np.random.Generator, max_y: int = 3, max_x: int = 5) -> JointPmf:
    return random_joint(int(rng.integers(2, max_y + 1)), int(rng.integers(2, max_x + 1)),
                        _seed(rng))


# =============================================================================
# Properties
# =============================================================================

def oracle_equivalence(ctx: SelftestContext) -> str:
    rng = ctx.rng(1)
    n = ctx.count(200, 20)
    for _ in range(n):
        p = random_pmf(int(rng.integers(3, 6)), _seed(rng))
        D = math.log2(int(rng.integers(1, 4)))
        rho, eps = float(rng.choice(RHO_GRID)), float(rng.choice(EPS_GRID))
        value = min_moment(p, rho, D, eps).moment
        oracle = brute_force_min_moment(p, rho, D, eps, ctx.settings.oracle_max_atoms)
        if abs(value - oracle) > TOL * max(1.0, oracle):
            raise _fail(f"min_moment vs brute force (|X|={p.size}, D={D:.4g}, eps={eps})",
                        value, oracle)
    return f"{n} instances"


def bound_sandwiches(ctx: SelftestContext) -> str:
    rng = ctx.rng(2)
    n_plain, n_joint = ctx.count(500, 50), ctx.count(200, 20)
    for _ in range(n_plain):
        bounds_report(*_random_instance(rng)).check(TOL)
    if ctx.extra is not None:
        for rho in RHO_GRID:
            bounds_report(ctx.extra, rho, 1.0, 0.1).check(TOL)
    for _ in range(n_joint):
        j = _random_joint(rng)
        _, rho, D, eps = _random_instance(rng)
        conditional_bounds_report(j, rho, D, eps, ctx.settings).check(TOL)
    return f"{n_plain} unconditional, {n_joint} joint"


def comparison_regime(ctx: SelftestContext) -> str:
    rng = ctx.rng(3)
    n = ctx.count(300, 30)
    for _ in range(n):
        p, rho, _, eps = _random_instance(rng)
        D = float(rng.choice((0.0, 0.5, 1.0, 1.5)))
        z_bound, explicit_bound, z_tighter = compare_upper_bounds(p, rho, D, eps, TOL)
        if not z_tighter:
            raise _fail(f"list-index upper bound above explicit one (L={list_size(D)})",
                        z_bound, explicit_bound)
    return f"{n} instances with L <= 2"


def chain_rules(ctx: SelftestContext) -> str:
    rng = ctx.rng(4)
    n = ctx.count(300, 30)
    for _ in range(n):
        j = _random_joint(rng, max_y=3, max_x=5)
        order = EntropyOrder(float(rng.choice((0.2, 0.5, 0.9))))
        eps = float(rng.choice((0.0, 0.1, 0.3)))
        px = j.p_x()
        lhs, rhs = chain_rule_sides(px, rng.integers(0, 3, size=px.size), order, eps)
        if lhs > rhs + TOL:
            raise _fail("unconditional chain rule", lhs, rhs)
        lhs, rhs = conditional_chain_rule_sides(j, rng.integers(0, 3, size=j.num_x),
                                                order, eps, ctx.settings)
        if lhs > rhs + TOL:
            raise _fail("conditional chain rule", lhs, rhs)
    return f"{n} joints"


def allocation_vs_grid(ctx: SelftestContext) -> str:
    rng = ctx.rng(5)
    n = ctx.count(50, 6)
    for _ in range(n):
        j = random_joint(int(rng.integers(2, 4)), int(rng.integers(2, 5)), _seed(rng))
        order = EntropyOrder(float(rng.choice((0.2, 0.5, 0.8))))
        eps = float(rng.uniform(0.01, 0.5))
        step = 1e-5 if j.num_y == 2 else 1e-3
        value = kuzuoka_conditional_smooth(j, order, eps, ctx.settings)
        grid = kuzuoka_grid_oracle(j, order, eps, step)
        if abs(value - grid) > 1e-6:
            raise _fail(f"allocation solver vs grid (|Y|={j.num_y})", value, grid)
    return f"{n} joints"


def cumulant_sandwiches(ctx: SelftestContext) -> str:
    rng = ctx.rng(6)
    n = ctx.count(500, 50)
    for _ in range(n):
        cumulant_sandwich(*_random_instance(rng), tol=TOL)
        p, rho, _, _ = _random_instance(rng)
        cumulant_sandwich(p, rho, 0.0, 0.0, tol=TOL)
    return f"{n} instances plus lossless"


def figure_reproduction(ctx: SelftestContext) -> str:
    grid = np.linspace(0.1, 10.0, ctx.count(100, 20))
    for case in FIGURE_CASES:
        for row in figure_data(case, grid, ctx.seed, ctx.settings.max_workers):
            if row.new_upper > row.old_upper + TOL * max(1.0, row.old_upper):
                raise _fail(f"case {case} rho={row.rho:.4g}: new bound above old", row.new_upper,
                            row.old_upper)
            if row.lambda_exact > row.new_upper + TOL * max(1.0, row.new_upper):
                raise _fail(f"case {case} rho={row.rho:.4g}: Lambda* above new bound",
                            row.lambda_exact, row.new_upper)
    return f"{len(FIGURE_CASES)} cases x {grid.size} rho values"


def old_bound_divergence(ctx: SelftestContext) -> str:
    p, D = case_source("1a", ctx.seed)
    new_small, old_small = zero_error_upper_bounds(p, 1e-3, D)
    _, old_one = zero_error_upper_bounds(p, 1.0, D)
    if not old_small > 10.0 * old_one:
        raise _fail("old bound at rho=1e-3 not above 10x its value at rho=1", old_small, old_one)
    cap = math.log2(math.ceil(p.size / list_size(D)))
    if new_small > cap + TOL:
        raise _fail("new bound at rho=1e-3 above log2 of the list count", new_small, cap)
    return f"old {old_small:.4g} vs {old_one:.4g}"


def asymptotic_expansion(ctx: SelftestContext) -> str:
    base = bernoulli(0.2)
    ns = [8, 12, 16] if ctx.quick else list(range(8, 17))
    for kind in ("moment", "cumulant"):
        reports = expansion_table(base, ns, 1.0, 0.2, 0.1, kind,
                                  ctx.settings.run_budget, ctx.settings.max_workers)
        for r in reports:
            envelope = ASYMPTOTIC_ENVELOPE * math.log2(r.n) / r.n
            if abs(r.residual) > envelope:
                raise _fail(f"{kind} residual at n={r.n} outside envelope", abs(r.residual),
                            envelope)
        if not abs(reports[-1].residual) < abs(reports[0].residual):
            raise _fail(f"{kind} residual did not shrink from n={ns[0]} to n={ns[-1]}",
                        abs(reports[-1].residual), abs(reports[0].residual))
    return f"n = {ns[0]}..{ns[-1]}"


# uniform bases only: zero varentropy keeps the second-order term out of the first-order check
EXPONENT_PAIRS = ((2, 0.5), (2, 0.25), (3, 0.5))
EXPONENT_N = 16
EXPONENT_EPS = 0.05
EXPONENT_MOMENT_RHOS = (1.0, 4.0)
# at rho=1 the cumulant offset at this n is still above the tolerance
EXPONENT_CUMULANT_RHO = 4.0


def exponent_limits(ctx: SelftestContext) -> str:
    budget = max(ctx.settings.run_budget, 3 ** EXPONENT_N)
    for m, D in EXPONENT_PAIRS:
        base = uniform(m)
        h = math.log2(m)
        for rho in EXPONENT_MOMENT_RHOS:
            moment = expansion_moment(base, EXPONENT_N, rho, D, EXPONENT_EPS, budget)
            if abs(moment.exact - rho * (h - D)) > 0.1 * rho:
                raise _fail(f"moment exponent uniform({m}) rho={rho} D={D}", moment.exact, rho * (h - D))
        cumulant = expansion_cumulant(base, EXPONENT_N, EXPONENT_CUMULANT_RHO, D, EXPONENT_EPS, budget)
        if abs(cumulant.exact - (h - D)) > 0.1:
            raise _fail(f"cumulant exponent uniform({m}) D={D}", cumulant.exact, h - D)
    return (f"{len(EXPONENT_PAIRS)} uniform bases at n={EXPONENT_N}, moment rho in {EXPONENT_MOMENT_RHOS}, "
            f"cumulant rho={EXPONENT_CUMULANT_RHO}")


def reduction_identities(ctx: SelftestContext) -> str:
    rng = ctx.rng(11)
    n = ctx.count(300, 30)
    for _ in range(n):
        p, rho, D, eps = _random_instance(rng)
        z = z_variable(p, list_size(D))
        direct = min_moment(p, rho, D, eps).moment
        reduced = min_moment(z, rho, 0.0, eps).moment
        if abs(direct - reduced) > 1e-12 * max(1.0, direct):
            raise _fail("M* of X vs M* of Z", direct, reduced)
        lam_x = cumulant_length(build_optimal_code(p, D, eps), p, rho)
        lam_z = cumulant_length(build_list_index_code(z, eps), z, rho)
        if abs(lam_x - lam_z) > 1e-12 * max(1.0, abs(lam_x)):
            raise _fail("Lambda* of X vs Lambda* of Z", lam_x, lam_z)
    return f"{n} instances"


PROPERTIES: List[Tuple[str, Callable[[SelftestContext], str], bool]] = [
    # (name, check, part of --quick)
    ("oracle_equivalence", oracle_equivalence, True),
    ("bound_sandwiches", bound_sandwiches, True),
    ("comparison_regime", comparison_regime, True),
    ("chain_rules", chain_rules, True),
    ("allocation_vs_grid", allocation_vs_grid, True),
    ("cumulant_sandwiches", cumulant_sandwiches, True),
    ("figure_reproduction", figure_reproduction, True),
    ("old_bound_divergence", old_bound_divergence, True),
    ("asymptotic_expansion", asymptotic_expansion, False),
    ("exponent_limits", exponent_limits, False),
    ("reduction_identities", reduction_identities, True),
]


def run_selftest(seed: int = 0, quick: bool = False, settings: Settings = DEFAULT_SETTINGS,
                 extra: Optional[Pmf] = None) -> SelftestSummary:
    """
    Run every property (the quick subset with ``quick``) and collect results.

    All properties run even after a failure; ``failed`` names the first one.
    """
    ctx = SelftestContext(seed=seed, quick=quick, settings=settings, extra=extra)
    summary = SelftestSummary(passed=True)
    for name, check, in_quick in PROPERTIES:
        if quick and not in_quick:
            continue
        start = time.perf_counter()
        try:
            detail = check(ctx)
            passed = True
        except (PropertyViolation, AssertionError) as e:
            detail = str(e)
            passed = False
        seconds = time.perf_counter() - start
        level = logging.INFO if passed else logging.ERROR
        logger.log(level, "%s: %s (%.2fs) %s", name, "ok" if passed else "FAILED", seconds, detail)

        summary.properties.append(PropertyResult(name, passed, detail, seconds))
        if not passed and summary.failed is None:
            summary.passed = False
            summary.failed = name
    return summary
