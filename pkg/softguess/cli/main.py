"""
Command-line front-end.

Every number printed here comes straight from a library call; this module
only parses arguments, dispatches and serializes.

Exit codes: 0 success, 1 property failure, 2 usage or domain error,
3 resource budget exceeded.
"""

import argparse
import logging
import math
import sys
from dataclasses import dataclass, asdict, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..asymptotics.expansion import (
    EXPANSION_COLUMNS, EXPANSION_KINDS, expansion_side_info, expansion_table
)
from ..coding.bounds import cumulant_bounds
from ..coding.code import (
    build_optimal_code, codeword_strings, cumulant_sandwich, excess_distortion_prob,
    expected_length, max_length
)
from ..coding.figures import DEFAULT_SEED, FIGURE_CASES, FIGURE_COLUMNS, figure_data
from ..config import Settings, load_settings
from ..core.exporter import export_csv, export_json, format_cell, round_value
from ..core.parser import parse_joint_spec, parse_pmf_spec
from ..core.pmf import JointPmf, Pmf, list_size
from ..entropy.allocation import kuzuoka_allocation
from ..entropy.renyi import (
    EntropyOrder, arimoto_renyi_conditional, conditional_stats, renner_wolf_conditional_zero,
    renyi, shannon, smooth_renyi, source_stats
)
from ..errors import BadParameter, SoftGuessError
from ..guessing.bounds import bounds_report, compare_upper_bounds, in_comparison_regime
from ..guessing.oracle import brute_force_min_moment
from ..guessing.side_info import conditional_bounds_report, conditional_min_moment
from ..guessing.strategy import build_optimal_strategy, min_moment
from ..i18n import get_available_languages, set_language, tr
from .selftest import run_selftest

logger = logging.getLogger("SOFTGUESS")

COMMANDS = ("entropy", "moment", "code", "figure", "asymptotics", "selftest")
FORMATS = ("json", "csv", "text")
# commands whose natural output is a table
TABLE_COMMANDS = ("figure", "asymptotics")
DEFAULT_GRID = "0.1:10:100"


# =============================================================================
# Logging
# =============================================================================

def configure_logging(level: int = logging.WARNING, log_file: Optional[str] = None) -> None:
    """
    Attach handlers to the "SOFTGUESS" logger.

    The console handler writes to stderr so stdout stays machine-readable;
    a file handler is added only when ``log_file`` is given.
    """
    logger.handlers.clear()
    logger.setLevel(logging.DEBUG if log_file else level)
    logger.propagate = False

    if log_file:
        file_handler = logging.FileHandler(log_file, mode='w', encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            logging.Formatter('%(asctime)s [%(levelname)s] %(funcName)s: %(message)s'))
        logger.addHandler(file_handler)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(level)
    console.setFormatter(logging.Formatter('[%(levelname)s] %(message)s'))
    logger.addHandler(console)


# =============================================================================
# Configuration
# =============================================================================

@dataclass
class RunConfig:
    """Validated parameters of one invocation."""
    command: str
    pmf: Optional[Pmf] = None
    joint: Optional[JointPmf] = None
    source: Optional[str] = None
    alpha: float = 0.5
    eps: float = 0.0
    rho: float = 1.0
    D: float = 0.0
    ns: List[int] = field(default_factory=list)
    seed: int = DEFAULT_SEED
    grid: Optional[np.ndarray] = None
    fmt: str = "json"
    out: Optional[str] = None
    oracle: bool = False
    emit_strings: bool = False
    quick: bool = False
    kind: str = "moment"
    case: Optional[str] = None
    settings: Settings = field(default_factory=Settings)

    @property
    def has_joint(self) -> bool:
        return self.joint is not None


def parse_range(text: str) -> List[int]:
    """'8' -> [8]; '4:14' -> [4, ..., 14]."""
    parts = text.split(':')
    try:
        bounds = [int(p) for p in parts]
    except ValueError as e:
        raise BadParameter(f"Block lengths must be integers, got '{text}'") from e
    if len(bounds) == 1:
        bounds *= 2
    if len(bounds) != 2 or bounds[0] < 1 or bounds[1] < bounds[0]:
        raise BadParameter(f"Expected n or lo:hi with 1 <= lo <= hi, got '{text}'")
    return list(range(bounds[0], bounds[1] + 1))


def parse_grid(text: str) -> np.ndarray:
    """'lo:hi:count' -> count evenly spaced values from lo to hi."""
    parts = text.split(':')
    try:
        if len(parts) != 3:
            raise ValueError(text)
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as e:
        raise BadParameter(f"Expected --grid lo:hi:count, got '{text}'") from e
    if count < 1 or not (0 < lo <= hi):
        raise BadParameter(f"Grid needs 0 < lo <= hi and count >= 1, got '{text}'")
    return np.linspace(lo, hi, count)


def distortion_from(D: Optional[float], L: Optional[int]) -> float:
    """--D as given, or log2 L for --L (list_size snaps it back to L)."""
    if L is not None:
        if L < 1:
            raise BadParameter(f"List size must be >= 1, got {L}")
        return math.log2(L)
    return 0.0 if D is None else float(D)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Turn parsed arguments into a RunConfig.

    Raises:
        BadParameter: bad ranges, a missing or duplicated input source
    """
    settings = load_settings(args.config, atol=args.atol, run_budget=args.budget)
    command = args.command

    sources = [s for s in (args.pmf, args.joint) if s is not None]
    if len(sources) > 1:
        raise BadParameter(tr("error.two_sources"))
    needs_source = command in ("entropy", "moment", "code", "asymptotics")
    if needs_source and not sources:
        raise BadParameter(tr("error.no_source"))

    pmf = parse_pmf_spec(args.pmf, settings.atol) if args.pmf is not None else None
    joint = parse_joint_spec(args.joint, settings.atol) if args.joint is not None else None

    fmt = args.format or ("csv" if command in TABLE_COMMANDS else "json")
    if command == "figure" and args.case is None:
        raise BadParameter(tr("error.no_case", cases=", ".join(FIGURE_CASES)))

    return RunConfig(
        command=command,
        pmf=pmf,
        joint=joint,
        source=sources[0] if sources else None,
        alpha=args.alpha,
        eps=args.eps,
        rho=args.rho,
        D=distortion_from(args.D, args.L),
        ns=parse_range(args.n) if args.n else [1],
        seed=args.seed,
        grid=parse_grid(args.grid or DEFAULT_GRID),
        fmt=fmt,
        out=args.out,
        oracle=args.oracle,
        emit_strings=args.emit_strings,
        quick=args.quick,
        kind=args.kind,
        case=args.case,
        settings=settings,
    )


# =============================================================================
# Commands
# =============================================================================

@dataclass
class CommandResult:
    """A report (JSON/text) or a table (CSV) plus the exit status."""
    report: Dict[str, Any] = field(default_factory=dict)
    columns: Tuple[str, ...] = ()
    rows: List[Sequence[Any]] = field(default_factory=list)
    status: int = 0


def cmd_entropy(config: RunConfig) -> CommandResult:
    order = EntropyOrder(config.alpha)
    if config.has_joint:
        j = config.joint
        h_cond, u_cond = conditional_stats(j)
        report = {
            "alpha": order.alpha,
            "eps": config.eps,
            "arimoto_renyi": arimoto_renyi_conditional(j, order),
            "renner_wolf_zero": renner_wolf_conditional_zero(j, order),
            "conditional_shannon": h_cond,
            "conditional_varentropy": u_cond,
        }
        if not order.is_shannon:
            value, eps_y = kuzuoka_allocation(j, order, config.eps, config.settings)
            report.update(kuzuoka_smooth=value, eps_y=eps_y)
        return CommandResult(report=report)

    p = config.pmf
    stats = source_stats(p)
    report = {
        "alpha": order.alpha,
        "eps": config.eps,
        "renyi": renyi(p, order),
        "smooth_renyi": smooth_renyi(p, order, config.eps),
        "shannon": shannon(p),
        "varentropy": stats.v,
        "third_moment": stats.t,
        "size": p.size,
    }
    return CommandResult(report=report)


def cmd_moment(config: RunConfig) -> CommandResult:
    rho, D, eps = config.rho, config.D, config.eps
    if config.has_joint:
        if config.oracle:
            raise BadParameter(tr("error.oracle_joint"))
        report = conditional_bounds_report(config.joint, rho, D, eps, config.settings).check()
        _, allocation = conditional_min_moment(config.joint, rho, D, eps)
        out = report.to_dict()
        out.update(L=list_size(D), eps_y=allocation.eps_y)
        return CommandResult(report=out)

    p = config.pmf
    moment = min_moment(p, rho, D, eps)
    bounds = bounds_report(p, rho, D, eps).check()
    strategy = build_optimal_strategy(p, D, eps)
    z_bound, explicit_bound, z_tighter = compare_upper_bounds(p, rho, D, eps)
    out = bounds.to_dict()
    out.update(
        moment=moment.moment,
        error_prob=moment.error_prob,
        L=strategy.L,
        cutoff=strategy.cutoff,
        n_lists=strategy.n_lists,
        pi_cutoff=float(strategy.pi[strategy.cutoff - 1]),
        z_tighter=z_tighter,
        comparison_proven=in_comparison_regime(strategy.L),
    )
    if config.oracle:
        oracle = brute_force_min_moment(p, rho, D, eps, config.settings.oracle_max_atoms)
        out.update(oracle=oracle, oracle_match=abs(oracle - moment.moment) <= 1e-9 * max(1.0, oracle))
    return CommandResult(report=out)


def cmd_code(config: RunConfig) -> CommandResult:
    p, rho, D, eps = config.pmf, config.rho, config.D, config.eps
    if p is None:
        raise BadParameter(tr("error.pmf_only", command="code"))
    sandwich = cumulant_sandwich(p, rho, D, eps)
    code = build_optimal_code(p, D, eps)
    bounds = cumulant_bounds(p, rho, D, eps).check()
    out = asdict(sandwich)
    out.update(
        L=code.L,
        l_star=code.l_star,
        alpha=code.alpha,
        n_lists=code.n_lists,
        excess_distortion_prob=excess_distortion_prob(code, p, D),
        expected_length=expected_length(code, p),
        max_length=max_length(code, p),
        bounds=bounds.to_dict(),
    )
    if config.emit_strings:
        out["codewords"] = codeword_strings(code.n_lists)
    return CommandResult(report=out)


def cmd_figure(config: RunConfig) -> CommandResult:
    rows = figure_data(config.case, config.grid, config.seed, config.settings.max_workers)
    return CommandResult(columns=FIGURE_COLUMNS, rows=[r.as_tuple() for r in rows],
                         report={"case": config.case, "rows": [asdict(r) for r in rows]})


def cmd_asymptotics(config: RunConfig) -> CommandResult:
    if config.has_joint:
        reports = [expansion_side_info(config.joint, n, config.rho, config.D, config.eps,
                                       config.settings.run_budget) for n in config.ns]
    else:
        if config.kind not in EXPANSION_KINDS:
            raise BadParameter(tr("error.kind", kinds=", ".join(EXPANSION_KINDS)))
        reports = expansion_table(config.pmf, config.ns, config.rho, config.D, config.eps,
                                  config.kind, config.settings.run_budget,
                                  config.settings.max_workers)
    return CommandResult(columns=EXPANSION_COLUMNS, rows=[r.as_row() for r in reports],
                         report={"kind": "side_info" if config.has_joint else config.kind,
                                 "rows": [r.to_dict() for r in reports]})


def cmd_selftest(config: RunConfig) -> CommandResult:
    summary = run_selftest(seed=config.seed, quick=config.quick, settings=config.settings,
                           extra=config.pmf)
    return CommandResult(report=asdict(summary), status=0 if summary.passed else 1)


DISPATCH = {
    "entropy": cmd_entropy,
    "moment": cmd_moment,
    "code": cmd_code,
    "figure": cmd_figure,
    "asymptotics": cmd_asymptotics,
    "selftest": cmd_selftest,
}


# =============================================================================
# Output
# =============================================================================

def _label(group: str, key: str) -> str:
    """Translated label, or the raw key when the catalogue has none."""
    path = f"report.{group}.{key}"
    text = tr(path)
    return key if text == path else text


def render_text(command: str, result: CommandResult, digits: int) -> str:
    """Human-readable report with translated labels."""
    lines = [tr(f"report.title.{command}")]
    if result.rows:
        lines.append("  ".join(_label("column", c) for c in result.columns))
        for row in result.rows:
            lines.append("  ".join(format_cell(v, digits) for v in row))
    else:
        for key, value in round_value(result.report, digits).items():
            lines.append(f"  {_label('field', key)}: {value}")
    return "\n".join(lines) + "\n"


def emit(config: RunConfig, result: CommandResult) -> None:
    digits = config.settings.significant_digits
    if config.fmt == "csv":
        if not result.columns:
            raise BadParameter(tr("error.csv_unsupported", command=config.command))
        export_csv(result.columns, result.rows, config.out, digits)
    elif config.fmt == "text":
        text = render_text(config.command, result, digits)
        if config.out:
            with open(config.out, 'w', encoding='utf-8') as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    else:
        export_json(result.report, config.out, digits)


# =============================================================================
# Argument parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help=tr("help.config"))
    common.add_argument("--log-file", metavar="PATH", help=tr("help.log_file"))
    common.add_argument("-v", "--verbose", action="count", default=0, help=tr("help.verbose"))
    common.add_argument("--lang", choices=sorted(get_available_languages()), default="en",
                        help=tr("help.lang"))
    common.add_argument("--pmf", metavar="SPEC", help=tr("help.pmf"))
    common.add_argument("--joint", metavar="PATH", help=tr("help.joint"))
    common.add_argument("--alpha", type=float, default=0.5, help=tr("help.alpha"))
    common.add_argument("--eps", type=float, default=0.0, help=tr("help.eps"))
    common.add_argument("--rho", type=float, default=1.0, help=tr("help.rho"))
    dist = common.add_mutually_exclusive_group()
    dist.add_argument("--D", type=float, help=tr("help.D"))
    dist.add_argument("--L", type=int, help=tr("help.L"))
    common.add_argument("--n", metavar="N|LO:HI", help=tr("help.n"))
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=tr("help.seed"))
    common.add_argument("--grid", metavar="LO:HI:COUNT", help=tr("help.grid"))
    common.add_argument("--format", choices=FORMATS, help=tr("help.format"))
    common.add_argument("--out", metavar="PATH", help=tr("help.out"))
    common.add_argument("--oracle", action="store_true", help=tr("help.oracle"))
    common.add_argument("--emit-strings", action="store_true", help=tr("help.emit_strings"))
    common.add_argument("--quick", action="store_true", help=tr("help.quick"))
    common.add_argument("--kind", choices=EXPANSION_KINDS, default="moment", help=tr("help.kind"))
    common.add_argument("--case", choices=sorted(FIGURE_CASES), help=tr("help.case"))
    common.add_argument("--atol", type=float, help=tr("help.atol"))
    common.add_argument("--budget", type=int, help=tr("help.budget"))

    parser = argparse.ArgumentParser(prog="softguess", description=tr("app.description"))
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=tr(f"command.{name}"))
    return parser


def _preselect_language(argv: Sequence[str]) -> None:
    """Apply --lang before the parser is built so help texts are translated."""
    for i, arg in enumerate(argv):
        if arg == "--lang" and i + 1 < len(argv):
            set_language(argv[i + 1])
        elif arg.startswith("--lang="):
            set_language(arg.split("=", 1)[1])


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, dispatch, emit; return the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    _preselect_language(argv)
    args = build_parser().parse_args(argv)
    set_language(args.lang)

    level = logging.WARNING - 10 * min(args.verbose, 2)
    configure_logging(level, args.log_file)

    try:
        config = build_run_config(args)
        result = DISPATCH[config.command](config)
        emit(config, result)
    except SoftGuessError as e:
        if e.exit_code == 3:
            logger.warning(tr("error.budget", message=e))
        elif e.exit_code == 1:
            logger.error(tr("error.property", message=e))
        else:
            logger.error(tr("error.usage", message=e))
        return e.exit_code
    except OSError as e:
        logger.error(tr("error.io", message=e))
        return 2

    if result.status:
        logger.error(tr("error.selftest", name=result.report.get("failed")))
    return result.status
