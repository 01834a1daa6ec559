"""
Input parser - reads pmfs and joint pmfs from files or generator specs.

Accepted sources:
    dyadic:10, uniform:4, random:10:7, bernoulli:0.2   generator mini-syntax
    file:path.json / path.json                          {"probs": [...]} or {"matrix": [[...]]}
    file:path.csv / path.csv                            one value per line, or a rectangular table
"""

import csv
import json
import logging
import os
from typing import List

from ..config import DEFAULT_ATOL
from ..errors import BadParameter
from .pmf import GENERATORS, JointPmf, Pmf, generate, make_joint, make_pmf

logger = logging.getLogger("SOFTGUESS.parser")

FILE_PREFIX = "file:"


def _read_json(path: str) -> dict:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except OSError as e:
        raise BadParameter(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise BadParameter(f"Invalid JSON in {path}: {e}") from e
    if not isinstance(data, dict):
        raise BadParameter(f"{path} must hold a JSON object")
    return data


def _read_csv(path: str) -> List[List[float]]:
    rows: List[List[float]] = []
    try:
        with open(path, 'r', encoding='utf-8', newline='') as f:
            for line_no, record in enumerate(csv.reader(f), start=1):
                cells = [c.strip() for c in record if c.strip()]
                if not cells or cells[0].startswith('#'):
                    continue
                try:
                    rows.append([float(c) for c in cells])
                except ValueError as e:
                    raise BadParameter(f"{path}:{line_no}: not a number ({e})") from e
    except OSError as e:
        raise BadParameter(f"Cannot read {path}: {e}") from e
    return rows


def _strip_prefix(source: str) -> str:
    return source[len(FILE_PREFIX):] if source.startswith(FILE_PREFIX) else source


def load_pmf(path: str, atol: float = DEFAULT_ATOL) -> Pmf:
    """
    Read a pmf from a JSON or CSV file.

    Raises:
        BadParameter: unreadable file, missing "probs" key, or non-numeric value
        EmptyInput, NotNormalized: from make_pmf
    """
    if path.lower().endswith('.json'):
        data = _read_json(path)
        if "probs" not in data:
            raise BadParameter(f"{path}: expected a \"probs\" key")
        raw = data["probs"]
    else:
        rows = _read_csv(path)
        # a single CSV row is accepted as well as one value per line
        raw = rows[0] if len(rows) == 1 else [v for row in rows for v in row[:1]]

    try:
        return make_pmf(raw, atol)
    except TypeError as e:
        raise BadParameter(f"{path}: probabilities must be numbers") from e


def load_joint(path: str, atol: float = DEFAULT_ATOL) -> JointPmf:
    """Read a |Y| x |X| joint pmf from a JSON or CSV file."""
    if path.lower().endswith('.json'):
        data = _read_json(path)
        if "matrix" not in data:
            raise BadParameter(f"{path}: expected a \"matrix\" key")
        raw = data["matrix"]
    else:
        raw = _read_csv(path)
        widths = {len(row) for row in raw}
        if len(widths) > 1:
            raise BadParameter(f"{path}: rows have different lengths {sorted(widths)}")
    return make_joint(raw, atol)


def parse_pmf_spec(source: str, atol: float = DEFAULT_ATOL) -> Pmf:
    """
    Resolve a --pmf argument.

    Args:
        source: "kind:arg[:arg]" for a generator, otherwise a file path
                (optionally prefixed with "file:")
        atol: Sum-to-one tolerance for file input
    """
    kind, _, rest = source.partition(':')
    if kind in GENERATORS and rest:
        args = [_number(a, source) for a in rest.split(':')]
        logger.debug("generator %s%s", kind, tuple(args))
        return generate(kind, *args)

    path = _strip_prefix(source)
    if not os.path.exists(path):
        raise BadParameter(f"No such pmf file or generator: {source}")
    return load_pmf(path, atol)


def parse_joint_spec(source: str, atol: float = DEFAULT_ATOL) -> JointPmf:
    """Resolve a --joint argument (a file path, optionally prefixed with "file:")."""
    path = _strip_prefix(source)
    if not os.path.exists(path):
        raise BadParameter(f"No such joint pmf file: {source}")
    return load_joint(path, atol)


def _number(text: str, source: str):
    try:
        value = float(text)
    except ValueError as e:
        raise BadParameter(f"Bad generator argument '{text}' in {source}") from e
    return int(value) if value.is_integer() and '.' not in text else value
