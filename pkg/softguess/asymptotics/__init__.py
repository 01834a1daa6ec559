"""
Asymptotics module - exact block values against their expansions.
"""

from .expansion import (
    ExpansionReport, expansion_moment, expansion_cumulant,
    expansion_side_info, expansion_table, guessing_exponent
)
from .quantile import gaussian_quantile

__all__ = [
    "ExpansionReport",
    "expansion_moment",
    "expansion_cumulant",
    "expansion_side_info",
    "expansion_table",
    "guessing_exponent",
    "gaussian_quantile",
]
