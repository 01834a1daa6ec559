"""
Guessing module - optimal soft-guessing strategies, moments and bounds.
"""

from .strategy import SoftStrategy, build_optimal_strategy, min_moment
from .bounds import BoundsReport, bounds_report, list_index_bounds, explicit_bounds
from .side_info import (
    conditional_min_moment, conditional_bounds_report,
    conditional_list_index_bounds, conditional_explicit_bounds
)
from .oracle import brute_force_min_moment

__all__ = [
    "SoftStrategy",
    "build_optimal_strategy",
    "min_moment",
    "BoundsReport",
    "bounds_report",
    "list_index_bounds",
    "explicit_bounds",
    "conditional_min_moment",
    "conditional_bounds_report",
    "conditional_list_index_bounds",
    "conditional_explicit_bounds",
    "brute_force_min_moment",
]
