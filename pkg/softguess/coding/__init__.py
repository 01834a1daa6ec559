"""
Coding module - optimal variable-length lossy codes and their cumulants.
"""

from .code import VlCode, build_optimal_code, cumulant_length, cumulant_sandwich
from .bounds import cumulant_bounds, zero_error_upper_bounds
from .figures import figure_data

__all__ = [
    "VlCode",
    "build_optimal_code",
    "cumulant_length",
    "cumulant_sandwich",
    "cumulant_bounds",
    "zero_error_upper_bounds",
    "figure_data",
]
