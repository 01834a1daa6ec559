"""
CLI module - argument parsing, dispatch and the built-in selftest.
"""

from .main import main, build_parser
from .selftest import run_selftest

__all__ = ["main", "build_parser", "run_selftest"]
