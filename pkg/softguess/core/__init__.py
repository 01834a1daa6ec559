"""
Core module - pmf model, file parsing and report export.
"""

from .pmf import (
    Pmf, JointPmf, RunLengthPmf, make_pmf, make_joint, generate,
    list_size, truncate, z_variable, iid_extension
)
from .parser import load_pmf, load_joint, parse_pmf_spec, parse_joint_spec
from .exporter import export_json, export_csv

__all__ = [
    "Pmf",
    "JointPmf",
    "RunLengthPmf",
    "make_pmf",
    "make_joint",
    "generate",
    "list_size",
    "truncate",
    "z_variable",
    "iid_extension",
    "load_pmf",
    "load_joint",
    "parse_pmf_spec",
    "parse_joint_spec",
    "export_json",
    "export_csv",
]
