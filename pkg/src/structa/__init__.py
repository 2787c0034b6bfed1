"""structa: exact finite mathematical structures with machine-checkable laws."""

from .core import FinMap, FinSet, finset
from .docs import StructureDoc, parse, parse_text, render, run_check, run_derive
from .report import Check, LawReport
from .suites import SUITES, run_suite

__all__ = [
    "Check",
    "FinMap",
    "FinSet",
    "LawReport",
    "SUITES",
    "StructureDoc",
    "finset",
    "parse",
    "parse_text",
    "render",
    "run_check",
    "run_derive",
    "run_suite",
]

__version__ = "0.1.0"
