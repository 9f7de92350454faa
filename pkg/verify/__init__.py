"""Computational checks of the closed-form claims about plateaued-function codes."""

from .report import Verdict, Expectation, VerifyReport, report_inputs
from .tables import table_rows, expected_distribution, coincident_weights
from .theorems import (
    verify_table,
    verify_dual,
    verify_extended,
    verify_lcd,
    verify_selforth,
    verify_self_dual_existence,
    verify_walsh,
    verify_solution_counts,
    extended_distance_claim,
)
from .runner import ALL_TARGETS, parse_targets, check_caps, run_targets
from .scan import ScanSummary, scan, exhaustive_specs, random_specs
from .worked_example import reproduce

__all__ = [
    "Verdict",
    "Expectation",
    "VerifyReport",
    "report_inputs",
    "table_rows",
    "expected_distribution",
    "coincident_weights",
    "verify_table",
    "verify_dual",
    "verify_extended",
    "verify_lcd",
    "verify_selforth",
    "verify_self_dual_existence",
    "verify_walsh",
    "verify_solution_counts",
    "extended_distance_claim",
    "ALL_TARGETS",
    "parse_targets",
    "check_caps",
    "run_targets",
    "ScanSummary",
    "scan",
    "exhaustive_specs",
    "random_specs",
    "reproduce",
]
