"""JSON and CSV interchange formats."""

from .schemas import CodeModel, CycIntModel, FieldModel, FunctionModel, QuadraticModel, ReportModel
from .codec import (
    code_to_json,
    cycint_from_json,
    cycint_to_json,
    field_to_json,
    function_to_json,
    load_code,
    load_function,
    parse_coeffs,
    report_lines,
    spec_to_json,
    weights_csv,
)

__all__ = [
    "CodeModel",
    "CycIntModel",
    "FieldModel",
    "FunctionModel",
    "QuadraticModel",
    "ReportModel",
    "code_to_json",
    "cycint_from_json",
    "cycint_to_json",
    "field_to_json",
    "function_to_json",
    "load_code",
    "load_function",
    "parse_coeffs",
    "report_lines",
    "spec_to_json",
    "weights_csv",
]
