"""
Conversion between the interchange schemas and domain objects.

Readers validate with ``Model.model_validate`` and turn decoding or
validation errors into ``MalformedInput``; writers emit compact JSON.
"""

import csv
import io
import json
from pathlib import Path
from typing import Dict, List, Union

from loguru import logger
from pydantic import BaseModel, ValidationError

from algebra.cyclo import CycInt
from algebra.gf import FieldCtx, field_new
from codes.linear_code import LinearCode, WeightDistribution
from common.errors import (
    InvalidParameters,
    MalformedInput,
    NonPrime,
    NoPrimitiveElement,
    ReduciblePoly,
    UsageError,
)
from formats.schemas import (
    CodeModel,
    CycIntModel,
    FieldModel,
    FunctionModel,
    QuadraticModel,
    ReportModel,
)
from functions.pfunction import PFunction, QuadraticSpec
from verify.report import VerifyReport

PathLike = Union[str, Path]


def _read(path: PathLike, model: type) -> BaseModel:
    try:
        payload = json.loads(Path(path).read_text())
        return model.model_validate(payload)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    except (json.JSONDecodeError, ValidationError) as exc:
        raise MalformedInput(f"{path} is not a valid {model.__name__}: {exc}") from exc


def dumps(data: Dict) -> str:
    return json.dumps(data, separators=(",", ":"))


# ── fields and cyclotomic integers ───────────────────────────────────

def field_from_model(model: FieldModel) -> FieldCtx:
    return field_new(model.p, model.m, model.poly, model.alpha)


def _file_field(path: PathLike, model: FieldModel) -> FieldCtx:
    try:
        return field_from_model(model)
    except (NonPrime, ReduciblePoly, NoPrimitiveElement, InvalidParameters) as exc:
        raise MalformedInput(f"{path}: bad field: {exc}") from exc


def field_to_json(ctx: FieldCtx) -> str:
    return dumps(ctx.to_dict())


def cycint_to_json(x: CycInt) -> str:
    return dumps(CycIntModel(**x.to_dict()).model_dump())


def cycint_from_json(text: str) -> CycInt:
    try:
        model = CycIntModel.model_validate_json(text)
    except ValidationError as exc:
        raise MalformedInput(f"not a CycInt: {exc}") from exc
    return CycInt.from_dict(model.model_dump())


# ── functions ────────────────────────────────────────────────────────

def parse_coeffs(ctx: FieldCtx, raw: str) -> QuadraticSpec:
    """``a8,a1`` style coefficients: ``aK`` is alpha^K, ``0`` is zero."""
    coeffs = []
    for token in (t.strip() for t in raw.split(",")):
        if token == "0":
            coeffs.append(ctx.zero)
        elif token.startswith("a") and token[1:].isdigit():
            coeffs.append(ctx.alpha_pow(int(token[1:])))
        else:
            raise UsageError(f"bad coefficient {token!r}; use aK or 0")
    return QuadraticSpec(ctx, tuple(coeffs))


def load_function(path: PathLike) -> PFunction:
    """A value-table file or a quadratic-spec file."""
    try:
        payload = json.loads(Path(path).read_text())
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: {exc}") from exc
    try:
        if isinstance(payload, dict) and "coeffs" in payload:
            model = QuadraticModel.model_validate(payload)
            ctx = _file_field(path, model.field)
            return QuadraticSpec(ctx, tuple(tuple(c) for c in model.coeffs)).to_function()
        model = FunctionModel.model_validate(payload)
    except (ValidationError, InvalidParameters) as exc:
        raise MalformedInput(f"{path} is not a function file: {exc}") from exc
    ctx = _file_field(path, model.field)
    try:
        return PFunction(ctx, model.table, label=model.label or Path(path).stem)
    except InvalidParameters as exc:
        raise MalformedInput(f"{path}: {exc}") from exc


def function_to_json(f: PFunction) -> str:
    return dumps(f.to_dict())


def spec_to_json(spec: QuadraticSpec) -> str:
    return dumps(spec.to_dict())


# ── codes ────────────────────────────────────────────────────────────

def code_from_model(model: CodeModel) -> LinearCode:
    provenance = model.provenance.model_dump(exclude_none=True) if model.provenance else None
    rows = [[c % model.p for c in row] for row in model.gen]
    return LinearCode.from_rows(model.p, rows, reduce=True, provenance=provenance)


def load_code(path: PathLike) -> LinearCode:
    code = code_from_model(_read(path, CodeModel))
    logger.debug("loaded {} from {}", code, path)
    return code


def code_to_json(code: LinearCode) -> str:
    model = CodeModel.model_validate(code.to_dict())
    return dumps({**model.model_dump(exclude_none=True), "k": code.k})


def weights_csv(dist: WeightDistribution) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["weight", "count"])
    writer.writerows(dist.csv_rows())
    return buf.getvalue()


# ── reports ──────────────────────────────────────────────────────────

def report_lines(reports: List[VerifyReport]) -> str:
    """JSON lines, one validated report per line."""
    return "".join(ReportModel.model_validate(r.to_dict()).model_dump_json() + "\n" for r in reports)
