"""
Interchange schemas (pydantic v2) for every JSON file the toolkit reads or writes.

    FieldModel        {"p":3,"m":2,"poly":[1,0,1],"alpha":[0,1]}
    CycIntModel       {"p":3,"coords":["1","-1"]}
    FunctionModel     {"field":{...},"table":[...]}
    QuadraticModel    {"field":{...},"coeffs":[[...],...]}
    CodeModel         {"p":3,"n":9,"gen":[[...],...],"provenance":{...}}
    ReportModel       one VerifyReport per JSON line
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


class FieldModel(BaseModel):
    p: int = Field(..., ge=2)
    m: int = Field(..., ge=1)
    poly: Optional[List[int]] = None
    alpha: Optional[List[int]] = None


class CycIntModel(BaseModel):
    p: int = Field(..., ge=2)
    coords: List[str]

    @field_validator("coords")
    @classmethod
    def _decimal(cls, v: List[str]) -> List[str]:
        for c in v:
            int(c)
        return v


class FunctionModel(BaseModel):
    field: FieldModel
    table: List[int]
    label: Optional[str] = None


class QuadraticModel(BaseModel):
    field: FieldModel
    coeffs: List[List[int]]


class ProvenanceModel(BaseModel):
    which: Optional[str] = None
    p: Optional[int] = None
    m: Optional[int] = None
    s: Optional[int] = None
    coeffs: Optional[str] = None
    epsilon: Optional[int] = None
    balanced: Optional[bool] = None


class CodeModel(BaseModel):
    p: int = Field(..., ge=2)
    n: int = Field(..., ge=1)
    gen: List[List[int]]
    provenance: Optional[ProvenanceModel] = None

    @model_validator(mode="after")
    def _rows_match_length(self) -> "CodeModel":
        bad = [i for i, row in enumerate(self.gen) if len(row) != self.n]
        if bad:
            raise ValueError(f"generator rows {bad} do not have length n={self.n}")
        return self


class ExpectationModel(BaseModel):
    quantity: str
    relation: str = "=="
    value: Any = None


class ReportModel(BaseModel):
    target: str
    inputs: Dict[str, Any]
    expected: List[ExpectationModel] = []
    observed: Dict[str, Any] = {}
    verdict: Optional[str] = None
    reason: Optional[str] = None
    notes: List[str] = []
