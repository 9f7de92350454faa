"""
p-ary functions on GF(q) and quadratic forms.

A ``PFunction`` is a value table indexed by the canonical element order of its
field (zero last). ``QuadraticSpec`` describes

    Q(x) = sum_{i=0}^{ceil(m/2)} tr(a_i x^(p^i + 1))

and knows its linearized polynomial L(z), whose kernel dimension is the
plateau level of Q.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from algebra.gf import FieldCtx, FieldElem
from algebra.gfp_matrix import rank
from common.errors import InvalidParameters


@dataclass(frozen=True, eq=False)
class PFunction:
    """Function GF(q) -> GF(p) with f(0) = 0."""

    ctx: FieldCtx
    table: np.ndarray
    label: str = "table"

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        if table.shape != (self.ctx.q,):
            raise InvalidParameters(f"table needs {self.ctx.q} entries, got {table.shape}")
        if ((table < 0) | (table >= self.ctx.p)).any():
            raise InvalidParameters("table values must be residues in [0, p)")
        if table[self.ctx.zero_index] != 0:
            raise InvalidParameters("f(0) must be 0")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def value(self, x: FieldElem) -> int:
        return int(self.table[self.ctx.index_of(x)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PFunction):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.ctx, self.table.tobytes()))

    def to_dict(self) -> Dict:
        return {"field": self.ctx.to_dict(), "table": self.table.tolist()}


def coeff_label(ctx: FieldCtx, x: FieldElem) -> str:
    """``aK`` for alpha^K, ``0`` for zero."""
    i = ctx.index_of(x)
    return "0" if i == ctx.zero_index else f"a{i}"


@dataclass(frozen=True)
class QuadraticSpec:
    """Coefficients a_0..a_{ceil(m/2)} of a quadratic form on GF(p^m)."""

    ctx: FieldCtx
    coeffs: Tuple[FieldElem, ...] = field(default_factory=tuple)

    def __post_init__(self):
        expected = (self.ctx.m + 1) // 2 + 1
        if len(self.coeffs) != expected:
            raise InvalidParameters(
                f"quadratic spec over GF({self.ctx.p}^{self.ctx.m}) needs {expected} coefficients, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(FieldElem(c) for c in self.coeffs))

    @classmethod
    def from_indices(cls, ctx: FieldCtx, indices: Sequence[int]) -> "QuadraticSpec":
        """Coefficients given as canonical indices (q-1 meaning zero)."""
        return cls(ctx, tuple(ctx.element(i) for i in indices))

    @property
    def label(self) -> str:
        return ",".join(coeff_label(self.ctx, a) for a in self.coeffs)

    def coeff_indices(self) -> List[int]:
        return [self.ctx.index_of(a) for a in self.coeffs]

    def table(self) -> np.ndarray:
        """Q evaluated at every element, canonical order."""
        ctx = self.ctx
        p, q = ctx.p, ctx.q
        z = q - 1
        x = np.arange(z, dtype=np.int64)
        values = np.zeros(q, dtype=np.int64)
        for i, a_idx in enumerate(self.coeff_indices()):
            if a_idx == ctx.zero_index:
                continue
            exponent = (pow(p, i, z) + 1) % z if z > 1 else 0
            values[:z] += ctx.trace_table[(x * exponent + a_idx) % z]
        return values % p

    def to_function(self) -> PFunction:
        return PFunction(self.ctx, self.table(), label=self.label)

    def to_dict(self) -> Dict:
        return {"field": self.ctx.to_dict(), "coeffs": [list(a) for a in self.coeffs]}


def quad_eval(spec: QuadraticSpec, x: FieldElem) -> int:
    """Q(x) for a single element."""
    ctx = spec.ctx
    total = 0
    for i, a in enumerate(spec.coeffs):
        total += ctx.trace(ctx.mul(a, ctx.pow(x, ctx.p ** i + 1)))
    return total % ctx.p


def linearized_matrix(spec: QuadraticSpec) -> np.ndarray:
    """Rows are L(alpha^j), j = 0..m-1, as coefficient vectors."""
    ctx = spec.ctx
    p, m, z = ctx.p, ctx.m, ctx.q - 1
    rows = np.zeros((m, m), dtype=np.int64)
    for j in range(m):
        acc = np.zeros(m, dtype=np.int64)
        for i, a_idx in enumerate(spec.coeff_indices()):
            if a_idx == ctx.zero_index:
                continue
            # a_i z^(p^i)
            acc += ctx.vectors[(a_idx + j * pow(p, i, z)) % z]
            # a_i^(p^(m-i)) z^(p^(m-i))
            frob = pow(p, m - i, z)
            acc += ctx.vectors[(a_idx * frob + j * frob) % z]
        rows[j] = acc % p
    return rows


def kernel_dim(spec: QuadraticSpec) -> int:
    """dim over GF(p) of ker L, i.e. m - rank of the linearized map."""
    s = spec.ctx.m - rank(linearized_matrix(spec), spec.ctx.p)
    logger.debug("kernel_dim({}) = {}", spec.label, s)
    return s
