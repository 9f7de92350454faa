"""
Exact algebra: finite fields GF(p^m), cyclotomic integers Z[zeta_p] and
linear algebra over GF(p).
"""

from .gf import FieldCtx, FieldElem, field_new, trace, arith, default_poly, is_irreducible
from .cyclo import (
    CycInt,
    cyc,
    sigma,
    as_rational_int,
    pstar,
    legendre,
    quad_gauss_sum,
    sqrt_pstar_pow,
)
from .characters import field_quad_gauss_sum, expected_field_gauss_sum
from .gfp_matrix import rref, rank, nullspace, independent_rows, in_span, inv_mod

__all__ = [
    "FieldCtx",
    "FieldElem",
    "field_new",
    "trace",
    "arith",
    "default_poly",
    "is_irreducible",
    "CycInt",
    "cyc",
    "sigma",
    "as_rational_int",
    "pstar",
    "legendre",
    "quad_gauss_sum",
    "sqrt_pstar_pow",
    "field_quad_gauss_sum",
    "expected_field_gauss_sum",
    "rref",
    "rank",
    "nullspace",
    "independent_rows",
    "in_span",
    "inv_mod",
]
