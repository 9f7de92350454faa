"""Additive/multiplicative character sums over GF(q)."""

from algebra.cyclo import CycInt, sqrt_pstar_pow
from algebra.gf import FieldCtx
from common.errors import EvenPrime


def field_quad_gauss_sum(ctx: FieldCtx) -> CycInt:
    """G(eta, chi_1) = sum over x != 0 of eta(x) zeta^{tr(x)}.

    eta is the quadratic character of GF(q): eta(alpha^i) = (-1)^i.
    """
    if ctx.p == 2:
        raise EvenPrime("quadratic character needs odd characteristic")
    full = [0] * ctx.p
    for i, t in enumerate(ctx.trace_table[: ctx.q - 1].tolist()):
        full[t] += 1 if i % 2 == 0 else -1
    return CycInt.from_full(ctx.p, full)


def expected_field_gauss_sum(p: int, m: int) -> CycInt:
    """Closed form (-1)^(m-1) (sqrt p*)^m."""
    value = sqrt_pstar_pow(p, m)
    return value if m % 2 == 1 else -value
