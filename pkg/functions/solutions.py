"""
Solution counts N_t = #{x : a f(x) + tr(b x) = t}, by brute force and by the
closed form that weak regularity gives.
"""

from typing import Optional

import numpy as np

from algebra.cyclo import legendre, pstar
from algebra.gf import FieldElem
from algebra.gfp_matrix import inv_mod
from functions.pfunction import PFunction
from functions.walsh import WalshProfile


def count_solutions(f: PFunction, a: int, b: FieldElem, t: int) -> int:
    ctx = f.ctx
    p = ctx.p
    tr_bx = ctx.trace_products([ctx.index_of(b)])[0]
    return int(np.count_nonzero((a * f.table + tr_bx - t) % p == 0))


def expected_solutions(profile: WalshProfile, a: int, b: FieldElem, t: int) -> Optional[int]:
    """Closed-form N_t; None when the function is not weakly regular plateaued.

    For a != 0 the count depends only on beta = -b/a: off the Walsh support
    it is p^(m-1); on the support it is read off f*(beta) and the parity of
    m + s. For p = 2 (a = 1) it is (q + (-1)^t W_f(b)) / 2.
    """
    ctx = profile.ctx
    p, m, q = ctx.p, ctx.m, ctx.q
    a %= p
    t %= p
    b_idx = ctx.index_of(b)

    if a == 0:
        if b_idx == ctx.zero_index:
            return q if t == 0 else 0
        return p ** (m - 1)

    if not profile.is_plateaued:
        return None

    if p == 2:
        w = profile.spectrum[b_idx].as_rational_int()
        return (q + (-1) ** t * w) // 2

    if not profile.weakly_regular:
        return None

    s, eps = profile.s, profile.epsilon
    beta = ctx.index_of(ctx.mul(ctx.neg(b), ctx.inv(ctx.from_int(a))))
    if beta not in set(profile.support):
        return p ** (m - 1)
    u = int(profile.fstar[beta])

    if (m + s) % 2 == 0:
        k = eps * pstar(p) ** ((m + s) // 2) // p
        return p ** (m - 1) + (p - 1) * k if t == (a * u) % p else p ** (m - 1) - k

    k = eps * pstar(p) ** ((m + s + 1) // 2) // p
    gap = (u - inv_mod(a, p) * t) % p
    if gap == 0:
        return p ** (m - 1)
    return p ** (m - 1) + legendre(gap, p) * k
