"""MacWilliams transform with exact Krawtchouk values, and the Pless A_3 of the duals."""

from typing import List

from loguru import logger

from algebra.cyclo import pstar
from codes.linear_code import WeightDistribution
from common.errors import InconsistentInput, InvalidParameters


def krawtchouk_column(n: int, p: int, i: int) -> List[int]:
    """K_0(i), ..., K_n(i) for the p-ary Krawtchouk polynomials of length n.

    Uses (j+1) K_{j+1} = ((n-j)(p-1) + j - p i) K_j - (p-1)(n-j+1) K_{j-1};
    every division is exact.
    """
    col = [1]
    prev = 0
    for j in range(n):
        nxt = ((n - j) * (p - 1) + j - p * i) * col[j] - (p - 1) * (n - j + 1) * prev
        prev = col[j]
        col.append(nxt // (j + 1))
    return col


def macwilliams(dist: WeightDistribution, k: int, p: int) -> WeightDistribution:
    """Weight distribution of the dual of a [n, k] code over GF(p)."""
    n = dist.n
    size = p ** k
    if dist.total != size:
        raise InconsistentInput(f"distribution sums to {dist.total}, expected {p}^{k} = {size}")

    acc = [0] * (n + 1)
    for i, a in enumerate(dist.counts):
        if a:
            for j, kv in enumerate(krawtchouk_column(n, p, i)):
                acc[j] += a * kv

    out = []
    for j, v in enumerate(acc):
        if v % size or v < 0:
            raise InconsistentInput(f"A_{j} of the dual is {v}/{size}; input is not a code distribution")
        out.append(v // size)
    dual = WeightDistribution(n, tuple(out))
    logger.debug("MacWilliams [{}, {}] -> dual d={}", n, k, dual.min_distance)
    return dual


def pless_a3_dual(p: int, m: int, s: int, epsilon: int) -> int:
    """Number of weight-3 words in the dual of the augmented plateaued code.

    Even m+s:
        p^(m-1)(p-1)(p-2)(p^m - p + eps (p*)^((m+s)/2) (p-1)) / 6
    Odd m+s:
        p^(m-1)(p-1)(p-2)(p^m - p) / 6
    """
    if p == 2:
        raise InvalidParameters("the A_3 formula is stated for odd p")
    if m + s < 3:
        raise InvalidParameters("the A_3 formula needs m + s >= 3")
    if (m + s) % 2 == 0:
        inner = p ** m - p + epsilon * pstar(p) ** ((m + s) // 2) * (p - 1)
    else:
        inner = p ** m - p
    value = p ** (m - 1) * (p - 1) * (p - 2) * inner
    if value % 6:
        raise InconsistentInput(f"A_3 numerator {value} is not divisible by 6")
    return value // 6
