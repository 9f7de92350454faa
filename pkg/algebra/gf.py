"""
FINITE FIELD ARITHMETIC
=======================
Exact arithmetic in GF(p) and GF(p^m) backed by log/antilog tables.

Elements are coefficient vectors in the power basis of a root of the modulus
polynomial. Internally every element also has a *canonical index*:

    index i < q-1  ->  alpha^i
    index q-1      ->  0

so the canonical enumeration d_1, ..., d_q of the field is simply
``range(q)`` and ends at zero. Generator matrices, function tables and Walsh
spectra are all laid out in this order.

Usage:
    from algebra.gf import field_new

    ctx = field_new(3, 2)            # GF(9), modulus x^2 + 1
    x = ctx.alpha_pow(5)
    ctx.trace(x), ctx.mul(x, ctx.inv(x))
"""

import itertools
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from sympy import isprime, primefactors

from common.errors import (
    DivisionByZero,
    FieldTooLarge,
    InvalidParameters,
    NonPrime,
    NoPrimitiveElement,
    ReduciblePoly,
)
from config.settings import get_settings


class FieldElem(tuple):
    """Coefficient vector (constant term first) of a field element."""

    __slots__ = ()

    def __new__(cls, coeffs: Sequence[int]):
        return super().__new__(cls, (int(c) for c in coeffs))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(self)

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self) -> str:
        return f"FieldElem({list(self)})"


# ── Polynomials over GF(p), coefficient lists constant term first ───

def _trim(a: List[int]) -> List[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    """Remainder of ``a`` modulo the monic polynomial ``mod``."""
    r = [c % p for c in a]
    d = len(mod) - 1
    for top in range(len(r) - 1, d - 1, -1):
        c = r[top]
        if c:
            shift = top - d
            for i, mc in enumerate(mod):
                r[shift + i] = (r[shift + i] - c * mc) % p
    return _trim(r[:d] if len(r) > d else r)


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_rem(prod, mod, p)


def _monic_polys(p: int, degree: int) -> Iterator[List[int]]:
    """All monic polynomials of ``degree`` in lexicographic order of (c_0, ..., c_{d-1})."""
    for lower in itertools.product(range(p), repeat=degree):
        yield list(lower) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(poly) - 1
    if m < 1 or poly[-1] % p != 1:
        return False
    for d in range(1, m // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not any(_poly_rem(poly, divisor, p)):
                return False
    return True


def default_poly(p: int, m: int) -> List[int]:
    """Lexicographically least monic irreducible polynomial of degree m."""
    for cand in _monic_polys(p, m):
        if is_irreducible(cand, p):
            return cand
    raise ReduciblePoly(f"no irreducible polynomial of degree {m} over GF({p})")


# ── Field context ────────────────────────────────────────────────────

class FieldCtx:
    """
    Immutable GF(p^m) context.

    Holds the modulus, the primitive element and the lookup tables that
    make every operation a table access. Contexts are shared freely
    between threads and worker processes.
    """

    def __init__(self, p: int, m: int, poly: Sequence[int], alpha: FieldElem):
        self.p = p
        self.m = m
        self.q = p ** m
        self.poly: Tuple[int, ...] = tuple(int(c) for c in poly)
        self.alpha = FieldElem(alpha)
        self._build_tables()

    # ── construction ──────────────────────────────────────────────

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        # multiplication-by-alpha as an m x m matrix over GF(p)
        mul_alpha = np.zeros((m, m), dtype=np.int64)
        for j in range(m):
            basis = [0] * m
            basis[j] = 1
            col = _poly_mulmod(basis, list(self.alpha), self.poly, p)
            mul_alpha[: len(col), j] = col

        vecs = np.zeros((q, m), dtype=np.int64)
        cur = np.zeros(m, dtype=np.int64)
        cur[0] = 1
        for i in range(q - 1):
            vecs[i] = cur
            cur = mul_alpha @ cur % p

        self._radix = p ** np.arange(m, dtype=np.int64)
        codes = vecs @ self._radix
        code_to_index = np.full(q, -1, dtype=np.int64)
        code_to_index[codes] = np.arange(q)
        if (code_to_index < 0).any():
            raise NoPrimitiveElement(f"{list(self.alpha)} does not generate GF({p}^{m})*")

        # trace of alpha^i is the Frobenius sum over exponents i * p^k
        frob = p ** np.arange(m, dtype=np.int64)
        exps = (np.arange(q - 1, dtype=np.int64)[:, None] * frob[None, :]) % (q - 1)
        tr_vecs = vecs[exps].sum(axis=1) % p
        if m > 1 and tr_vecs[:, 1:].any():
            raise NoPrimitiveElement("trace table left GF(p); tables are inconsistent")
        trace_idx = np.zeros(q, dtype=np.int64)
        trace_idx[: q - 1] = tr_vecs[:, 0]

        for arr in (vecs, codes, code_to_index, trace_idx):
            arr.setflags(write=False)
        self._vecs = vecs
        self._codes = codes
        self._code_to_index = code_to_index
        self._trace_idx = trace_idx
        self._fp_index = code_to_index[np.arange(p)]

    # ── identity ──────────────────────────────────────────────────

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.poly, self.alpha) == (other.p, other.m, other.poly, other.alpha)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.poly, self.alpha))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, poly={list(self.poly)}, alpha={list(self.alpha)})"

    def to_dict(self) -> Dict:
        return {"p": self.p, "m": self.m, "poly": list(self.poly), "alpha": list(self.alpha)}

    # ── index <-> element ─────────────────────────────────────────

    @property
    def zero_index(self) -> int:
        return self.q - 1

    def element(self, index: int) -> FieldElem:
        return FieldElem(self._vecs[index].tolist())

    def elements(self) -> List[FieldElem]:
        """Canonical enumeration alpha^0, ..., alpha^{q-2}, 0."""
        return [FieldElem(row) for row in self._vecs.tolist()]

    def index_of(self, x: Sequence[int]) -> int:
        if len(x) != self.m or any(not 0 <= c < self.p for c in x):
            raise InvalidParameters(f"{list(x)} is not an element of GF({self.p}^{self.m})")
        code = sum(int(c) * self.p ** i for i, c in enumerate(x))
        return int(self._code_to_index[code])

    def indices_of_codes(self, codes: np.ndarray) -> np.ndarray:
        return self._code_to_index[codes]

    @property
    def vectors(self) -> np.ndarray:
        """Read-only (q, m) array of coefficient vectors in canonical order."""
        return self._vecs

    def alpha_pow(self, k: int) -> FieldElem:
        return self.element(k % (self.q - 1))

    def from_int(self, c: int) -> FieldElem:
        """Embed c in GF(p) into the field."""
        coeffs = [0] * self.m
        coeffs[0] = c % self.p
        return FieldElem(coeffs)

    def fp_index(self, c: int) -> int:
        """Canonical index of the prime-field element c."""
        return int(self._fp_index[c % self.p])

    @property
    def zero(self) -> FieldElem:
        return FieldElem([0] * self.m)

    @property
    def one(self) -> FieldElem:
        return self.from_int(1)

    # ── index arithmetic (vectorised) ─────────────────────────────

    def add_idx(self, i, j):
        s = (self._vecs[i] + self._vecs[j]) % self.p
        return self._code_to_index[s @ self._radix]

    def mul_idx(self, i, j):
        i = np.asarray(i)
        j = np.asarray(j)
        z = self.q - 1
        out = (i + j) % z
        return np.where((i == z) | (j == z), z, out)

    def scale_idx(self, c: int, i):
        """Multiply elements (by index) by the prime-field scalar c."""
        return self.mul_idx(self.fp_index(c), i)

    # ── element arithmetic ────────────────────────────────────────

    def add(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return FieldElem((a + b) % self.p for a, b in zip(x, y))

    def sub(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return FieldElem((a - b) % self.p for a, b in zip(x, y))

    def neg(self, x: FieldElem) -> FieldElem:
        return FieldElem((-a) % self.p for a in x)

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return self.element(int(self.mul_idx(self.index_of(x), self.index_of(y))))

    def inv(self, x: FieldElem) -> FieldElem:
        i = self.index_of(x)
        if i == self.zero_index:
            raise DivisionByZero("inverse of 0")
        return self.element((-i) % (self.q - 1))

    def pow(self, x: FieldElem, e: int) -> FieldElem:
        i = self.index_of(x)
        if i == self.zero_index:
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return self.one if e == 0 else self.zero
        return self.element((i * e) % (self.q - 1))

    def trace(self, x: FieldElem) -> int:
        return int(self._trace_idx[self.index_of(x)])

    # ── trace tables ──────────────────────────────────────────────

    @property
    def trace_table(self) -> np.ndarray:
        """tr(d_i) for every canonical index i."""
        return self._trace_idx

    def trace_products(self, rows: Sequence[int]) -> np.ndarray:
        """Matrix T[r, j] = tr(d_rows[r] * d_j) over all canonical j."""
        rows = np.asarray(rows, dtype=np.int64)
        return self._trace_idx[self.mul_idx(rows[:, None], np.arange(self.q)[None, :])]

    # ── primitive elements ────────────────────────────────────────

    def primitive_elements(self) -> List[FieldElem]:
        """All generators alpha^k with gcd(k, q-1) = 1, by increasing k."""
        n = self.q - 1
        return [self.element(k) for k in range(max(n, 1)) if gcd(k, n) == 1]

    def with_alpha(self, alpha: Sequence[int]) -> "FieldCtx":
        """Same field and modulus with a different primitive element (new canonical order)."""
        return field_new(self.p, self.m, list(self.poly), alpha=alpha)


def _is_primitive(x: List[int], p: int, poly: Sequence[int], q: int) -> bool:
    if not any(x):
        return False
    one = [1]

    def power(base: List[int], e: int) -> List[int]:
        result, b = [1], base
        while e:
            if e & 1:
                result = _poly_mulmod(result, b, poly, p)
            b = _poly_mulmod(b, b, poly, p)
            e >>= 1
        return result

    for r in primefactors(q - 1):
        if _trim(power(x, (q - 1) // r)) == one:
            return False
    return q > 2 or _trim(list(x)) == one


def field_new(
    p: int,
    m: int,
    poly: Optional[Sequence[int]] = None,
    alpha: Optional[Sequence[int]] = None,
) -> FieldCtx:
    """
    Build a GF(p^m) context.

    Args:
        p: Characteristic, must be prime.
        m: Extension degree >= 1.
        poly: Monic degree-m modulus, constant term first. Defaults to the
            lexicographically least monic irreducible.
        alpha: Primitive element to use. Defaults to the first generator in
            coefficient-code order.

    Returns:
        FieldCtx with verified modulus and generator.

    Raises:
        NonPrime, ReduciblePoly, FieldTooLarge, NoPrimitiveElement
    """
    if not isinstance(p, int) or not isprime(p):
        raise NonPrime(f"p={p} is not prime")
    if m < 1:
        raise InvalidParameters(f"m={m} must be >= 1")
    q = p ** m
    cap = get_settings().PLATEAU_MAX_FIELD
    if q > cap:
        raise FieldTooLarge(f"q={q} exceeds the field cap {cap}")

    if poly is None:
        poly = default_poly(p, m)
        logger.debug("GF({}^{}) default modulus {}", p, m, poly)
    else:
        poly = [int(c) % p for c in poly]
        if len(poly) != m + 1 or poly[-1] != 1:
            raise ReduciblePoly(f"{poly} is not monic of degree {m}")
        if not is_irreducible(poly, p):
            raise ReduciblePoly(f"{poly} is reducible over GF({p})")

    if alpha is None:
        for code in range(1, q):
            cand = [(code // p ** i) % p for i in range(m)]
            if _is_primitive(cand, p, poly, q):
                alpha = cand
                break
        else:
            raise NoPrimitiveElement(f"GF({p}^{m}) has no generator under {poly}")
    else:
        alpha = [int(c) for c in alpha]
        if len(alpha) != m or any(not 0 <= c < p for c in alpha):
            raise InvalidParameters(f"alpha {alpha} is not an element of GF({p}^{m})")
        if not _is_primitive(alpha, p, poly, q):
            raise NoPrimitiveElement(f"{alpha} is not a primitive element")

    ctx = FieldCtx(p, m, poly, FieldElem(alpha))
    logger.debug("built {}", ctx)
    return ctx


def trace(ctx: FieldCtx, x: FieldElem) -> int:
    """Absolute trace tr_{q/p}(x) as a residue in [0, p)."""
    return ctx.trace(x)


def arith(ctx: FieldCtx, op: str, *operands) -> FieldElem:
    """Dispatch ``add``/``mul``/``neg``/``inv``/``pow`` on field elements."""
    if op == "add":
        return ctx.add(*operands)
    if op == "mul":
        return ctx.mul(*operands)
    if op == "neg":
        return ctx.neg(*operands)
    if op == "inv":
        return ctx.inv(*operands)
    if op == "pow":
        return ctx.pow(*operands)
    raise InvalidParameters(f"unknown field operation {op!r}")
