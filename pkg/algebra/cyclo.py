"""
CYCLOTOMIC INTEGERS
===================
Exact arithmetic in Z[zeta_p] over the integral basis zeta^1, ..., zeta^{p-1}.

1 is stored through the relation 1 = -(zeta + zeta^2 + ... + zeta^{p-1}), so
every element has exactly one coordinate vector and equality is coordinate
equality. Walsh values, Gauss sums and sqrt(p*) powers all live here, which
keeps every comparison in the toolkit free of floating-point tolerance.

Usage:
    from algebra.cyclo import CycInt, quad_gauss_sum

    g = quad_gauss_sum(5)
    assert g * g == CycInt.from_int(5, 5)
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from sympy import legendre_symbol

from common.errors import EvenPrime, InvalidParameters, MixedRootOrder, NotAUnit


@dataclass(frozen=True)
class CycInt:
    """Element of Z[zeta_p]; ``coords[i]`` is the coefficient of zeta^(i+1)."""

    p: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.p - 1:
            raise InvalidParameters(f"CycInt over p={self.p} needs {self.p - 1} coordinates")

    # ── constructors ──────────────────────────────────────────────

    @classmethod
    def from_full(cls, p: int, full: Sequence[int]) -> "CycInt":
        """Reduce sum_j full[j] * zeta^j (length p) onto the integral basis."""
        a0 = int(full[0])
        return cls(p, tuple(int(full[j]) - a0 for j in range(1, p)))

    @classmethod
    def from_int(cls, p: int, n: int) -> "CycInt":
        return cls(p, (-int(n),) * (p - 1))

    @classmethod
    def zeta_pow(cls, p: int, j: int) -> "CycInt":
        full = [0] * p
        full[j % p] = 1
        return cls.from_full(p, full)

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    # ── ring operations ───────────────────────────────────────────

    def _check(self, other: "CycInt") -> None:
        if self.p != other.p:
            raise MixedRootOrder(f"zeta_{self.p} vs zeta_{other.p}")

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, (int, np.integer)):
            return CycInt.from_int(self.p, int(other))
        return NotImplemented

    def full(self) -> Tuple[int, ...]:
        """Coefficients on zeta^0..zeta^{p-1} with zeta^0 coefficient 0."""
        return (0,) + self.coords

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CycInt(self.p, tuple(a * int(other) for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.full()):
            if a:
                for j, b in enumerate(other.full()):
                    if b:
                        acc[(i + j) % p] += a * b
        return CycInt.from_full(p, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            raise InvalidParameters("negative powers are not defined in Z[zeta_p]")
        result, base = CycInt.from_int(self.p, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sigma(self, a: int) -> "CycInt":
        """Galois automorphism zeta -> zeta^a."""
        p = self.p
        if a % p == 0:
            raise NotAUnit(f"{a} is not a unit mod {p}")
        full = [0] * p
        for j, c in enumerate(self.full()):
            full[(a * j) % p] += c
        return CycInt.from_full(p, full)

    def conj(self) -> "CycInt":
        return self.sigma(self.p - 1)

    def as_rational_int(self) -> Optional[int]:
        """n if this element equals n * 1, otherwise None."""
        first = self.coords[0]
        if all(c == first for c in self.coords):
            return -first
        return None

    def approx(self) -> complex:
        """Floating render for debugging output only."""
        k = np.arange(1, self.p)
        return complex(np.dot(np.array(self.coords, dtype=float), np.exp(2j * np.pi * k / self.p)))

    def to_dict(self) -> Dict:
        return {"p": self.p, "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_dict(cls, data: Dict) -> "CycInt":
        return cls(int(data["p"]), tuple(int(c) for c in data["coords"]))


# ── module-level operations ─────────────────────────────────────────

def cyc(op: str, *operands) -> CycInt:
    """Dispatch helper: ``cyc("add", x, y)``, ``cyc("zeta_pow", p, j)``, ``cyc("from_int", p, n)``."""
    if op == "add":
        return operands[0] + operands[1]
    if op == "sub":
        return operands[0] - operands[1]
    if op == "mul":
        return operands[0] * operands[1]
    if op == "zeta_pow":
        return CycInt.zeta_pow(*operands)
    if op == "from_int":
        return CycInt.from_int(*operands)
    raise InvalidParameters(f"unknown cyclotomic operation {op!r}")


def sigma(a: int, x: CycInt) -> CycInt:
    return x.sigma(a)


def as_rational_int(x: CycInt) -> Optional[int]:
    return x.as_rational_int()


def pstar(p: int) -> int:
    """Signed prime (-1)^((p-1)/2) p."""
    if p == 2:
        raise EvenPrime("p* is defined for odd p only")
    return p if p % 4 == 1 else -p


def legendre(a: int, p: int) -> int:
    """Quadratic character eta_0 on GF(p), with eta_0(0) = 0."""
    a %= p
    return 0 if a == 0 else int(legendre_symbol(a, p))


@lru_cache(maxsize=None)
def quad_gauss_sum(p: int) -> CycInt:
    """G = sum_{x in GF(p)*} eta_0(x) zeta^x; G^2 = p*."""
    if p == 2:
        raise EvenPrime("quadratic Gauss sum needs an odd prime")
    full = [0] + [legendre(x, p) for x in range(1, p)]
    return CycInt.from_full(p, full)


@lru_cache(maxsize=None)
def sqrt_pstar_pow(p: int, e: int) -> CycInt:
    """(sqrt p*)^e realised as quad_gauss_sum(p)^e."""
    if e < 0:
        raise InvalidParameters("exponent must be non-negative")
    ps = pstar(p)
    if e % 2 == 0:
        return CycInt.from_int(p, ps ** (e // 2))
    return quad_gauss_sum(p) * (ps ** ((e - 1) // 2))
