"""
SELF-DUAL EXTENSION
===================
Grows a self-orthogonal code C to a self-dual code containing it.

Existence is decided first from (p, n):

    p = 2 or p = 1 (mod 4):  n even
    p = 3 (mod 4):           n = 0 (mod 4)

Construction works in U, a complement of C inside C^perp, where the
dot product is non-degenerate modulo C. Each round picks an isotropic
vector v among the first three basis vectors of U (coefficient tuples in
lexicographic order; three variables always have a non-trivial zero),
adjoins it to the code, pairs it with some w having <v, w> != 0 and
projects the rest of U onto the orthogonal complement of span(v, w).
Each round adds one dimension to the code and removes two from U.
"""

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from algebra.gfp_matrix import inv_mod, nullspace, rref
from codes.linear_code import LinearCode, is_self_dual, is_self_orthogonal
from common.errors import NotSelfOrthogonalInput


@dataclass
class SelfDualResult:
    """Either ``code`` (self-dual, containing the input) or the violated condition."""

    code: Optional[LinearCode]
    violated: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.code is not None


def self_dual_condition(p: int, n: int) -> Optional[str]:
    """Violated existence condition for a self-dual [n, n/2] code over GF(p), if any."""
    if p % 4 == 3:
        if n % 4:
            return "n ≢ 0 mod 4"
        return None
    if n % 2:
        return "n odd"
    return None


def _complement_in_dual(code: LinearCode) -> List[np.ndarray]:
    """Vectors of C^perp that extend a basis of C to a basis of C^perp."""
    p = code.p
    echelon, pivots = rref(code.gen, p)
    basis: List[np.ndarray] = []
    for h in nullspace(code.gen, p):
        trial = np.vstack([echelon, h[None, :]])
        reduced, piv = rref(trial, p)
        if len(piv) > len(pivots):
            basis.append(h)
            echelon, pivots = reduced, piv
    return basis


def _find_isotropic(basis: List[np.ndarray], p: int) -> Optional[Tuple[np.ndarray, Tuple[int, ...]]]:
    head = basis[: min(3, len(basis))]
    for coeffs in itertools.product(range(p), repeat=len(head)):
        if not any(coeffs):
            continue
        v = sum(c * u for c, u in zip(coeffs, head)) % p
        if int(v @ v) % p == 0:
            return v, coeffs
    return None


def extend_to_self_dual(code: LinearCode) -> SelfDualResult:
    """Self-dual code containing the self-orthogonal ``code``, or the failed condition.

    Raises:
        NotSelfOrthogonalInput: if G G^T != 0.
    """
    p, n = code.p, code.n
    if not is_self_orthogonal(code):
        raise NotSelfOrthogonalInput(f"{code} is not self-orthogonal")
    violated = self_dual_condition(p, n)
    if violated:
        logger.info("no self-dual code of length {} over GF({}): {}", n, p, violated)
        return SelfDualResult(None, violated)

    space = _complement_in_dual(code)
    adjoined: List[np.ndarray] = []
    while space:
        hit = _find_isotropic(space, p)
        if hit is None:
            return SelfDualResult(None, f"no isotropic vector left in a {len(space)}-dimensional complement")
        v, coeffs = hit
        support = [i for i, c in enumerate(coeffs) if c]
        pairing = [j for j, u in enumerate(space) if int(v @ u) % p]
        # w keeps a partner for v; drop one basis vector v depends on
        j0 = next((j for j in pairing if j not in support or len(support) > 1), pairing[0])
        i0 = next(i for i in support if i != j0)
        w = space[j0]
        c = int(v @ w) % p
        e = int(w @ w) % p
        c_inv = inv_mod(c, p)
        rest = []
        for idx, x in enumerate(space):
            if idx in (i0, j0):
                continue
            b = int(x @ v) * c_inv % p
            a = (int(x @ w) - b * e) * c_inv % p
            rest.append((x - a * v - b * w) % p)
        adjoined.append(v)
        space = rest

    gen = np.vstack([code.gen] + [v[None, :] for v in adjoined]) if adjoined else code.gen
    result = LinearCode(p, gen, code.provenance)
    if not is_self_dual(result):
        return SelfDualResult(None, "extension did not close to a self-dual code")
    logger.info("extended [{}, {}] to self-dual [{}, {}]", n, code.k, result.n, result.k)
    return SelfDualResult(result)
