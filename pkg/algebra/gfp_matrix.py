"""
Linear algebra over GF(p) on int64 numpy matrices: echelon forms, rank,
null spaces and independent-row selection.
"""

from typing import List, Tuple

import numpy as np


def inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def rref(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form mod p.

    Returns:
        (R, pivots) where R has the zero rows truncated and pivots lists the
        pivot column of each remaining row.
    """
    A = np.array(A, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {A.shape}")
    rows, cols = A.shape
    pivots: List[int] = []
    i = 0
    for j in range(cols):
        if i >= rows:
            break
        nz = np.nonzero(A[i:, j])[0]
        if nz.size == 0:
            continue
        i1 = i + int(nz[0])
        if i1 != i:
            A[[i, i1]] = A[[i1, i]]
        A[i] = A[i] * inv_mod(A[i, j], p) % p
        others = np.nonzero(A[:, j])[0]
        others = others[others != i]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, j], A[i])) % p
        pivots.append(j)
        i += 1
    return A[:i], pivots


def rank(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0} over GF(p)."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    R, pivots = rref(A, p) if A.shape[0] else (np.zeros((0, n), dtype=np.int64), [])
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for r, f in enumerate(free):
        basis[r, f] = 1
        for row, pc in enumerate(pivots):
            basis[r, pc] = (-R[row, f]) % p
    return basis


def independent_rows(A: np.ndarray, p: int) -> List[int]:
    """Indices of a maximal independent subset of rows, greedily in order."""
    A = np.asarray(A, dtype=np.int64) % p
    kept: List[int] = []
    echelon = np.zeros((0, A.shape[1]), dtype=np.int64)
    for idx, row in enumerate(A):
        trial = np.vstack([echelon, row[None, :]])
        R, piv = rref(trial, p)
        if len(piv) > echelon.shape[0]:
            kept.append(idx)
            echelon = R
    return kept


def in_span(A: np.ndarray, v: np.ndarray, p: int) -> bool:
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0:
        return not (np.asarray(v) % p).any()
    return rank(np.vstack([A, np.asarray(v)[None, :]]), p) == rank(A, p)
