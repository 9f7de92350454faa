"""
Closed-form weight distributions of the augmented code cbar.

Odd p, m+s even (K = eps (p*)^((m+s)/2) / p):

    weight                     frequency
    0                          1
    q - p^(m-1) - (p-1)K       (p-1) p^(m-s)
    q - p^(m-1) + K            (p-1)^2 p^(m-s)
    q - p^(m-1)                p(p^m - 1) + p(p-1)(p^m - p^(m-s))
    q                          p - 1

Odd p, m+s odd (K = eps (p*)^((m+s+1)/2) / p):

    q - p^(m-1) - K            (p-1)^2 p^(m-s) / 2
    q - p^(m-1) + K            (p-1)^2 p^(m-s) / 2
    q - p^(m-1)                p(p^m - 1) + p(p-1)(p^m - p^(m-s)) + (p-1) p^(m-s)
    q                          p - 1

p = 2, m+s even:

    2^(m-1) -/+ 2^((m+s-2)/2)  2^(m-s) each
    2^(m-1)                    2^(m+2) - 2^(m-s+1) - 2
    2^m                        1
"""

from collections import OrderedDict
from typing import Dict, List, Tuple

from algebra.cyclo import pstar


def table_rows(p: int, m: int, s: int, epsilon: int) -> List[Tuple[int, int]]:
    """Formal (weight, frequency) rows; rows may share a weight."""
    q = p ** m
    base = q - p ** (m - 1)
    rows: List[Tuple[int, int]] = [(0, 1)]
    if p == 2:
        half = 2 ** ((m + s - 2) // 2)
        rows += [
            (2 ** (m - 1) - half, 2 ** (m - s)),
            (2 ** (m - 1) + half, 2 ** (m - s)),
            (2 ** (m - 1), 2 ** (m + 2) - 2 ** (m - s + 1) - 2),
            (q, 1),
        ]
        return rows

    spread = p ** (m - s)
    if (m + s) % 2 == 0:
        k = epsilon * pstar(p) ** ((m + s) // 2) // p
        rows += [
            (base - (p - 1) * k, (p - 1) * spread),
            (base + k, (p - 1) ** 2 * spread),
            (base, p * (q - 1) + p * (p - 1) * (q - spread)),
            (q, p - 1),
        ]
    else:
        k = epsilon * pstar(p) ** ((m + s + 1) // 2) // p
        rows += [
            (base - k, (p - 1) ** 2 * spread // 2),
            (base + k, (p - 1) ** 2 * spread // 2),
            (base, p * (q - 1) + p * (p - 1) * (q - spread) + (p - 1) * spread),
            (q, p - 1),
        ]
    return rows


def expected_distribution(p: int, m: int, s: int, epsilon: int) -> Dict[int, int]:
    """Table rows with coincident weights merged, sorted by weight."""
    merged: Dict[int, int] = {}
    for w, c in table_rows(p, m, s, epsilon):
        if c:
            merged[w] = merged.get(w, 0) + c
    return OrderedDict(sorted(merged.items()))


def coincident_weights(p: int, m: int, s: int, epsilon: int) -> List[int]:
    seen: Dict[int, int] = {}
    for w, c in table_rows(p, m, s, epsilon):
        if c:
            seen[w] = seen.get(w, 0) + 1
    return [w for w, n in seen.items() if n > 1]
