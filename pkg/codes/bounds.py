"""
Optimality and self-orthogonality criteria that only need (n, k, d) or a
weight distribution: the sphere-packing bound, divisibility tests and the
extendability classification of an identity-block extension.
"""

from enum import Enum
from math import comb
from typing import Optional

from codes.linear_code import WeightDistribution
from common.errors import InvalidParameters


class SpherePacking(str, Enum):
    OPTIMAL = "Optimal"
    ALMOST_OPTIMAL = "AlmostOptimal"
    UNCLASSIFIED = "Unclassified"


class DivisibilityVerdict(str, Enum):
    SELF_ORTHOGONAL = "SelfOrthogonal"
    NOT_CONCLUDED = "NotConcluded"
    NOT_SELF_ORTHOGONAL = "NotSelfOrthogonal"


class Extendability(str, Enum):
    OPTIMAL = "Optimal"
    ALMOST_OPTIMAL = "AlmostOptimal"
    NEITHER = "Neither"


def sphere_volume(n: int, radius: int, p: int) -> int:
    """Points within Hamming distance ``radius`` of a word in GF(p)^n."""
    return sum(comb(n, i) * (p - 1) ** i for i in range(min(radius, n) + 1))


def _excluded(n: int, k: int, d: int, p: int) -> bool:
    """True if no [n, k, d] code can exist by the sphere-packing bound."""
    t = (d - 1) // 2
    return p ** k * sphere_volume(n, t, p) > p ** n


def sphere_packing_classify(n: int, k: int, d: int, p: int) -> SpherePacking:
    """Optimal if an [n, k, d+1] code is excluded by sphere packing,
    AlmostOptimal if only [n, k, d+2] is."""
    if not 1 <= d <= n:
        raise InvalidParameters(f"minimum distance {d} outside 1..{n}")
    if _excluded(n, k, d + 1, p):
        return SpherePacking.OPTIMAL
    if _excluded(n, k, d + 2, p):
        return SpherePacking.ALMOST_OPTIMAL
    return SpherePacking.UNCLASSIFIED


def divisibility_selforth(dist: WeightDistribution, p: int, contains_all_one: bool) -> DivisibilityVerdict:
    """
    p = 2: every weight divisible by 4 implies self-orthogonal.
    p = 3: self-orthogonal exactly when every weight is divisible by 3.
    p >= 5: p-divisible and containing the all-one word implies self-orthogonal.
    """
    weights = [w for w in dist.nonzero() if w]
    if p == 2:
        if all(w % 4 == 0 for w in weights):
            return DivisibilityVerdict.SELF_ORTHOGONAL
        return DivisibilityVerdict.NOT_CONCLUDED
    if p == 3:
        if all(w % 3 == 0 for w in weights):
            return DivisibilityVerdict.SELF_ORTHOGONAL
        return DivisibilityVerdict.NOT_SELF_ORTHOGONAL
    if contains_all_one and all(w % p == 0 for w in weights):
        return DivisibilityVerdict.SELF_ORTHOGONAL
    return DivisibilityVerdict.NOT_CONCLUDED


def extendability(dual_distance: Optional[int], extended_dual_distance: Optional[int]) -> Extendability:
    """Compare dual distances before and after prepending an identity block."""
    if dual_distance is None or extended_dual_distance is None:
        return Extendability.NEITHER
    deficit = dual_distance - extended_dual_distance
    if deficit == 0:
        return Extendability.OPTIMAL
    if deficit == 1:
        return Extendability.ALMOST_OPTIMAL
    return Extendability.NEITHER
