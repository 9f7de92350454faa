"""
WALSH SPECTRUM AND PLATEAU CLASSIFICATION
=========================================
Exact Walsh transform

    W_f(beta) = sum_x zeta_p^(f(x) - tr(beta x))

computed as a histogram of exponents per beta (an O(q^2) table pass), and
the classification built on it: plateau level s, support, balancedness,
weak regularity (sign epsilon and dual f*), homogeneity exponents and the
WRP / WRPB membership.

Usage:
    from functions.walsh import walsh_transform, classify

    profile = classify(walsh_transform(f))
    profile.s, profile.epsilon, profile.wrp_class
"""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Dict, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from algebra.cyclo import CycInt, sqrt_pstar_pow
from algebra.gf import FieldCtx, FieldElem
from common.errors import TooLarge
from config.settings import get_settings
from functions.pfunction import PFunction


class WrpClass(str, Enum):
    WRP = "WRP"
    WRPB = "WRPB"
    WEAKLY_REGULAR_ONLY = "WeaklyRegularOnly"
    NON_WEAKLY_REGULAR = "NonWeaklyRegular"
    NOT_PLATEAUED = "NotPlateaued"


@dataclass
class WalshProfile:
    """Walsh spectrum of ``f`` plus the classification derived from it."""

    f: PFunction
    spectrum: List[CycInt]
    s: Optional[int] = None
    support: Tuple[int, ...] = ()
    balanced: Optional[bool] = None
    epsilon: Optional[int] = None
    fstar: Optional[np.ndarray] = None
    h: Optional[int] = None
    l: Optional[int] = None
    wrp_class: Optional[WrpClass] = None
    support_scalar_closed: Optional[bool] = None
    notes: List[str] = field(default_factory=list)

    @property
    def ctx(self) -> FieldCtx:
        return self.f.ctx

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def is_plateaued(self) -> bool:
        return self.s is not None

    @property
    def weakly_regular(self) -> bool:
        return self.epsilon is not None

    def value_at(self, beta: FieldElem) -> CycInt:
        return self.spectrum[self.ctx.index_of(beta)]

    def binary_values(self) -> List[int]:
        """Integer spectrum for p = 2."""
        return [w.as_rational_int() for w in self.spectrum]

    def squared_magnitudes(self) -> List[Optional[int]]:
        return [(w * w.conj()).as_rational_int() for w in self.spectrum]

    def to_dict(self) -> Dict:
        return {
            "p": self.p,
            "m": self.m,
            "s": self.s,
            "support_size": len(self.support),
            "balanced": self.balanced,
            "epsilon": self.epsilon,
            "h": self.h,
            "l": self.l,
            "wrp_class": self.wrp_class.value if self.wrp_class else None,
            "fstar_at_zero": int(self.fstar[self.ctx.zero_index]) if self.fstar is not None else None,
        }


# ── transform ───────────────────────────────────────────────────────

def _exponent_counts(ctx: FieldCtx, table: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Per beta in ``rows``: how many x give each exponent f(x) - tr(beta x)."""
    p = ctx.p
    exps = (table[None, :] - ctx.trace_products(rows)) % p
    flat = exps + (np.arange(len(rows), dtype=np.int64) * p)[:, None]
    return np.bincount(flat.ravel(), minlength=len(rows) * p).reshape(len(rows), p)


def walsh_transform(f: PFunction, workers: Optional[int] = None) -> WalshProfile:
    """Exact spectrum of ``f`` at every beta (canonical order)."""
    settings = get_settings()
    ctx = f.ctx
    q = ctx.q
    if q * q > settings.PLATEAU_MAX_ENUM:
        raise TooLarge(f"Walsh transform over q={q} needs {q * q} cells")

    block = max(1, (1 << 20) // q)
    slices = [np.arange(start, min(start + block, q)) for start in range(0, q, block)]
    workers = workers or settings.PLATEAU_WORKERS
    if workers > 1 and len(slices) > 1:
        parts = Parallel(n_jobs=workers)(
            delayed(_exponent_counts)(ctx, f.table, rows) for rows in slices
        )
    else:
        parts = [_exponent_counts(ctx, f.table, rows) for rows in slices]
    counts = np.vstack(parts)
    spectrum = [CycInt.from_full(ctx.p, row) for row in counts.tolist()]
    logger.debug("Walsh spectrum of {} over GF({}^{}) computed", f.label, ctx.p, ctx.m)
    return WalshProfile(f=f, spectrum=spectrum)


# ── classification ──────────────────────────────────────────────────

def _plateau_level(norms: List[Optional[int]], p: int, m: int) -> Optional[int]:
    if any(v is None for v in norms):
        return None
    levels = {v for v in norms if v}
    if len(levels) != 1:
        return None
    value = levels.pop()
    e = 0
    while value % p == 0:
        value //= p
        e += 1
    if value != 1 or not m <= e <= 2 * m:
        return None
    return e - m


def _weak_regularity(profile: WalshProfile) -> Tuple[Optional[int], Optional[np.ndarray]]:
    """Global sign and dual function, or (None, None) if no single sign fits."""
    p, m, s = profile.p, profile.m, profile.s
    fstar = np.zeros(profile.ctx.q, dtype=np.int64)
    signs = set()

    if p == 2:
        # Boolean case: W = (-1)^{f*} 2^{(m+s)/2}, sign fixed to +1
        target = 1 << ((m + s) // 2) if (m + s) % 2 == 0 else None
        for beta in profile.support:
            w = profile.spectrum[beta].as_rational_int()
            if target is None or abs(w) != target:
                return None, None
            fstar[beta] = 0 if w > 0 else 1
        return 1, fstar

    radius = sqrt_pstar_pow(p, m + s)
    candidates: Dict[Tuple[int, ...], Tuple[int, int]] = {}
    for j in range(p):
        unit = radius * CycInt.zeta_pow(p, j)
        candidates[unit.coords] = (1, j)
        candidates[(-unit).coords] = (-1, j)
    for beta in profile.support:
        hit = candidates.get(profile.spectrum[beta].coords)
        if hit is None:
            return None, None
        signs.add(hit[0])
        fstar[beta] = hit[1]
    if len(signs) != 1:
        return None, None
    return signs.pop(), fstar


def homogeneity_exponent(ctx: FieldCtx, values: np.ndarray, mask: Optional[np.ndarray] = None) -> Optional[int]:
    """Smallest even h, gcd(h-1, p-1) = 1, with values(a x) = a^h values(x) on ``mask``."""
    p = ctx.p
    if p == 2:
        return 2
    idx = np.arange(ctx.q)
    mask = np.ones(ctx.q, dtype=bool) if mask is None else mask
    for h in range(2, 2 * (p - 1) + 1, 2):
        if gcd(h - 1, p - 1) != 1:
            continue
        if all(
            np.array_equal(values[ctx.scale_idx(a, idx)][mask], (pow(a, h, p) * values[mask]) % p)
            for a in range(2, p)
        ):
            return h
    return None


def classify(profile: WalshProfile) -> WalshProfile:
    """Fill in every classification field of ``profile`` (in place) and return it."""
    ctx = profile.ctx
    p, m = ctx.p, ctx.m
    profile.s = _plateau_level(profile.squared_magnitudes(), p, m)
    if profile.s is None:
        profile.wrp_class = WrpClass.NOT_PLATEAUED
        logger.info("{} is not plateaued", profile.f.label)
        return profile

    profile.support = tuple(
        i for i, w in enumerate(profile.spectrum) if any(w.coords)
    )
    profile.balanced = ctx.zero_index not in set(profile.support)

    in_support = np.zeros(ctx.q, dtype=bool)
    in_support[list(profile.support)] = True
    idx = np.arange(ctx.q)
    profile.support_scalar_closed = all(
        in_support[ctx.scale_idx(a, idx)][in_support].all() for a in range(1, p)
    )

    profile.epsilon, profile.fstar = _weak_regularity(profile)
    profile.h = homogeneity_exponent(ctx, profile.f.table)
    if profile.fstar is not None and profile.support_scalar_closed:
        profile.l = homogeneity_exponent(ctx, profile.fstar, in_support)

    if not profile.weakly_regular:
        profile.wrp_class = WrpClass.NON_WEAKLY_REGULAR
    elif profile.h is None:
        profile.wrp_class = WrpClass.WEAKLY_REGULAR_ONLY
    elif profile.balanced:
        profile.wrp_class = WrpClass.WRPB
    else:
        profile.wrp_class = WrpClass.WRP
    logger.debug(
        "{}: s={} eps={} balanced={} class={}",
        profile.f.label, profile.s, profile.epsilon, profile.balanced, profile.wrp_class.value,
    )
    return profile


def analyse(f: PFunction, workers: Optional[int] = None) -> WalshProfile:
    """walsh_transform followed by classify."""
    return classify(walsh_transform(f, workers=workers))
