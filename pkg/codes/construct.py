"""
CODES FROM PLATEAUED FUNCTIONS
==============================
For f : GF(q) -> GF(p) with f(0) = 0 builds

    cbar      {(a f(x) + tr(b x) + c)_x}          [q, m+2]
    cf        {(a f(x) + tr(b x))_x}              [q, m+1]
    cstar     cf with the x = 0 coordinate removed [q-1, m+1]
    extended  [I_{m+2} : G1]                       [q+m+2, m+2]

Generator rows of cbar are, in order: all-ones, f, tr(alpha^j x) for
j = 0..m-1. G1 is the same matrix with the f row replaced by f + 1.
Columns follow the canonical element order, so the last column is x = 0.

Usage:
    from codes.construct import construct_bundle

    bundle = construct_bundle(spec.to_function())
    bundle.cbar, bundle.extended
"""

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from loguru import logger

from codes.linear_code import LinearCode
from functions.pfunction import PFunction
from functions.walsh import WalshProfile, analyse

CODE_KINDS = ("cbar", "cstar", "cf", "extended")


def provenance(f: PFunction, profile: Optional[WalshProfile], which: str) -> Dict:
    ctx = f.ctx
    return {
        "which": which,
        "p": ctx.p,
        "m": ctx.m,
        "s": profile.s if profile else None,
        "coeffs": f.label,
        "epsilon": profile.epsilon if profile else None,
        "balanced": profile.balanced if profile else None,
    }


def _trace_rows(f: PFunction) -> np.ndarray:
    ctx = f.ctx
    return ctx.trace_products(list(range(ctx.m)))


def cbar_matrix(f: PFunction) -> np.ndarray:
    ones = np.ones((1, f.ctx.q), dtype=np.int64)
    return np.vstack([ones, f.table[None, :], _trace_rows(f)])


def g1_matrix(f: PFunction) -> np.ndarray:
    """cbar generator with the f row replaced by f + 1."""
    g = cbar_matrix(f).copy()
    g[1] = (g[1] + 1) % f.ctx.p
    return g


def build_cbar(f: PFunction, profile: Optional[WalshProfile] = None) -> LinearCode:
    return LinearCode(f.ctx.p, cbar_matrix(f), provenance(f, profile, "cbar"))


def build_cf(f: PFunction, profile: Optional[WalshProfile] = None) -> LinearCode:
    rows = np.vstack([f.table[None, :], _trace_rows(f)])
    return LinearCode(f.ctx.p, rows, provenance(f, profile, "cf"))


def build_cstar(f: PFunction, profile: Optional[WalshProfile] = None) -> LinearCode:
    rows = np.vstack([f.table[None, :], _trace_rows(f)])
    # canonical order puts x = 0 last; every entry there is a f(0) + tr(0) = 0
    return LinearCode(f.ctx.p, rows[:, :-1], provenance(f, profile, "cstar"))


def build_extended(
    f: PFunction,
    profile: Optional[WalshProfile] = None,
    transformed: bool = True,
) -> LinearCode:
    """[I : G1], or [I : G] with ``transformed=False``."""
    block = g1_matrix(f) if transformed else cbar_matrix(f)
    k = block.shape[0]
    which = "extended" if transformed else "extended_plain"
    gen = np.hstack([np.eye(k, dtype=np.int64), block])
    return LinearCode(f.ctx.p, gen, provenance(f, profile, which))


def build(f: PFunction, which: str, profile: Optional[WalshProfile] = None) -> LinearCode:
    builders = {
        "cbar": build_cbar,
        "cstar": build_cstar,
        "cf": build_cf,
        "extended": build_extended,
    }
    return builders[which](f, profile)


@dataclass
class ConstructionBundle:
    """Every code attached to one classified function."""

    f: PFunction
    profile: WalshProfile
    cbar: LinearCode
    cstar: LinearCode
    cf: LinearCode
    g1: np.ndarray
    extended: LinearCode


def construct_bundle(f: PFunction, profile: Optional[WalshProfile] = None) -> ConstructionBundle:
    """Classify ``f`` (if needed) and build all of its codes.

    Raises:
        DegenerateRows: if f is affine, so the rows cannot reach dimension m + 2.
    """
    profile = profile or analyse(f)
    cbar = build_cbar(f, profile)
    bundle = ConstructionBundle(
        f=f,
        profile=profile,
        cbar=cbar,
        cstar=build_cstar(f, profile),
        cf=build_cf(f, profile),
        g1=g1_matrix(f),
        extended=build_extended(f, profile),
    )
    logger.info(
        "built codes for {} over GF({}^{}): cbar [{}, {}], extended [{}, {}]",
        f.label, f.ctx.p, f.ctx.m, cbar.n, cbar.k, bundle.extended.n, bundle.extended.k,
    )
    return bundle
