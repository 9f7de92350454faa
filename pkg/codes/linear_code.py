"""
LINEAR CODES OVER GF(p)
=======================
Generator-matrix codes, exhaustive weight enumeration and Gram-matrix tests
(self-orthogonality, LCD, hull dimension).

Enumeration walks every message vector in chunks; chunks are tallied
independently (optionally on joblib workers) and merged in submission
order, so the result never depends on the worker count.

Usage:
    from codes.linear_code import LinearCode, enumerate_weights

    code = LinearCode(3, [[1, 1, 1, 0], [0, 1, 2, 1]])
    dist = enumerate_weights(code)
    dist.min_distance, gram_rank(code)
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from algebra.gfp_matrix import in_span, independent_rows, nullspace, rank
from common.errors import DegenerateRows, InvalidParameters, TooLarge
from config.settings import get_settings


@dataclass(frozen=True, eq=False)
class LinearCode:
    """[n, k] code given by a full-row-rank k x n generator matrix."""

    p: int
    gen: np.ndarray
    provenance: Optional[Dict] = None

    def __post_init__(self):
        gen = np.array(self.gen, dtype=np.int64) % self.p
        if gen.ndim != 2 or gen.shape[0] == 0 or gen.shape[1] == 0:
            raise InvalidParameters(f"generator must be a non-empty matrix, got shape {gen.shape}")
        r = rank(gen, self.p)
        if r != gen.shape[0]:
            raise DegenerateRows(f"{gen.shape[0]} generator rows have rank {r}")
        gen.setflags(write=False)
        object.__setattr__(self, "gen", gen)

    @classmethod
    def from_rows(
        cls,
        p: int,
        rows: Sequence[Sequence[int]],
        reduce: bool = False,
        provenance: Optional[Dict] = None,
    ) -> "LinearCode":
        """Build from rows; with ``reduce`` dependent rows are dropped instead of rejected."""
        rows = np.array(rows, dtype=np.int64) % p
        if reduce:
            keep = independent_rows(rows, p)
            if len(keep) < rows.shape[0]:
                logger.debug("dropped {} dependent generator rows", rows.shape[0] - len(keep))
            rows = rows[keep]
        return cls(p, rows, provenance)

    @property
    def n(self) -> int:
        return int(self.gen.shape[1])

    @property
    def k(self) -> int:
        return int(self.gen.shape[0])

    def __repr__(self) -> str:
        return f"LinearCode(p={self.p}, [{self.n}, {self.k}])"

    def encode(self, messages: np.ndarray) -> np.ndarray:
        return np.asarray(messages, dtype=np.int64) @ self.gen % self.p

    def gram(self) -> np.ndarray:
        return self.gen @ self.gen.T % self.p

    def dual(self) -> "LinearCode":
        if self.k == self.n:
            raise InvalidParameters("dual of the full space is the zero code")
        return LinearCode(self.p, nullspace(self.gen, self.p))

    def puncture(self, column: int) -> "LinearCode":
        rows = np.delete(self.gen, column, axis=1)
        return LinearCode.from_rows(self.p, rows, reduce=True, provenance=self.provenance)

    def contains(self, other: "LinearCode") -> bool:
        if other.p != self.p or other.n != self.n:
            return False
        return rank(np.vstack([self.gen, other.gen]), self.p) == self.k

    def contains_all_one(self) -> bool:
        return in_span(self.gen, np.ones(self.n, dtype=np.int64), self.p)

    def to_dict(self) -> Dict:
        data = {"p": self.p, "n": self.n, "gen": self.gen.tolist()}
        if self.provenance:
            data["provenance"] = self.provenance
        return data


@dataclass(frozen=True)
class WeightDistribution:
    """A_0..A_n of a length-n code."""

    n: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.n + 1:
            raise InvalidParameters(f"need {self.n + 1} counts, got {len(counts)}")
        if counts[0] != 1 or any(c < 0 for c in counts):
            raise InvalidParameters("weight distribution must have A_0 = 1 and no negative counts")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_weights(cls, n: int, weights: Dict[int, int]) -> "WeightDistribution":
        counts = [0] * (n + 1)
        for w, c in weights.items():
            counts[w] += c
        return cls(n, tuple(counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> Optional[int]:
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return None

    def nonzero(self) -> Dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    def enumerator(self) -> str:
        """Polynomial form, e.g. ``1+6z^3+66z^6+8z^9``."""
        terms = []
        for w, c in self.nonzero().items():
            if w == 0:
                terms.append(str(c))
                continue
            coef = "" if c == 1 else str(c)
            terms.append(coef + ("z" if w == 1 else f"z^{w}"))
        return "+".join(terms)

    def csv_rows(self) -> List[Tuple[int, int]]:
        return [(w, c) for w, c in self.nonzero().items()]


# ── enumeration ─────────────────────────────────────────────────────

def _tally(gen: np.ndarray, p: int, start: int, stop: int) -> np.ndarray:
    k, n = gen.shape
    idx = np.arange(start, stop, dtype=np.int64)
    digits = (idx[:, None] // (p ** np.arange(k, dtype=np.int64))[None, :]) % p
    words = digits @ gen % p
    return np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)


def enumeration_cost(p: int, k: int, n: int) -> int:
    return p ** k * n


def enumerate_weights(
    code: LinearCode,
    workers: Optional[int] = None,
    max_enum: Optional[int] = None,
) -> WeightDistribution:
    """Exact weight distribution by iterating all p^k messages.

    Raises:
        TooLarge: if p^k * n exceeds the enumeration cap.
    """
    settings = get_settings()
    cap = max_enum or settings.PLATEAU_MAX_ENUM
    total = code.p ** code.k
    if enumeration_cost(code.p, code.k, code.n) > cap:
        raise TooLarge(f"enumerating {code.p}^{code.k} messages of length {code.n} exceeds cap {cap}")

    chunk = settings.PLATEAU_ENUM_CHUNK
    bounds = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    workers = workers or settings.PLATEAU_WORKERS
    if workers > 1 and len(bounds) > 1:
        parts = Parallel(n_jobs=workers)(
            delayed(_tally)(code.gen, code.p, s, e) for s, e in bounds
        )
    else:
        parts = [_tally(code.gen, code.p, s, e) for s, e in bounds]

    counts = [0] * (code.n + 1)
    for part in parts:
        for w, c in enumerate(part.tolist()):
            counts[w] += c
    logger.debug("enumerated {} codewords of {}", total, code)
    return WeightDistribution(code.n, tuple(counts))


# ── Gram matrix tests ───────────────────────────────────────────────

def gram_rank(code: LinearCode) -> Tuple[int, int]:
    """(rank of G G^T, hull dimension k - rank)."""
    r = rank(code.gram(), code.p)
    return r, code.k - r


def is_self_orthogonal(code: LinearCode) -> bool:
    return not code.gram().any()


def is_lcd(code: LinearCode) -> bool:
    return gram_rank(code)[0] == code.k


def is_self_dual(code: LinearCode) -> bool:
    return 2 * code.k == code.n and is_self_orthogonal(code)
