"""
Scans over quadratic specs.

Specs are tuples of canonical coefficient indices (q - 1 meaning zero).
Random scans draw them from ``numpy.random.default_rng(seed)``; exhaustive
scans walk ``itertools.product`` in index order. Either way the stream of
results depends only on (field, specs, targets, seed), never on the
worker count: joblib returns batch results in submission order.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from algebra.gf import FieldCtx
from config.settings import get_settings
from functions.pfunction import QuadraticSpec, kernel_dim
from verify.report import Verdict, VerifyReport
from verify.runner import ALL_TARGETS, check_caps, run_targets

BATCH = 32


def spec_width(ctx: FieldCtx) -> int:
    return (ctx.m + 1) // 2 + 1


def exhaustive_specs(ctx: FieldCtx) -> Iterator[Tuple[int, ...]]:
    return itertools.product(range(ctx.q), repeat=spec_width(ctx))


def random_specs(ctx: FieldCtx, count: int, seed: int) -> List[Tuple[int, ...]]:
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, ctx.q, size=(count, spec_width(ctx)))
    return [tuple(int(v) for v in row) for row in draws]


@dataclass
class ScanSummary:
    specs: int = 0
    skipped: int = 0
    verdicts: Dict[str, int] = field(default_factory=lambda: {v.value: 0 for v in Verdict})

    def add(self, reports: Sequence[VerifyReport]) -> None:
        self.specs += 1
        for r in reports:
            self.verdicts[r.verdict.value] += 1

    @property
    def failed(self) -> int:
        return self.verdicts[Verdict.FAIL.value]

    def to_dict(self) -> Dict:
        return {"specs": self.specs, "skipped": self.skipped, **self.verdicts}


def _verify_spec(
    ctx: FieldCtx,
    indices: Tuple[int, ...],
    targets: Sequence[str],
    s_filter: Optional[int],
    seed: int,
    samples: int,
) -> Optional[List[VerifyReport]]:
    spec = QuadraticSpec.from_indices(ctx, indices)
    if s_filter is not None and kernel_dim(spec) != s_filter:
        return None
    return run_targets(spec.to_function(), targets, workers=1, seed=seed, samples=samples)


def scan(
    ctx: FieldCtx,
    specs,
    targets: Sequence[str] = ALL_TARGETS,
    s_filter: Optional[int] = None,
    workers: Optional[int] = None,
    seed: int = 0,
    samples: int = 100,
    summary: Optional[ScanSummary] = None,
) -> Iterator[VerifyReport]:
    """Stream reports for every spec in ``specs``; tallies go into ``summary``.

    Raises:
        TooLarge: if (p, m) is beyond the desk-scale caps.
    """
    check_caps(ctx.p, ctx.m)
    workers = workers or get_settings().PLATEAU_WORKERS
    summary = summary if summary is not None else ScanSummary()
    spec_iter = iter(specs)
    position = 0
    pool = Parallel(n_jobs=workers) if workers > 1 else None
    while True:
        batch = list(itertools.islice(spec_iter, BATCH))
        if not batch:
            break
        jobs = [
            (ctx, indices, targets, s_filter, seed + position + i, samples)
            for i, indices in enumerate(batch)
        ]
        if pool is not None:
            results = pool(delayed(_verify_spec)(*job) for job in jobs)
        else:
            results = [_verify_spec(*job) for job in jobs]
        position += len(batch)
        for reports in results:
            if reports is None:
                summary.skipped += 1
                continue
            summary.add(reports)
            yield from reports
        logger.info("scan GF({}^{}): {} specs done, {} failures", ctx.p, ctx.m, position, summary.failed)
