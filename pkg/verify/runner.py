"""Run a set of verification targets against one function."""

from typing import Dict, List, Optional, Sequence

from loguru import logger

from codes.construct import ConstructionBundle, construct_bundle
from codes.linear_code import WeightDistribution, enumerate_weights
from common.errors import DegenerateRows, TooLarge, UsageError
from config.settings import get_settings
from functions.pfunction import PFunction
from functions.walsh import WalshProfile, analyse
from verify.report import VerifyReport, report_inputs
from verify.theorems import (
    verify_dual,
    verify_extended,
    verify_lcd,
    verify_self_dual_existence,
    verify_selforth,
    verify_solution_counts,
    verify_table,
    verify_walsh,
)

ALL_TARGETS = ("table", "dual", "extended", "lcd", "selforth", "selfdual", "walsh", "nt")
CODE_TARGETS = frozenset({"table", "dual", "extended", "lcd", "selforth", "selfdual"})


def parse_targets(raw: Optional[str]) -> List[str]:
    if not raw or raw == "all":
        return list(ALL_TARGETS)
    targets = [t.strip() for t in raw.split(",") if t.strip()]
    unknown = [t for t in targets if t not in ALL_TARGETS]
    if unknown:
        raise UsageError(f"unknown targets {unknown}; choose from {', '.join(ALL_TARGETS)}")
    return targets


def check_caps(p: int, m: int) -> None:
    """Desk-scale limits applied before any verification work.

    Raises:
        TooLarge: binary degree above PLATEAU_MAX_BINARY_M, or enumerating the
            extended code would exceed PLATEAU_MAX_ENUM symbols.
    """
    settings = get_settings()
    if p == 2 and m > settings.PLATEAU_MAX_BINARY_M:
        raise TooLarge(f"binary m={m} exceeds PLATEAU_MAX_BINARY_M={settings.PLATEAU_MAX_BINARY_M}")
    q = p ** m
    work = p ** (m + 2) * (q + m + 2)
    if work > settings.PLATEAU_MAX_ENUM:
        raise TooLarge(f"GF({p}^{m}) codes need {work} enumeration steps, cap is {settings.PLATEAU_MAX_ENUM}")


class _Distributions:
    """Weight distributions computed on first use."""

    def __init__(self, bundle: ConstructionBundle, workers: Optional[int]):
        self.bundle = bundle
        self.workers = workers
        self._cache: Dict[str, WeightDistribution] = {}

    def __getitem__(self, which: str) -> WeightDistribution:
        if which not in self._cache:
            self._cache[which] = enumerate_weights(getattr(self.bundle, which), workers=self.workers)
        return self._cache[which]


def run_targets(
    f: PFunction,
    targets: Sequence[str] = ALL_TARGETS,
    profile: Optional[WalshProfile] = None,
    workers: Optional[int] = None,
    seed: int = 0,
    samples: int = 100,
) -> List[VerifyReport]:
    """Reports for ``targets`` in the order given.

    A function whose rows are degenerate (affine f) yields a single
    NotApplicable ``construct`` report in place of the code targets.
    """
    profile = profile or analyse(f, workers=workers)
    bundle: Optional[ConstructionBundle] = None
    dists: Optional[_Distributions] = None
    if CODE_TARGETS.intersection(targets):
        try:
            bundle = construct_bundle(f, profile)
            dists = _Distributions(bundle, workers)
        except DegenerateRows as exc:
            logger.info("{}: {}", f.label, exc)

    reports: List[VerifyReport] = []
    degenerate_reported = False
    for target in targets:
        if target in CODE_TARGETS and bundle is None:
            if not degenerate_reported:
                reports.append(
                    VerifyReport.not_applicable("construct", report_inputs(profile), "rows are linearly dependent (affine f)")
                )
                degenerate_reported = True
            continue
        # non-plateaued inputs are gated out before any distribution is read
        needs_cbar = target in ("table", "dual", "extended", "selforth") and profile.is_plateaued
        cbar = dists["cbar"] if needs_cbar else None
        if target == "table":
            reports.append(verify_table(profile, cbar))
        elif target == "dual":
            reports.append(verify_dual(profile, cbar))
        elif target == "extended":
            ext = dists["extended"] if profile.is_plateaued else None
            reports.append(verify_extended(profile, bundle, cbar, ext))
        elif target == "lcd":
            reports.append(verify_lcd(profile, bundle.extended, bundle.g1))
        elif target == "selforth":
            reports.append(verify_selforth(profile, bundle.cbar, cbar))
        elif target == "selfdual":
            reports.append(verify_self_dual_existence(profile, bundle))
        elif target == "walsh":
            reports.append(verify_walsh(profile))
        elif target == "nt":
            reports.append(verify_solution_counts(profile, samples=samples, seed=seed))
    for report in reports:
        logger.debug("{} {}: {}", f.label, report.target, report.verdict.value)
    return reports
