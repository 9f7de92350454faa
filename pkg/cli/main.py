"""
PLATEAU CLI
===========
Builds codes from plateaued functions, analyses code files, checks the
closed-form claims and grows self-dual codes.

Usage:
    python plateau_cli.py construct --p 3 --m 2 --coeffs a8,a1 --which cbar
    python plateau_cli.py analyze code.json
    python plateau_cli.py verify --p 3 --m 2 --coeffs a8,a1 --targets table,dual,extended,lcd
    python plateau_cli.py scan --p 2 --m 8 --count 50 --seed 7
    python plateau_cli.py selfdual cstar.json
    python plateau_cli.py field-info --p 3 --m 2 --poly 1,0,1

Exit codes: 0 ok, 1 a verification failed, 2 usage, 3 precondition, 4 cap.
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, TextIO

from loguru import logger

from algebra.gf import FieldCtx, field_new
from codes.bounds import sphere_packing_classify
from codes.construct import CODE_KINDS, build
from codes.linear_code import enumerate_weights, gram_rank
from codes.macwilliams import macwilliams
from codes.self_dual import extend_to_self_dual
from common.errors import EXIT_FAIL, EXIT_OK, PlateauError, UsageError
from config.log_setup import setup_logging
from config.settings import get_settings
from formats.codec import (
    code_to_json,
    dumps,
    load_code,
    load_function,
    parse_coeffs,
    report_lines,
    weights_csv,
)
from functions.pfunction import PFunction
from functions.walsh import analyse
from verify.report import Verdict, VerifyReport
from verify.runner import check_caps, parse_targets, run_targets
from verify.scan import ScanSummary, exhaustive_specs, random_specs, scan

FORMATS = ("json", "csv", "pretty")


@dataclass
class CliConfig:
    """Parsed command line: one subcommand plus its options."""

    command: str
    format: str = "json"
    seed: int = 0
    workers: int = 1
    options: Dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        options = {k: v for k, v in vars(args).items() if k not in ("command", "format", "seed", "workers")}
        return cls(
            command=args.command,
            format=args.format,
            seed=args.seed,
            workers=args.workers or get_settings().PLATEAU_WORKERS,
            options=options,
        )


# ── argument parsing ────────────────────────────────────────────────

def _int_list(raw: str) -> List[int]:
    try:
        return [int(c) for c in raw.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}")


def _add_field_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="Characteristic (prime)")
    sub.add_argument("--m", type=int, required=True, help="Extension degree")
    sub.add_argument("--poly", type=_int_list, default=None,
                     help="Monic modulus, constant term first (e.g. 1,0,1)")
    sub.add_argument("--alpha-index", type=int, default=None,
                     help="Use alpha0^K as the primitive element")


def _add_function_args(sub: argparse.ArgumentParser) -> None:
    _add_field_args(sub)
    sub.add_argument("--coeffs", default=None, help="Quadratic coefficients, e.g. a8,a1 (aK = alpha^K)")
    sub.add_argument("--table", default=None, help="Function JSON file (value table or quadratic spec)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plateau", description="Linear codes from plateaued functions")
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--log-level", default=None, help="Overrides PLATEAU_LOG_LEVEL")
    subs = parser.add_subparsers(dest="command", required=True)

    construct = subs.add_parser("construct", help="Emit a code built from f")
    _add_function_args(construct)
    construct.add_argument("--which", choices=CODE_KINDS, default="cbar")

    analyze = subs.add_parser("analyze", help="Weights, distance, hull and bounds of a code file")
    analyze.add_argument("code_file")

    verify = subs.add_parser("verify", help="Check the closed-form claims for one function")
    _add_function_args(verify)
    verify.add_argument("--targets", default="all")
    verify.add_argument("--samples", type=int, default=100, help="Random (a, b, t) triples for nt")
    verify.add_argument("--all-alphas", action="store_true", help="Repeat for every primitive element")

    scan_p = subs.add_parser("scan", help="Verify many quadratic specs")
    _add_field_args(scan_p)
    scan_p.add_argument("--s", type=int, default=None, help="Keep only specs with this plateau level")
    group = scan_p.add_mutually_exclusive_group()
    group.add_argument("--count", type=int, default=None)
    group.add_argument("--exhaustive", action="store_true")
    scan_p.add_argument("--targets", default="all")
    scan_p.add_argument("--samples", type=int, default=100)

    selfdual = subs.add_parser("selfdual", help="Grow a self-orthogonal code to a self-dual one")
    selfdual.add_argument("code_file")

    info = subs.add_parser("field-info", help="Describe GF(p^m)")
    _add_field_args(info)
    return parser


# ── shared helpers ──────────────────────────────────────────────────

def _field(cfg: CliConfig) -> FieldCtx:
    opts = cfg.options
    ctx = field_new(opts["p"], opts["m"], opts.get("poly"))
    if opts.get("alpha_index") is not None:
        ctx = ctx.with_alpha(ctx.alpha_pow(opts["alpha_index"]))
    return ctx


def _function(cfg: CliConfig, ctx: Optional[FieldCtx] = None) -> PFunction:
    opts = cfg.options
    if opts.get("table"):
        return load_function(opts["table"])
    if not opts.get("coeffs"):
        raise UsageError("give --coeffs or --table")
    return parse_coeffs(ctx or _field(cfg), opts["coeffs"]).to_function()


def _params(n: int, k: int, d: Optional[int]) -> str:
    return f"[{n},{k},{d}]"


def _emit_reports(reports: Sequence[VerifyReport], cfg: CliConfig, out: TextIO) -> None:
    if cfg.format == "pretty":
        for r in reports:
            inputs = r.inputs
            label = f"p={inputs.get('p')} m={inputs.get('m')} s={inputs.get('s')} f={inputs.get('function')}"
            out.write(f"{r.target:<10} {r.verdict.value:<14} {label}  {r.reason or ''}\n")
    elif cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        for r in reports:
            writer.writerow([r.target, r.verdict.value, r.inputs.get("function"), r.reason or ""])
    else:
        out.write(report_lines(list(reports)))


# ── commands ────────────────────────────────────────────────────────

def cmd_construct(cfg: CliConfig, out: TextIO) -> int:
    f = _function(cfg)
    profile = analyse(f, workers=cfg.workers)
    code = build(f, cfg.options["which"], profile)
    if cfg.format == "pretty":
        out.write(f"{cfg.options['which']} [{code.n},{code.k}] over GF({code.p}) from {f.label}\n")
    else:
        out.write(code_to_json(code) + "\n")
    return EXIT_OK


def cmd_analyze(cfg: CliConfig, out: TextIO) -> int:
    code = load_code(cfg.options["code_file"])
    dist = enumerate_weights(code, workers=cfg.workers)
    rank_, hull = gram_rank(code)
    d = dist.min_distance
    summary = {
        "n": code.n,
        "k": code.k,
        "d": d,
        "gram_rank": rank_,
        "hull_dim": hull,
        "self_orthogonal": rank_ == 0,
        "lcd": hull == 0,
        "sphere_packing": sphere_packing_classify(code.n, code.k, d, code.p).value if d else None,
    }
    dual_k = code.n - code.k
    if dual_k:
        dual = macwilliams(dist, code.k, code.p)
        dd = dual.min_distance
        summary["dual"] = _params(code.n, dual_k, dd)
        summary["dual_sphere_packing"] = (
            sphere_packing_classify(code.n, dual_k, dd, code.p).value if dd else None
        )

    if cfg.format == "json":
        out.write(dumps({"summary": summary, "weights": dict(dist.csv_rows())}) + "\n")
        return EXIT_OK
    out.write(weights_csv(dist))
    if cfg.format == "pretty":
        for key, value in summary.items():
            if isinstance(value, bool):
                value = str(value).lower()
            out.write(f"{key}={value}\n")
        if dual_k and summary["dual_sphere_packing"]:
            out.write(f"dual {summary['dual']} {summary['dual_sphere_packing'].lower()}(sphere-packing)\n")
    return EXIT_OK


def cmd_verify(cfg: CliConfig, out: TextIO) -> int:
    opts = cfg.options
    targets = parse_targets(opts["targets"])
    ctx = _field(cfg)
    check_caps(ctx.p, ctx.m)
    if opts["all_alphas"]:
        if not opts.get("coeffs"):
            raise UsageError("--all-alphas needs --coeffs")
        contexts = [ctx.with_alpha(a) for a in ctx.primitive_elements()]
    else:
        contexts = [ctx]

    reports: List[VerifyReport] = []
    for c in contexts:
        f = _function(cfg, c)
        reports += run_targets(f, targets, workers=cfg.workers, seed=cfg.seed, samples=opts["samples"])
    _emit_reports(reports, cfg, out)
    failed = any(r.verdict == Verdict.FAIL for r in reports)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_scan(cfg: CliConfig, out: TextIO) -> int:
    opts = cfg.options
    targets = parse_targets(opts["targets"])
    ctx = _field(cfg)
    check_caps(ctx.p, ctx.m)
    if opts["exhaustive"]:
        specs = exhaustive_specs(ctx)
    else:
        specs = random_specs(ctx, opts["count"] or 100, cfg.seed)

    summary = ScanSummary()
    for report in scan(ctx, specs, targets, s_filter=opts["s"], workers=cfg.workers,
                       seed=cfg.seed, samples=opts["samples"], summary=summary):
        _emit_reports([report], cfg, out)
    if cfg.format == "pretty":
        out.write("=" * 60 + "\n")
        out.write(" ".join(f"{k}={v}" for k, v in summary.to_dict().items()) + "\n")
    else:
        out.write(dumps({"summary": summary.to_dict()}) + "\n")
    return EXIT_FAIL if summary.failed else EXIT_OK


def cmd_selfdual(cfg: CliConfig, out: TextIO) -> int:
    code = load_code(cfg.options["code_file"])
    result = extend_to_self_dual(code)
    if result.found:
        out.write(code_to_json(result.code) + "\n")
    else:
        out.write(dumps({"self_dual": False, "n": code.n, "violated": result.violated}) + "\n")
    return EXIT_OK


def cmd_field_info(cfg: CliConfig, out: TextIO) -> int:
    ctx = _field(cfg)
    if cfg.format == "pretty":
        out.write(f"GF({ctx.p}^{ctx.m}) modulus {list(ctx.poly)} alpha {list(ctx.alpha)}\n")
        for i, x in enumerate(ctx.elements()):
            name = "0" if i == ctx.zero_index else f"a{i}"
            out.write(f"{name:>6} {list(x)} tr={ctx.trace(x)}\n")
        return EXIT_OK
    data = ctx.to_dict()
    data["q"] = ctx.q
    data["primitive_count"] = len(ctx.primitive_elements())
    out.write(dumps(data) + "\n")
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "selfdual": cmd_selfdual,
    "field-info": cmd_field_info,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or get_settings().PLATEAU_LOG_LEVEL)
    cfg = CliConfig.from_args(args)
    try:
        return COMMANDS[cfg.command](cfg, out)
    except PlateauError as exc:
        logger.error("{}: {}", type(exc).__name__, exc)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
