"""Command-line front end.

Subcommands:
    coeff <mock-name> <n...>         exact coefficients of a mock theta series
    series <expr> --order N          expand a claim-language expression
    verify [claim-id|all] [...]      run the registry and/or user claim files
    enumerate <ruleset-name> <n>     signed colored-partition count (--list shows them)
    list                             print the registry with citations

Exit codes: 0 all pass, 1 any verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import claims as claims_mod
from . import partitions
from .claims import Claim, VerificationReport, verify
from .expr import ParseError, eval_expr, parse_expr
from .mock import MockThetaId, mock_series
from .series import SeriesError, format_series

_COLOR_NAMES = "abcdefghij"


@dataclass
class CliConfig:
    default_order: int = 500
    output_format: str = "text"
    parallel: bool = False
    claim_files: list[str] = field(default_factory=list)
    max_order: int = 50_000

    def __post_init__(self):
        if self.default_order < 1:
            raise ValueError("order must be at least 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qseries",
        description="Exact q-series engine and identity/congruence verifier",
    )
    sub = parser.add_subparsers(dest="command")

    c = sub.add_parser("coeff", help="print exact mock theta coefficients")
    c.add_argument("name", help="one of " + ", ".join(m.value for m in MockThetaId))
    c.add_argument("indices", nargs="+", type=int)

    s = sub.add_parser("series", help="expand an expression")
    s.add_argument("expr")
    s.add_argument("--order", type=int, default=50)

    v = sub.add_parser("verify", help="verify registry and/or file claims")
    v.add_argument("claim", nargs="?", default="all")
    v.add_argument("--order", type=int, default=None, help="override identity order")
    v.add_argument("--count", type=int, default=None, help="override congruence count")
    v.add_argument("--claims", action="append", default=[], metavar="FILE")
    v.add_argument("--format", choices=["text", "json", "csv"], default="text")
    v.add_argument("--parallel", action="store_true")
    v.add_argument("--max-order", type=int, default=50_000)

    e = sub.add_parser("enumerate", help="signed colored-partition count")
    e.add_argument("ruleset", help="one of " + ", ".join(sorted(partitions.RULESETS)))
    e.add_argument("n", type=int)
    e.add_argument("--list", action="store_true", dest="show_list")

    sub.add_parser("list", help="print the claim registry")
    return parser


def _cmd_coeff(args) -> int:
    try:
        mock_id = MockThetaId.from_name(args.name)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    top = max(args.indices)
    series = mock_series(mock_id, top + 1)
    print(" ".join(str(series.coefficient(n)) for n in args.indices))
    return 0


def _cmd_series(args) -> int:
    try:
        node = parse_expr(args.expr)
        series = eval_expr(node, args.order)
    except (ParseError, SeriesError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(format_series(series.truncate(args.order)))
    return 0


def _load_claims(paths: list[str]) -> list[Claim]:
    out = []
    for path in paths:
        with open(path, "r", encoding="utf-8") as handle:
            out.extend(claims_mod.parse_claim_file(handle.read(), source=path))
    return out


def _run_claims(
    claim_list: list[Claim], cfg: CliConfig, order: int | None, count: int | None
) -> list[VerificationReport]:
    def run(c: Claim) -> VerificationReport:
        return verify(c, order=order, count=count, max_order=cfg.max_order)

    if cfg.parallel and len(claim_list) > 1:
        with ThreadPoolExecutor() as pool:
            reports = list(pool.map(run, claim_list))
    else:
        reports = [run(c) for c in claim_list]
    # stable output contract: reports are ordered by claim id regardless of
    # which worker finished first
    return sorted(reports, key=lambda r: r.claim_id)


def _cmd_verify(args) -> int:
    cfg = CliConfig(
        output_format=args.format,
        parallel=args.parallel,
        claim_files=args.claims,
        max_order=args.max_order,
    )
    try:
        user_claims = _load_claims(cfg.claim_files)
    except (OSError, ValueError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    table = claims_mod.registry_by_id()
    for c in user_claims:
        if c.id in table:
            print(f"error: claim id {c.id!r} collides with a registry claim", file=sys.stderr)
            return 2
        table[c.id] = c
    if args.claim == "all":
        to_run = list(table.values())
    elif args.claim in table:
        to_run = [table[args.claim]]
    else:
        print(f"error: unknown claim id {args.claim!r} (try 'qseries list')", file=sys.stderr)
        return 2

    reports = _run_claims(to_run, cfg, args.order, args.count)
    if cfg.output_format == "json":
        print(claims_mod.reports_to_json(reports))
    elif cfg.output_format == "csv":
        print(claims_mod.reports_to_csv(reports), end="")
    else:
        for r in reports:
            line = f"{r.claim_id:24s} {r.status:7s} order={r.order:<6d} {r.elapsed_ms}ms"
            if r.first_failure is not None:
                f = r.first_failure
                line += f"  first n={f['n']} lhs={f['lhs']} rhs={f['rhs']}"
            if r.message:
                line += f"  [{r.message}]"
            print(line)
        counts = {s: sum(1 for r in reports if r.status == s) for s in ("pass", "fail", "skipped")}
        print(f"-- {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
    return 1 if any(r.status == "fail" for r in reports) else 0


def _cmd_enumerate(args) -> int:
    if args.ruleset not in partitions.RULESETS:
        print(f"error: unknown ruleset {args.ruleset!r}", file=sys.stderr)
        return 2
    rs = partitions.RULESETS[args.ruleset]
    if args.show_list:
        total = 0
        for parts, sign in partitions.iter_colored_partitions(rs, args.n):
            total += sign
            rendered = " ".join(
                f"{value}{_COLOR_NAMES[color]}" + (f"*{mult}" if mult > 1 else "")
                for value, color, mult in parts
            ) or "(empty)"
            print(f"{'+' if sign > 0 else '-'} {rendered}")
        print(f"signed count = {total}")
    else:
        print(partitions.count_signed(rs, args.n))
    return 0


def _cmd_list(args) -> int:
    for c in claims_mod.registry():
        size = c.order or c.count or c.bound
        print(f"{c.id:24s} {c.kind.value:18s} [{size}] {c.cite}")
        if c.notes:
            print(f"{'':24s} note: {c.notes}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "coeff": _cmd_coeff,
        "series": _cmd_series,
        "verify": _cmd_verify,
        "enumerate": _cmd_enumerate,
        "list": _cmd_list,
    }
    if args.command not in handlers:
        parser.print_usage(sys.stderr)
        return 2
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
