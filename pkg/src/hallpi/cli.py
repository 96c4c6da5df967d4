"""Command-line front end: decide, brute, scan, verify.

Exit codes for decide/brute: 0 = yes/true, 1 = no/false, 2 = out of scope,
3 and up = input or usage error.  verify exits nonzero on any disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys

from .arith import PrimeSet
from .hall_oracle import decide_cpi, decide_dpi, decide_epi, decide_upi
from .lie_catalog import GroupSpecError, group_order, parse_group_id
from .perm_engine import (
    DEFAULT_MAX_ORDER,
    OrderLimitError,
    brute_property,
    construct_named,
)
from .verifier import load_grid, run_suite

_PROP_MAP = {"epi": "E", "cpi": "C", "dpi": "D", "upi": "U", "star": "star"}
_DECIDERS = {"E": decide_epi, "C": decide_cpi, "D": decide_dpi, "U": decide_upi}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 by default; that slot means
    out-of-scope here, so usage errors are moved to 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _parse_pi(text: str) -> PrimeSet:
    try:
        return PrimeSet(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise GroupSpecError(f"bad pi list {text!r}: {exc}") from None


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise GroupSpecError(f"bad range {text!r}; use N or LO..HI") from None


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def build_parser() -> _Parser:
    parser = _Parser(prog="hallpi")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default="text")
    common.add_argument("--max-order", type=int, default=None)
    common.add_argument("--config", default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser(
        "decide", help="arithmetic oracle on a Lie-type group", parents=[common]
    )
    p.add_argument("--group", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--prop", required=True, choices=("epi", "cpi", "dpi", "upi"))

    p = sub.add_parser(
        "brute", help="definitional check on a concrete group", parents=[common]
    )
    p.add_argument("--group", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument(
        "--prop", required=True, choices=("epi", "cpi", "dpi", "upi", "star")
    )

    p = sub.add_parser(
        "scan", help="batch oracle table over a parameter grid", parents=[common]
    )
    p.add_argument("--family", required=True)
    p.add_argument("--n", default=None, help="dimension/rank, N or LO..HI")
    p.add_argument("--q", required=True, help="field size, N or LO..HI")
    p.add_argument("--pi-size", type=int, default=2)
    p.add_argument("--out", default=None)

    p = sub.add_parser(
        "verify", help="oracle-vs-brute verification suites", parents=[common]
    )
    p.add_argument(
        "suite", choices=("cross", "main-theorem", "star", "exclusivity", "all")
    )
    p.add_argument("--grid", default=None)
    return parser


def _cmd_decide(args) -> int:
    g = parse_group_id(args.group)
    pi = _parse_pi(args.pi)
    verdict = _DECIDERS[_PROP_MAP[args.prop]](g, pi)
    if args.format == "json":
        print(json.dumps(verdict.to_json()))
    else:
        extra = f" condition={verdict.condition}" if verdict.condition else ""
        if verdict.hall_cyclic:
            extra += " hall_cyclic=true"
        print(f"{verdict.group} pi={{{','.join(map(str, verdict.pi))}}} "
              f"{verdict.property}: {verdict.holds}{extra}")
    return {"yes": 0, "no": 1, "out_of_scope": 2}[verdict.holds]


def _cmd_brute(args, max_order: int) -> int:
    G = construct_named(args.group)
    pi = _parse_pi(args.pi)
    prop = _PROP_MAP[args.prop]
    holds, witness = brute_property(G, pi, prop, max_order)
    payload = {
        "group": args.group,
        "pi": list(pi),
        "property": prop,
        "holds": holds,
        "witness": witness,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"{args.group} pi={{{','.join(map(str, pi))}}} {prop}: {holds}")
        if witness:
            print(f"  witness: {json.dumps(witness)}")
    return 0 if holds else 1


_SCAN_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def _cmd_scan(args) -> int:
    qs = _parse_range(args.q)
    ns = _parse_range(args.n) if args.n else [None]
    rows = []
    for q in qs:
        for n in ns:
            spec = f"{args.family}:{n}:q={q}" if n else f"{args.family}:q={q}"
            try:
                g = parse_group_id(spec)
            except GroupSpecError:
                continue
            order = group_order(g)
            odd = [t for t in _SCAN_PRIMES if order % t == 0]
            for sub in itertools.combinations(odd, args.pi_size):
                pi = PrimeSet(sub)
                e = decide_epi(g, pi)
                c = decide_cpi(g, pi)
                d = decide_dpi(g, pi)
                u = decide_upi(g, pi)
                condition = d.condition or e.condition or ""
                rows.append(
                    [g.spec(), ",".join(map(str, pi)), e.holds, c.holds,
                     d.holds, u.holds, condition]
                )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["group", "pi", "epi", "cpi", "dpi", "upi", "condition"])
    writer.writerows(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


def _cmd_verify(args, max_order: int) -> int:
    grid = load_grid(args.grid) if args.grid else None
    reports = run_suite(args.suite, grid, max_order)
    for report in reports:
        if args.format == "json":
            print(report.to_json())
        else:
            print(report.to_text())
    return 0 if all(r.ok for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = {}
    try:
        config = _load_config(args.config)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"hallpi: cannot read config: {exc}", file=sys.stderr)
        return 3
    max_order = args.max_order or config.get("max_group_order", DEFAULT_MAX_ORDER)
    try:
        if args.command == "decide":
            return _cmd_decide(args)
        if args.command == "brute":
            return _cmd_brute(args, max_order)
        if args.command == "scan":
            return _cmd_scan(args)
        return _cmd_verify(args, max_order)
    except OrderLimitError as exc:
        print(f"hallpi: {exc}", file=sys.stderr)
        return 3
    except (GroupSpecError, ValueError) as exc:
        print(f"hallpi: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
