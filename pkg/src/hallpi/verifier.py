"""Cross-checks between the arithmetic oracle and the brute-force engine.

Four suites: oracle-vs-brute agreement on E/C/D, the D = U identity over
overgroup lattices, the D-implies-star consistency check, and a purely
symbolic exclusivity scan over the Condition II/III premises.  Any
disagreement is a hard failure of the build, not a warning.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from importlib import resources

from .arith import PrimeSet
from .hall_oracle import (
    check_condition_II,
    check_condition_III,
    decide_dpi,
    decide_epi,
)
from .lie_catalog import (
    CLASSICAL_FAMILIES,
    EXCEPTIONAL_FAMILIES,
    GroupId,
    GroupSpecError,
    group_order,
    parse_group_id,
    validate_simple,
)
from .perm_engine import (
    DEFAULT_MAX_ORDER,
    PermGroup,
    brute_property,
    construct_named,
)

__all__ = [
    "CrossCheckReport",
    "default_grid",
    "load_grid",
    "perm_realization",
    "cross_check_simple",
    "main_theorem_check",
    "star_consistency_check",
    "exclusivity_scan",
    "run_suite",
]


@dataclass
class CrossCheckReport:
    """Outcome of one verification suite.

    ``cases`` holds the comparisons actually made; out-of-scope and
    unconstructible inputs are listed separately and never counted as
    agreement.
    """

    suite: str
    cases: list[dict] = field(default_factory=list)
    out_of_scope: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)

    @property
    def agreements(self) -> int:
        return sum(1 for c in self.cases if c["agree"])

    @property
    def disagreements(self) -> int:
        return sum(1 for c in self.cases if not c["agree"])

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "cases": len(self.cases),
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "out_of_scope": len(self.out_of_scope),
            "skipped": len(self.skipped),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        payload = {
            "summary": self.summary(),
            "cases": self.cases,
            "out_of_scope": self.out_of_scope,
            "skipped": self.skipped,
        }
        return json.dumps(payload, indent=1, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.cases:
            mark = "ok " if c["agree"] else "FAIL"
            pi = ",".join(map(str, c["pi"]))
            lines.append(
                f"  [{mark}] {c['group']} pi={{{pi}}} {c['detail']}"
            )
        for c in self.out_of_scope:
            pi = ",".join(map(str, c["pi"]))
            lines.append(f"  [oos ] {c['group']} pi={{{pi}}}")
        for c in self.skipped:
            lines.append(f"  [skip] {c['group']}: {c['reason']}")
        s = self.summary()
        lines.append(
            f"  {s['cases']} cases, {s['disagreements']} disagreements, "
            f"{s['out_of_scope']} out of scope, {s['skipped']} skipped"
        )
        return "\n".join(lines)


def load_grid(path) -> list[tuple[GroupId, PrimeSet]]:
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    return [
        (parse_group_id(case["group"]), PrimeSet(case["pi"])) for case in data["cases"]
    ]


def default_grid() -> list[tuple[GroupId, PrimeSet]]:
    """The pinned desk-scale grid shipped with the package."""
    text = resources.files("hallpi.data").joinpath("default_grid.json").read_text()
    data = json.loads(text)
    return [
        (parse_group_id(case["group"]), PrimeSet(case["pi"])) for case in data["cases"]
    ]


def perm_realization(g: GroupId) -> str | None:
    """Named perm_engine spec realizing g concretely, if one exists."""
    if g.family == "A" and g.n == 2 and g.q <= 16:
        return f"psl2:{g.q}"
    return None


def _constructible(g: GroupId, order_bound: int):
    spec = perm_realization(g)
    if spec is None:
        return None, f"no permutation construction for {g}"
    if group_order(g) > order_bound:
        return None, f"order {group_order(g)} exceeds cap {order_bound}"
    return construct_named(spec), None


def cross_check_simple(
    grid: list[tuple[GroupId, PrimeSet]], order_bound: int = DEFAULT_MAX_ORDER
) -> CrossCheckReport:
    """decide_dpi vs brute D and decide_epi vs brute E and C, per case."""
    report = CrossCheckReport("cross")
    for g, pi in grid:
        entry = {"group": g.spec(), "pi": list(pi)}
        if 2 in pi:
            report.out_of_scope.append(entry)
            continue
        G, reason = _constructible(g, order_bound)
        if G is None:
            report.skipped.append({**entry, "reason": reason})
            continue
        t0 = time.perf_counter()
        oracle_d = decide_dpi(g, pi)
        oracle_e = decide_epi(g, pi)
        brute_d, _ = brute_property(G, pi, "D", order_bound)
        brute_e, _ = brute_property(G, pi, "E", order_bound)
        brute_c, _ = brute_property(G, pi, "C", order_bound)
        agree = (
            oracle_d.yes == brute_d
            and oracle_e.yes == brute_e
            and oracle_e.yes == brute_c
        )
        report.cases.append(
            {
                **entry,
                "oracle": {"dpi": oracle_d.holds, "epi": oracle_e.holds},
                "brute": {"dpi": brute_d, "epi": brute_e, "cpi": brute_c},
                "agree": agree,
                "detail": f"oracle d={oracle_d.holds}/e={oracle_e.holds} "
                f"brute d={brute_d}/e={brute_e}/c={brute_c}",
                "runtime": round(time.perf_counter() - t0, 4),
            }
        )
    return report


def main_theorem_check(
    grid: list[tuple[GroupId, PrimeSet]], order_bound: int = DEFAULT_MAX_ORDER
) -> CrossCheckReport:
    """Wherever brute D holds, brute U must hold as well."""
    report = CrossCheckReport("main-theorem")
    for g, pi in grid:
        entry = {"group": g.spec(), "pi": list(pi)}
        G, reason = _constructible(g, order_bound)
        if G is None:
            report.skipped.append({**entry, "reason": reason})
            continue
        t0 = time.perf_counter()
        brute_d, _ = brute_property(G, pi, "D", order_bound)
        if not brute_d:
            report.cases.append(
                {
                    **entry,
                    "agree": True,
                    "detail": "d=False (vacuous)",
                    "runtime": round(time.perf_counter() - t0, 4),
                }
            )
            continue
        brute_u, witness = brute_property(G, pi, "U", order_bound)
        case = {
            **entry,
            "agree": brute_u,
            "detail": f"d=True u={brute_u}",
            "runtime": round(time.perf_counter() - t0, 4),
        }
        if not brute_u:
            case["counterexample"] = witness
        report.cases.append(case)
    return report


def star_consistency_check(
    grid: list[tuple[GroupId, PrimeSet]], order_bound: int = DEFAULT_MAX_ORDER
) -> CrossCheckReport:
    """For p not in pi: brute D true must imply brute star true."""
    report = CrossCheckReport("star")
    for g, pi in grid:
        entry = {"group": g.spec(), "pi": list(pi)}
        if 2 in pi or g.p in pi:
            report.out_of_scope.append(entry)
            continue
        G, reason = _constructible(g, order_bound)
        if G is None:
            report.skipped.append({**entry, "reason": reason})
            continue
        t0 = time.perf_counter()
        brute_d, _ = brute_property(G, pi, "D", order_bound)
        if not brute_d:
            report.cases.append(
                {
                    **entry,
                    "agree": True,
                    "detail": "d=False (vacuous)",
                    "runtime": round(time.perf_counter() - t0, 4),
                }
            )
            continue
        star, witness = brute_property(G, pi, "star", order_bound)
        case = {
            **entry,
            "agree": star,
            "detail": f"d=True star={star}",
            "runtime": round(time.perf_counter() - t0, 4),
        }
        if not star:
            case["counterexample"] = witness
        report.cases.append(case)
    return report


# ---------------------------------------------------------------------------
# symbolic exclusivity scan

_SCAN_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31)
_SCAN_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32)


def scan_groups(max_param: int = 6, max_q: int = 32):
    """All valid simple-group descriptors with bounded parameters."""
    out = []
    for q in _SCAN_Q:
        if q > max_q:
            continue
        for fam in CLASSICAL_FAMILIES:
            lo = {"A": 2, "2A": 3, "B": 2, "C": 2, "D": 4, "2D": 4}[fam]
            for n in range(lo, max_param + 1):
                out.append(f"{fam}:{n}:q={q}")
        for fam in EXCEPTIONAL_FAMILIES:
            out.append(f"{fam}:q={q}")
    groups = []
    for spec in out:
        try:
            groups.append(parse_group_id(spec))
        except GroupSpecError:
            continue
    return groups


def exclusivity_scan(
    groups=None, subset_sizes: tuple[int, ...] = (2, 3)
) -> CrossCheckReport:
    """No input may satisfy a II-subcase and a III-subcase simultaneously,
    and every yes verdict must carry exactly one condition tag."""
    report = CrossCheckReport("exclusivity")
    if groups is None:
        groups = scan_groups()
    checked = 0
    violations = []
    for g in groups:
        order = group_order(g)
        primes = [t for t in _SCAN_PRIMES if order % t == 0]
        for k in subset_sizes:
            for sub in itertools.combinations(primes, k):
                pi = PrimeSet(sub)
                checked += 1
                try:
                    sub2, _ = check_condition_II(g, pi)
                    sub3, _ = check_condition_III(g, pi)
                except ValueError:
                    sub2 = sub3 = None
                if sub2 is not None and sub3 is not None:
                    violations.append(
                        {
                            "group": g.spec(),
                            "pi": list(pi),
                            "agree": False,
                            "detail": f"II({sub2}) and III({sub3}) both satisfied",
                        }
                    )
                    continue
                verdict = decide_dpi(g, pi)
                if verdict.holds == "yes" and verdict.condition is None:
                    violations.append(
                        {
                            "group": g.spec(),
                            "pi": list(pi),
                            "agree": False,
                            "detail": "yes verdict without a condition tag",
                        }
                    )
    report.cases = violations
    report.cases.append(
        {
            "group": "*",
            "pi": [],
            "agree": not violations,
            "detail": f"{checked} grid points scanned, {len(violations)} violations",
        }
    )
    return report


_SUITES = ("cross", "main-theorem", "star", "exclusivity")


def run_suite(
    name: str,
    grid: list[tuple[GroupId, PrimeSet]] | None = None,
    order_bound: int = DEFAULT_MAX_ORDER,
) -> list[CrossCheckReport]:
    """Run one suite or all of them on the given (default: pinned) grid."""
    if name not in _SUITES + ("all",):
        raise ValueError(f"unknown suite {name!r}; choose from {_SUITES + ('all',)}")
    if grid is None:
        grid = default_grid()
    reports = []
    names = _SUITES if name == "all" else (name,)
    for n in names:
        if n == "cross":
            reports.append(cross_check_simple(grid, order_bound))
        elif n == "main-theorem":
            reports.append(main_theorem_check(grid, order_bound))
        elif n == "star":
            reports.append(star_consistency_check(grid, order_bound))
        else:
            reports.append(exclusivity_scan())
    return reports
