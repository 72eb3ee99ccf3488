"""Exhaustive enumeration of finite topologies and a theorem-checking harness.

Topologies on ``n`` labeled points are generated as preorders by adding one
point at a time: a preorder on ``n`` points is its restriction to the first
``n - 1`` points plus the set ``D`` of old points below the new one and the
set ``U`` of old points above it.  ``D`` must be down-closed, ``U`` up-closed,
and every point of ``D`` must already lie below every point of ``U``.  Every
preorder arises exactly once this way.
"""

from __future__ import annotations

import ast
import itertools
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import finspace as fs
from .finspace import FiniteSpace, PropertyProfile

log = logging.getLogger(__name__)

DEFAULT_BOUND = 5

CHECKS = (
    "prop1.20",
    "cor1.30",
    "cor1.35",
    "cor2.45",
    "cor2.70",
    "prop2.60",
    "prop1.41",
    "components",
    "agreement",
)


class BoundExceeded(ValueError):
    pass


def _check_bound(n: int, bound: int | None) -> None:
    if n < 0:
        raise ValueError("point count must be nonnegative")
    limit = DEFAULT_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"n = {n} exceeds the enumeration bound {limit}; raise it explicitly")


def _extend(leq: tuple[tuple[bool, ...], ...]) -> Iterator[tuple[tuple[bool, ...], ...]]:
    n = len(leq)
    pts = range(n)
    subsets = [[x for x in pts if bits >> x & 1] for bits in range(1 << n)]
    downs = [s for s in subsets if all(a in s for b in s for a in pts if leq[a][b])]
    ups = [s for s in subsets if all(b in s for a in s for b in pts if leq[a][b])]
    for d in downs:
        for u in ups:
            if all(leq[a][b] for a in d for b in u):
                # old x lies below the new point iff x in d, above it iff x in u
                rows = tuple(row + (x in d,) for x, row in enumerate(leq))
                yield rows + (tuple(x in u for x in pts) + (True,),)


def _labeled(n: int) -> Iterator[tuple[tuple[bool, ...], ...]]:
    if n == 0:
        yield ()
        return
    for smaller in _labeled(n - 1):
        yield from _extend(smaller)


def all_spaces(n: int, iso: bool = False, bound: int | None = None) -> Iterator[FiniteSpace]:
    """Every topology on ``n`` labeled points, each exactly once.

    With ``iso=True`` only the first representative of each isomorphism class
    is kept.
    """
    _check_bound(n, bound)
    seen: set = set()
    for leq in _labeled(n):
        space = FiniteSpace(n, leq)
        if iso:
            key = fs.canonical_form(space)
            if key in seen:
                continue
            seen.add(key)
        yield space


def count_preorders_by_filter(n: int) -> int:
    """Independent count: filter all ``2**(n*(n-1))`` off-diagonal relations."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    count = 0
    for bits in range(1 << len(off)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(off):
            if bits >> k & 1:
                rel[i][j] = True
        if all(
            rel[i][k] or not (rel[i][j] and rel[j][k])
            for i in range(n) for j in range(n) for k in range(n)
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# theorem checks


def check_space(space: FiniteSpace, checks=CHECKS) -> tuple[dict[str, bool], list[tuple[str, dict]]]:
    """Run the named invariants on one space.

    Returns per-check pass flags and a list of ``(check, witness)`` failures.
    """
    prof = fs.condition_profile(space)
    pts = list(space.points)
    irr = [frozenset(c) for c in prof.irreducible_components]
    failures: list[tuple[str, dict]] = []
    results: dict[str, bool] = {}

    def record(name, ok, witness=None):
        results[name] = ok
        if not ok:
            failures.append((name, witness or {}))

    p = [None, prof.p1, prof.p2, prof.p3, prof.p4, prof.p5, prof.p6]
    pointwise_all = all(prof.pointwise_irreducible)

    if "prop1.20" in checks:
        # the full six-way equivalence holds because irr is finite here
        ok = len(set(p[1:])) == 1
        ok = ok and (not p[3] or p[4]) and (not p[5] or p[6])
        record("prop1.20", ok, {"p": p[1:]})
    if "cor1.30" in checks:
        # a locally irreducible point's minimal open set meets one component
        ok = not prof.p1 or all(
            sum(1 for c in irr if c & fs.minimal_open_neighbourhood(space, x)) == 1 for x in pts
        )
        record("cor1.30", ok)
    if "cor1.35" in checks:
        rhs = prof.nonempty and prof.connected and prof.p1
        record("cor1.35", prof.irreducible == rhs, {"irreducible": prof.irreducible, "rhs": rhs})
    if "cor2.45" in checks:
        record("cor2.45", prof.p6 == pointwise_all, {"p6": prof.p6, "pointwise": pointwise_all})
    if "cor2.70" in checks:
        record("cor2.70", prof.p1 == pointwise_all, {"p1": prof.p1, "pointwise": pointwise_all})
    if "prop2.60" in checks:
        bad = [
            x for x in pts
            if fs.has_irreducible_neighbourhood(space, x, "brute") != prof.pointwise_irreducible[x]
        ]
        record("prop2.60", not bad, {"points": bad})
    if "prop1.41" in checks:
        if prof.t0:
            low = prof.dimension is None or prof.dimension <= 0
            record("prop1.41", prof.totally_disconnected == low,
                   {"dimension": prof.dimension, "totally_disconnected": prof.totally_disconnected})
    if "components" in checks:
        conn = [frozenset(c) for c in prof.connected_components]
        ok = all(fs.is_closed(space, c) and fs.is_connected(fs.subspace(space, c)) for c in irr)
        ok = ok and all(any(z <= c for z in irr) for c in conn)
        record("components", ok)
    if "agreement" in checks:
        mism = []
        for bits in range(1 << space.n):
            s = [x for x in pts if bits >> x & 1]
            if fs.is_irreducible_subset(space, s, "fast") != fs.is_irreducible_subset(space, s, "brute"):
                mism.append({"subset": s})
                break
        if set(fs.irreducible_components(space, "fast")) != set(fs.irreducible_components(space, "brute")):
            mism.append({"irreducible_components": True})
        if fs.is_locally_irreducible(space, "fast") != fs.is_locally_irreducible(space, "brute"):
            mism.append({"locally_irreducible": True})
        if fs.dimension(space, "fast") != fs.dimension(space, "brute"):
            mism.append({"dimension": True})
        if fs.is_connected(space, "fast") != fs.is_connected(space, "brute"):
            mism.append({"connected": True})
        record("agreement", not mism, {"mismatches": mism})
    return results, failures


@dataclass
class EnumerationReport:
    n: int
    total: int = 0
    per_size: dict[int, int] = field(default_factory=dict)
    passes: dict[str, int] = field(default_factory=dict)
    violations: list[tuple[FiniteSpace, str, dict]] = field(default_factory=list)
    counterexample_hits: list[tuple[str, FiniteSpace]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "EnumerationReport") -> "EnumerationReport":
        out = EnumerationReport(max(self.n, other.n), self.total + other.total)
        for d in (self.per_size, other.per_size):
            for k, v in d.items():
                out.per_size[k] = out.per_size.get(k, 0) + v
        for d in (self.passes, other.passes):
            for k, v in d.items():
                out.passes[k] = out.passes.get(k, 0) + v
        out.violations = sorted(self.violations + other.violations, key=_violation_key)
        out.counterexample_hits = sorted(
            self.counterexample_hits + other.counterexample_hits,
            key=lambda h: (h[0], h[1].n, h[1].leq),
        )
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "per_size": {str(k): v for k, v in sorted(self.per_size.items())},
            "passes": dict(sorted(self.passes.items())),
            "violations": [
                {"space": s.to_json(), "invariant": inv, "witness": w} for s, inv, w in self.violations
            ],
            "counterexample_hits": [
                {"predicate": p, "space": s.to_json()} for p, s in self.counterexample_hits
            ],
            "ok": self.ok,
        }


def _violation_key(v):
    space, inv, _ = v
    return (space.n, space.leq, inv)


# gaps in the implication lattice that only infinite spaces can realize
GAP_PREDICATES = {
    "p4 and not p3": "p4 and not p3",
    "p6 and not p5": "p6 and not p5",
}


def _verify_chunk(args) -> EnumerationReport:
    k, leqs, checks, searches = args
    preds = {name: compile_predicate(expr) for name, expr in searches.items()}
    rep = EnumerationReport(k)
    for leq in leqs:
        space = FiniteSpace(k, leq)
        results, failures = check_space(space, checks)
        if preds:
            prof = fs.condition_profile(space)
            rep.counterexample_hits.extend((name, space) for name, p in preds.items() if p(prof))
        rep.total += 1
        rep.per_size[k] = rep.per_size.get(k, 0) + 1
        for name, ok in results.items():
            if ok:
                rep.passes[name] = rep.passes.get(name, 0) + 1
        rep.violations.extend((space, name, w) for name, w in failures)
    return rep


def verify_theorems(
    n: int,
    checks=CHECKS,
    workers: int = 1,
    bound: int | None = None,
    chunk: int = 512,
    searches: dict[str, str] | None = None,
) -> EnumerationReport:
    """Check every invariant on every labeled space with at most ``n`` points.

    ``searches`` maps ids to predicate expressions; every space satisfying one
    is listed in ``counterexample_hits``.  By default these are the two gaps
    of the implication lattice, which finite spaces never hit.
    """
    searches = dict(GAP_PREDICATES if searches is None else searches)
    _check_bound(n, bound)
    checks = tuple(CHECKS if checks in (None, "all") else checks)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    jobs = []
    for k in range(n + 1):
        leqs = list(_labeled(k))
        for i in range(0, len(leqs), chunk):
            jobs.append((k, leqs[i:i + chunk], checks, searches))
    report = EnumerationReport(n)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_verify_chunk, jobs))
    else:
        parts = [_verify_chunk(job) for job in jobs]
    for part in parts:
        report = report.merge(part)
    report.n = n
    log.info("checked %d spaces up to n=%d, %d violations", report.total, n, len(report.violations))
    return report


# ---------------------------------------------------------------------------
# counterexample search

_ALLOWED_NODES = (ast.Expression, ast.BoolOp, ast.UnaryOp, ast.And, ast.Or, ast.Not,
                  ast.Name, ast.Load, ast.Constant)


def compile_predicate(expr: str) -> Callable[[PropertyProfile], bool]:
    """Compile a boolean expression over profile flags.

    Accepts ``and/or/not`` as well as ``&``, ``|``, ``!``, ``~`` and the
    logic symbols.  Names: ``p1``..``p6`` and the keys of
    :meth:`PropertyProfile.flags`.
    """
    text = expr
    for sym, word in (("∧", " and "), ("∨", " or "), ("¬", " not "), ("&&", " and "),
                      ("||", " or "), ("&", " and "), ("|", " or "), ("!", " not "), ("~", " not ")):
        text = text.replace(sym, word)
    text = re.sub(r"\s+", " ", text).strip()
    tree = ast.parse(text, mode="eval")
    names = set(PropertyProfile.FLAGS) | {"locally_irreducible", "pointwise", "locally_finite"}
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise ValueError(f"unsupported syntax in predicate {expr!r}")
        if isinstance(node, ast.Name) and node.id not in names:
            raise ValueError(f"unknown flag {node.id!r}; known: {sorted(names)}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, bool):
            raise ValueError(f"only True/False constants allowed in {expr!r}")
    code = compile(tree, "<predicate>", "eval")

    def pred(profile: PropertyProfile) -> bool:
        return bool(eval(code, {"__builtins__": {}}, profile.flags()))

    pred.__doc__ = expr
    return pred


def find_counterexample(predicate, max_n: int, bound: int | None = None) -> FiniteSpace | None:
    """Smallest space (scanning n = 0, 1, ...) whose profile satisfies ``predicate``."""
    if isinstance(predicate, str):
        predicate = compile_predicate(predicate)
    _check_bound(max_n, bound)
    for k in range(max_n + 1):
        for space in all_spaces(k, bound=bound):
            if predicate(fs.condition_profile(space)):
                return space
    return None
