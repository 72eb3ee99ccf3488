"""Command line entry point: ``irredlab <subcommand> ...``."""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import random
import sys
import time

from . import enumeration as en
from . import finspace as fs
from . import hochster as hs
from . import prodfields as pf
from .fields import Field
from .gallery import catalog, gallery, trace


def _emit(args, payload: dict) -> None:
    target = getattr(args, "json", None)
    if target is None:
        return
    text = json.dumps(payload, indent=2, default=str)
    if target == "-":
        print(text, file=getattr(args, "stdout", sys.stdout))
    else:
        with open(target, "w") as fh:
            fh.write(text + "\n")


def cmd_enumerate(args) -> int:
    checks = en.CHECKS if "all" in args.check else tuple(args.check)
    bound = args.max_points if args.allow_large else None
    t0 = time.perf_counter()
    report = en.verify_theorems(args.max_points, checks=checks, workers=args.workers, bound=bound)
    elapsed = time.perf_counter() - t0
    for k, v in sorted(report.per_size.items()):
        line = f"n={k}: {v} labeled spaces"
        if args.iso:
            iso = sum(1 for _ in en.all_spaces(k, iso=True, bound=bound))
            line += f", {iso} up to isomorphism"
        print(line)
    for name in checks:
        fails = sum(1 for _, inv, _ in report.violations if inv == name)
        status = "PASS" if fails == 0 else "FAIL"
        print(f"{status} {name}: {report.passes.get(name, 0)} passed, {fails} violations")
    print(f"gap predicates hit: {len(report.counterexample_hits)}")
    print(f"{report.total} spaces in {elapsed:.1f}s: {'ok' if report.ok else 'VIOLATIONS'}")
    _emit(args, report.to_json())
    return 0 if report.ok else 1


def cmd_search(args) -> int:
    bound = args.max_points if args.allow_large else None
    space = en.find_counterexample(args.predicate, args.max_points, bound=bound)
    if space is None:
        print(f"none: no space with at most {args.max_points} points satisfies {args.predicate!r}")
        _emit(args, {"predicate": args.predicate, "max_points": args.max_points, "space": None})
        return 0
    prof = fs.condition_profile(space)
    print(f"found n={space.n}: {space.to_json()['leq']}")
    print(f"irreducible components: {list(prof.irreducible_components)}")
    print(f"connected components: {list(prof.connected_components)}")
    _emit(args, {"predicate": args.predicate, "max_points": args.max_points,
                 "space": space.to_json(), "profile": prof.to_json()})
    return 0


def cmd_gallery(args) -> int:
    names = [args.name] if args.name else catalog()
    try:
        entries = [gallery(n) for n in names]
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    out, ok = [], True
    for e in entries:
        bad = e.mismatches()
        ok = ok and not bad
        if args.dot:
            print(fs.to_dot(e.space, e.name), end="")
        else:
            print(f"{'PASS' if not bad else 'FAIL'} {e.name}: {e.provenance}")
            if bad:
                print(f"  mismatches: {bad}")
        out.append({"name": e.name, "space": e.space.to_json(),
                    "profile": e.profile().to_json(), "valid": not bad})
    _emit(args, {"entries": out})
    return 0 if ok else 1


def cmd_prodfields(args) -> int:
    field = Field.parse(args.field)
    ring = pf.ProductRing.power(field, args.size)
    rng = random.Random(args.seed)
    payload: dict = {"field": field.name, "size": args.size}
    ok = True
    if args.demo == "idempotent":
        rows = []
        for _ in range(args.samples):
            x = ring.random(rng)
            xbar = pf.pseudo_inverse(x)
            e = pf.idempotent_of(x)
            checks = {
                "x == x^2 xbar": x == x * x * xbar,
                "e^2 == e": e * e == e,
                "D(x) == D(e)": pf.principal_open(x) == pf.principal_open(e),
                "V(e) == D(1-e)": pf.vanishing_set(e) == pf.principal_open(ring.one - e),
            }
            ok = ok and all(checks.values())
            rows.append({"x": x.to_json()["entries"], "xbar": xbar.to_json()["entries"],
                         "e": e.to_json()["entries"], "checks": checks})
        for row in rows[:5]:
            print(f"x={row['x']} xbar={row['xbar']} e={row['e']}")
        print(f"{'PASS' if ok else 'FAIL'}: {len(rows)} samples over {field}^{args.size}")
        payload["samples"] = rows
    else:
        space = pf.spectrum_space(ring)
        prof = fs.condition_profile(space)
        ok = prof.discrete and prof.dimension == 0 and space.n == args.size
        print(f"Spec({field}^{args.size}): {space.n} points, discrete={prof.discrete}, "
              f"dimension={prof.dimension}, connected={prof.connected}")
        payload.update(space=space.to_json(), profile=prof.to_json())
    payload["ok"] = ok
    _emit(args, payload)
    return 0 if ok else 1


def cmd_hochster(args) -> int:
    field = Field.parse(args.field)
    index = hs.parse_index(args.index)
    alg = hs.MonoidAlgebra(field, index)
    rng = random.Random(args.seed)
    payload: dict = {"field": field.name, "index": index.name, "demo": args.demo}
    ok = True
    demo = args.demo
    if demo == "reduced":
        n_certs = 0
        for _ in range(args.samples):
            r = alg.random(rng)
            if r.in_base_field():
                continue
            cert = hs.reducedness_witness(r)
            ok = ok and hs.certificate_valid(cert) and not hs.idempotent_check(r)
            n_certs += 1
        print(f"{'PASS' if ok else 'FAIL'}: {n_certs} elements outside K, all with r^2 != r, r^2 != 0")
        payload["certified"] = n_certs
    elif demo == "zerodivisor":
        pts = index.window()
        pairs = [(x, y) for x in pts for y in pts if x < y]
        rows = []
        for x, y in pairs[:50]:
            prod = alg.e(x) * (alg.one - alg.e(y))
            ok = ok and prod.is_zero()
            rows.append({"x": index.encode(x), "y": index.encode(y), "product": prod.to_json()["terms"]})
        print(f"{'PASS' if ok else 'FAIL'}: e_(x,1)(1 - e_(y,1)) = 0 for {len(rows)} pairs x < y")
        payload["pairs"] = rows
    elif demo == "monoid-props":
        rep = hs.monoid_property_witnesses(index)
        ok = rep.torsionfree and rep.aperiodic and not rep.cancellable
        for k, v in rep.to_json().items():
            print(f"{k}: {v}")
        payload["report"] = rep.to_json()
    elif demo.startswith("cut:"):
        cut = hs.Cut.parse(demo[4:])
        ev = hs.cut_evaluation(cut, alg)
        print(f"cut {cut.label}: {ev.stalk.tag} {ev.stalk.pivots}; codomain {ev.codomain}")
        print(f"  {ev.stalk.note}")
        pts = sorted(set(index.window(8)) | set(ev.pivots))
        for _ in range(args.samples):
            r, s = alg.random(rng, points=pts), alg.random(rng, points=pts)
            ok = ok and ev(r + s) == ev(r) + ev(s) and ev(r * s) == ev(r) * ev(s)
        print(f"{'PASS' if ok else 'FAIL'}: homomorphism identities on {args.samples} random pairs")
        if ev.codomain.kind == "ab":
            a, bm1 = hs.zero_divisor_pair(ev)
            print(f"  zero divisors: ({a}) * ({bm1}) = {a * bm1}")
        payload.update(stalk={"tag": ev.stalk.tag, "pivots": [str(p) for p in ev.pivots],
                              "note": ev.stalk.note}, codomain=str(ev.codomain))
    else:
        print(f"unknown demo {demo!r}", file=sys.stderr)
        return 2
    payload["ok"] = ok
    _emit(args, payload)
    return 0 if ok else 1


def cmd_trace(args) -> int:
    lines = trace()
    for line in lines:
        print(line)
    _emit(args, {"trace": lines})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", nargs="?", const="-", metavar="FILE",
                        help="write a JSON report to FILE (stdout if no FILE)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="irredlab", parents=[common],
                                     description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="check every invariant on all small spaces")
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--iso", action="store_true", help="also report isomorphism-class counts")
    p.add_argument("--check", action="append", choices=("all",) + en.CHECKS, default=None)
    p.add_argument("--allow-large", action="store_true", help=f"permit n > {en.DEFAULT_BOUND}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", parents=[common], help="smallest space satisfying a flag predicate")
    p.add_argument("--predicate", required=True)
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gallery", parents=[common], help="named example spaces")
    p.add_argument("name", nargs="?")
    p.add_argument("--dot", action="store_true", help="print Graphviz Hasse diagrams")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("prodfields", parents=[common], help="finite products of fields")
    p.add_argument("--field", default="q", choices=("f2", "f3", "q"))
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--demo", default="idempotent", choices=("idempotent", "spectrum"))
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_prodfields)

    p = sub.add_parser("hochster", parents=[common], help="the monoid algebra K[M]")
    p.add_argument("--index", default="rationals", help="chain:N or rationals")
    p.add_argument("--field", default="q", choices=("q", "f2", "f3"))
    p.add_argument("--demo", default="reduced",
                   help="reduced | zerodivisor | monoid-props | cut:<spec>")
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_hochster)

    p = sub.add_parser("trace", parents=[common], help="statement-to-check listing")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "check", None) is None:
        args.check = ["all"]
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    # with --json on stdout, keep stdout pure JSON and send the prose to stderr
    args.stdout = sys.stdout
    quiet = contextlib.redirect_stdout(sys.stderr) if args.json == "-" else contextlib.nullcontext()
    try:
        with quiet:
            return args.func(args)
    except (ValueError, en.BoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
