"""Command-line frontend.

Subcommands: eval, conjugate, infconv, valuation, growth, laws, fixtures.
Documents are JSON (schema "convval/1"), plot data is CSV.  Exit status is 0
iff every requested check passed; document/usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .conjugacy import biconjugate_check, conjugate, cone_bound, inf_convolution, uniform_cone_bound
from .documents import (DocumentError, dump, format_float, format_rational,
                        function_to_doc, load_function, load_growth, parse_rational)
from .errors import ConvvalError
from .growth import peval, psi_from_zeta
from .laws import (check_invariance, check_level_convergence, check_min_lattice,
                   check_valuation_identity, generate_pair_with_convex_min,
                   random_body, smoothing_sequence, staircase_limit_check,
                   truncation_fixture)
from .functions import pwa_equal, sup, inf_if_convex
from .growth import check_derivative_relation, check_psi_vanishes, make_growth
from .valuation import combined_valuation, integral_valuation, level_volume_profile
import math
import random


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, float):
        return format_float(x)
    return str(x)


def _digest(paths) -> str:
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()[:16]


def _report(command: str, args, digest: str, results: dict, laws: list, seed, t0) -> dict:
    return {
        "command": command,
        "version": __version__,
        "inputs_digest": digest,
        "seed": seed,
        "results": results,
        "law_reports": [
            {"law": r.law, "inputs": r.inputs, "passed": r.passed,
             "left": _fmt(r.left) if r.left is not None else None,
             "right": _fmt(r.right) if r.right is not None else None,
             "tolerance": _fmt(r.tolerance)}
            for r in laws
        ],
        "elapsed_seconds": round(time.monotonic() - t0, 3),
    }


def cmd_eval(args) -> int:
    u = load_function(args.file)
    point = [parse_rational(x, "point") for x in args.point.split(",")]
    val = u.eval(point)
    print("inf" if val == math.inf else format_rational(val))
    return 0


def cmd_conjugate(args) -> int:
    u = load_function(args.file)
    dump(function_to_doc(conjugate(u), provenance=f"conjugate of {args.file}"), args.out)
    return 0


def cmd_infconv(args) -> int:
    u, v = load_function(args.file), load_function(args.file2)
    dump(function_to_doc(inf_convolution(u, v),
                         provenance=f"infconv of {args.file}, {args.file2}"), args.out)
    return 0


def cmd_valuation(args) -> int:
    t0 = time.monotonic()
    u = load_function(args.file)
    zeta0 = load_growth(args.zeta0)
    zetan = load_growth(args.zetan)
    value = combined_valuation(zeta0, zetan, u)
    prof = level_volume_profile(u)
    results = {
        "combined_valuation": _fmt(value),
        "min_value": format_rational(u.min_value()[0]),
        "atom": format_rational(prof.atom),
    }
    if args.profile_csv:
        with open(args.profile_csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t", "V"])
            pts = list(prof.breakpoints)
            for i in range(len(prof.breakpoints) - 1):
                a, b = prof.breakpoints[i], prof.breakpoints[i + 1]
                pts += [a + (b - a) * Fraction(j, 4) for j in (1, 2, 3)]
            pts += [prof.breakpoints[-1] + j for j in (1, 2, 3)]
            for t in sorted(set(pts)):
                w.writerow([_fmt(t), _fmt(prof.value(t))])
    report = _report("valuation", args, _digest([args.file, args.zeta0, args.zetan]),
                     results, [], None, t0)
    dump(report, args.out)
    return 0


def cmd_growth(args) -> int:
    zeta = load_growth(args.zetafile)
    n = args.n
    psi = psi_from_zeta(zeta, n)
    tmin, tmax = Fraction(args.tmin), Fraction(args.tmax)
    grid = sorted({tmin + (tmax - tmin) * Fraction(j, args.steps) for j in range(args.steps + 1)}
                  | {b for b in zeta.breakpoints if tmin <= b <= tmax})
    sign = Fraction((-1) ** n, math.factorial(n))
    rows = []
    numeric = not hasattr(psi, "region_at")
    if not numeric:
        dn = psi.derivative_pieces(n)
    for t in grid:
        zt = zeta.eval(t)
        if numeric:
            pt, dt = psi.eval(t), ""
        else:
            pt = peval(psi.region_at(t)[1], t)
            dt = sign * peval(dn.region_at(t)[1], t)
        rows.append([_fmt(t), _fmt(zt), _fmt(pt), _fmt(dt)])
    out = sys.stdout if args.out is None else open(args.out, "w", newline="")
    try:
        w = csv.writer(out)
        w.writerow(["t", "zeta", "psi_n", "signed_nth_derivative"])
        w.writerows(rows)
    finally:
        if args.out is not None:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# Law suites
# ---------------------------------------------------------------------------

def _default_zetas():
    return [
        (make_growth([0, 2], [[2, -1]]), make_growth([0, 1], [[1, -1]])),
        (make_growth([-1, 1], [[1, 0, -1]]), make_growth([0, 3], [[3, -1]])),
        (make_growth([0, 1], [[0, 1]]), make_growth([0, 2], [[2, 0, 0, -1]])),
    ]


def _suite_valuation(seed, count, n):
    reports = []
    zetas = _default_zetas()
    for i in range(count):
        pair = generate_pair_with_convex_min(seed + i, n)
        for z0, zn in zetas:
            reports.append(check_valuation_identity(
                lambda u: combined_valuation(z0, zn, u), pair))
        reports.append(check_min_lattice(pair))
    return reports


def _suite_invariance(seed, count, n):
    z0, zn = _default_zetas()[0]
    zfn = lambda u: combined_valuation(z0, zn, u)
    reports = []
    for i in range(count):
        u = generate_pair_with_convex_min(seed + i, n).u
        reports.append(check_invariance(zfn, u, trials=3, seed=seed + i, translations=2))
    return reports


def _suite_growth(seed, count, n):
    rng = random.Random(f"growth-suite-{seed}")
    reports = []
    for _ in range(count):
        b = sorted(rng.sample(range(-4, 9), 3))
        p1 = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
        val = peval(p1, b[1])
        slope = Fraction(rng.randint(-4, 4), 2)
        p2 = [val - slope * b[1], slope]
        zeta = make_growth(b, [p1, p2])
        reports.append(check_derivative_relation(zeta, n))
        reports.append(check_psi_vanishes(zeta, n))
    return reports


def _suite_convergence(seed, count, n):
    from .polyhedra import Polyhedron
    reports = []
    ball = Polyhedron.box([(-1, 1)] * n)
    for i in range(min(count, 5)):
        u = generate_pair_with_convex_min(seed + i, n).u
        seq = [smoothing_sequence(u, ball, 2 ** j) for j in range(0, 11, 2)]
        tmin = u.min_value()[0]
        levels = [tmin + j for j in (1, 2)]
        reports.append(check_level_convergence(seq, u, levels))
    return reports


def _suite_staircase(seed, count, n):
    zetas = [z for _, z in _default_zetas()]
    hs = [Fraction(1, 2 ** j) for j in range(1, 9)]
    reports = []
    for k in (1, 2):
        for z in zetas[:max(1, count)]:
            for t in (Fraction(1, 4), Fraction(1, 2)):
                reports.append(staircase_limit_check(z, k, t, hs))
    return reports


def _suite_conjugacy(seed, count, n):
    reports = []
    from .reports import LawReport
    for i in range(count):
        pair = generate_pair_with_convex_min(seed + i, n)
        for u in (pair.u, pair.v):
            ok = biconjugate_check(u)
            reports.append(LawReport("biconjugation", f"seed={seed + i}", ok))
        bound = cone_bound(pair.u)
        reports.append(LawReport("cone_bound_certificate", f"seed={seed + i}",
                                 bound.holds_for(pair.u)))
    return reports


_SUITES = {
    "valuation": _suite_valuation,
    "invariance": _suite_invariance,
    "growth": _suite_growth,
    "convergence": _suite_convergence,
    "staircase": _suite_staircase,
    "conjugacy": _suite_conjugacy,
}


def cmd_laws(args) -> int:
    t0 = time.monotonic()
    if args.suite not in _SUITES:
        print(f"unknown suite {args.suite!r}; choose from {sorted(_SUITES)}", file=sys.stderr)
        return 2
    reports = _SUITES[args.suite](args.seed, args.count, args.n)
    passed = sum(1 for r in reports if r.passed)
    results = {"suite": args.suite, "checks": len(reports), "passed": passed}
    report = _report(f"laws {args.suite}", args, "-", results, reports, args.seed, t0)
    dump(report, args.out)
    print(f"{args.suite}: {passed}/{len(reports)} checks passed", file=sys.stderr)
    return 0 if passed == len(reports) else 1


def cmd_fixtures(args) -> int:
    import os
    os.makedirs(args.out, exist_ok=True)
    written = []
    for i in range(args.count):
        pair = generate_pair_with_convex_min(args.seed + i, args.n)
        for tag, u in (("u", pair.u), ("v", pair.v)):
            path = os.path.join(args.out, f"pair{args.seed + i}_{tag}.json")
            dump(function_to_doc(u, provenance=f"{pair.provenance} seed={pair.seed}"), path)
            written.append(path)
    print("\n".join(written))
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="convval",
                                 description="exact valuations of piecewise-affine convex functions")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a function document at a point")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="comma-separated rationals")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("conjugate", help="Legendre-Fenchel conjugate of a document")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_conjugate)

    p = sub.add_parser("infconv", help="infimal convolution of two documents")
    p.add_argument("file")
    p.add_argument("file2")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_infconv)

    p = sub.add_parser("valuation", help="combined valuation of a function document")
    p.add_argument("file")
    p.add_argument("zeta0")
    p.add_argument("zetan")
    p.add_argument("--out", default=None)
    p.add_argument("--profile-csv", default=None)
    p.set_defaults(fn=cmd_valuation)

    p = sub.add_parser("growth", help="CSV of zeta, psi_n and the derivative relation")
    p.add_argument("zetafile")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--tmin", default="0")
    p.add_argument("--tmax", default="2")
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_growth)

    p = sub.add_parser("laws", help="run a law suite")
    p.add_argument("suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_laws)

    p = sub.add_parser("fixtures", help="generate certified fixture documents")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_fixtures)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except DocumentError as exc:
        print(f"document error: {exc}", file=sys.stderr)
        return 2
    except ConvvalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
