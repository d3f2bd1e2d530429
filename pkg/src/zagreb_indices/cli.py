"""Command-line front end.

Subcommands:

* compute            index values for one graph
* verify-identities  complementation/count identities on one graph
* bounds             evaluate every bound against the direct value
* sharpness          run the extremal-family battery
* enumerate-check    exhaustive closed-form validation on small graphs
* regress            fit index/property regressions on a dataset

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
Output is deterministic: same invocation, same bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import closed_forms as cf
from .families import FAMILIES, build_from_spec
from .graph import (
    Graph,
    degree_profile,
    enumerate_connected_graphs,
    is_c3c4_free,
    read_edge_list,
    two_distance_profile,
)
from .indices import (
    first_leap_zagreb_coindex,
    general_first_leap_zagreb,
    general_first_zagreb,
    general_first_zagreb_coindex,
)
from .regression import available_datasets, load_bundled, load_dataset, reproduce_models
from .sharpness import default_cases, run_cases

REL_TOL = 1e-9


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, tuple):
        return list(x)
    return x


def _emit(rows, columns, fmt, stream=None):
    stream = stream if stream is not None else sys.stdout
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(row.get(c)) for c in columns])
    else:
        for row in rows:
            payload = {c: _jsonable(row.get(c)) for c in columns}
            stream.write(json.dumps(payload, sort_keys=True) + "\n")


def _alpha_arg(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent {text!r}") from None


def _load_graph(args):
    if args.graph is not None:
        return read_edge_list(args.graph)
    built = build_from_spec(args.family)
    if not isinstance(built, Graph):
        raise ValueError(f"family spec {args.family!r} builds a degree profile, "
                         "not a concrete graph; use it through the library API")
    return built


def _close(a, b, rel_tol=REL_TOL) -> bool:
    exact = (int, Fraction)
    if isinstance(a, exact) and isinstance(b, exact):
        return a == b
    fa, fb = float(a), float(b)
    return abs(fa - fb) <= rel_tol * max(1.0, abs(fa), abs(fb))


def _add_graph_source(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="PATH",
                       help="edge-list file ('n m' header then one edge per line)")
    group.add_argument("--family", metavar="SPEC",
                       help="built-in family, e.g. 'figure3' or 'cycle_pendants:4,2' "
                            f"(tags: {', '.join(sorted(FAMILIES))})")


def _add_format(sub):
    sub.add_argument("--format", choices=("csv", "json-lines"), default="csv",
                     help="output format (default csv)")


def _add_alphas(sub, default_text):
    sub.add_argument("--alpha", type=_alpha_arg, action="append", metavar="A",
                     help=f"exponent, repeatable (default {default_text})")


# -- compute ----------------------------------------------------------------


def cmd_compute(args) -> int:
    g = _load_graph(args)
    alphas = args.alpha or [1, 2, 3]
    rows = []
    for a in alphas:
        for name, func in (("zagreb", general_first_zagreb),
                           ("zagreb_coindex", general_first_zagreb_coindex),
                           ("leap_zagreb", general_first_leap_zagreb)):
            try:
                rows.append({"index": name, "alpha": a, "value": func(g, a), "note": ""})
            except ValueError as exc:
                rows.append({"index": name, "alpha": a, "value": None, "note": str(exc)})
    rows.append({"index": "leap_zagreb_coindex", "alpha": 1,
                 "value": first_leap_zagreb_coindex(g), "note": ""})
    _emit(rows, ["index", "alpha", "value", "note"], args.format)
    return 0


# -- verify-identities -------------------------------------------------------


def cmd_verify_identities(args) -> int:
    g = _load_graph(args)
    alphas = args.alpha or [1, 2, 3]
    n = g.vertex_count
    m1 = general_first_zagreb(g, 2)
    rows = []
    failed = 0

    for a in alphas:
        # coindex(a) == (n-1) * index(a) - index(a+1), any graph
        try:
            direct = general_first_zagreb_coindex(g, a)
        except ValueError as exc:
            rows.append({"identity": "coindex-complement", "alpha": a,
                         "status": "skip", "detail": str(exc)})
            continue
        derived = (n - 1) * general_first_zagreb(g, a) - general_first_zagreb(g, a + 1)
        ok = _close(direct, derived)
        failed += not ok
        rows.append({"identity": "coindex-complement", "alpha": a,
                     "status": "ok" if ok else "fail",
                     "detail": f"direct={_fmt(direct)} derived={_fmt(derived)}"})

    if is_c3c4_free(g):
        d2_sum = sum(g.two_distance_degrees())
        expect = m1 - 2 * g.edge_count
        ok = d2_sum == expect
        failed += not ok
        rows.append({"identity": "two-distance-sum", "alpha": None,
                     "status": "ok" if ok else "fail",
                     "detail": f"sum={d2_sum} m1-2m={expect}"})
        lhs = general_first_leap_zagreb(g, 2) + first_leap_zagreb_coindex(g)
        rhs = (n - 1) * expect
        ok = lhs == rhs
        failed += not ok
        rows.append({"identity": "leap-coindex-complement", "alpha": None,
                     "status": "ok" if ok else "fail",
                     "detail": f"lhs={lhs} rhs={rhs}"})
    else:
        rows.append({"identity": "two-distance-sum", "alpha": None,
                     "status": "skip", "detail": "graph has a triangle or quadrilateral"})
        rows.append({"identity": "leap-coindex-complement", "alpha": None,
                     "status": "skip", "detail": "graph has a triangle or quadrilateral"})

    _emit(rows, ["identity", "alpha", "status", "detail"], args.format)
    return 1 if failed else 0


# -- bounds -------------------------------------------------------------------


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    alphas = args.alpha or [2, 0.5]
    dprof = degree_profile(g)
    tprof = two_distance_profile(g)
    rows = []
    violated = 0
    for a in alphas:
        evaluations = [
            ("degree-secant", cf.zagreb_bound(dprof, a, cf.KIND_SECANT), general_first_zagreb),
            ("degree-step", cf.zagreb_bound(dprof, a, cf.KIND_STEP), general_first_zagreb),
            ("degree-remainder", cf.zagreb_remainder_bound(dprof, a), general_first_zagreb),
            ("leap-secant", cf.leap_bound(tprof, a, cf.KIND_SECANT), general_first_leap_zagreb),
            ("leap-step", cf.leap_bound(tprof, a, cf.KIND_STEP), general_first_leap_zagreb),
            ("leap-remainder", cf.leap_remainder_bound(tprof, a), general_first_leap_zagreb),
        ]
        for tag, report, direct_fn in evaluations:
            if not report.applicable:
                rows.append({"bound": tag, "alpha": a, "direction": None, "value": None,
                             "direct": None, "gap": None, "holds": None,
                             "note": report.reason})
                continue
            direct = direct_fn(g, a)
            holds = cf.bound_holds(report, direct)
            violated += not holds
            rows.append({"bound": tag, "alpha": a, "direction": report.direction,
                         "value": report.value, "direct": direct,
                         "gap": cf.bound_gap(report, direct), "holds": holds, "note": ""})
    _emit(rows, ["bound", "alpha", "direction", "value", "direct", "gap", "holds", "note"],
          args.format)
    return 1 if violated else 0


# -- sharpness ----------------------------------------------------------------


def cmd_sharpness(args) -> int:
    rows = run_cases(default_cases(extended=args.extended))
    out = [{"family": r.family, "params": ";".join(str(p) for p in r.params),
            "bound": r.bound, "alpha": r.alpha, "direct": r.direct,
            "bound_value": r.bound_value, "gap": r.gap, "attained": r.attained,
            "note": r.note} for r in rows]
    out.sort(key=lambda d: (d["family"], d["params"], d["bound"], float(d["alpha"])))
    _emit(out, ["family", "params", "bound", "alpha", "direct", "bound_value",
                "gap", "attained", "note"], args.format)
    return 0 if all(r.attained for r in rows) else 1


# -- enumerate-check -----------------------------------------------------------


def _check_graph(g, alphas):
    """(checks run, failures) for one graph."""
    checks = failures = 0

    def judge(ok):
        nonlocal checks, failures
        checks += 1
        failures += not ok

    dprof = degree_profile(g)
    non_regular = dprof.min_degree != dprof.max_degree
    n = g.vertex_count

    for a in alphas:
        direct = general_first_zagreb(g, a)
        if non_regular:
            for anchor in cf.ANCHORS:
                judge(_close(direct, cf.zagreb_from_profile(dprof, a, anchor)))
        for report in (cf.zagreb_bound(dprof, a, cf.KIND_SECANT),
                       cf.zagreb_bound(dprof, a, cf.KIND_STEP),
                       cf.zagreb_remainder_bound(dprof, a)):
            if report.applicable:
                judge(cf.bound_holds(report, direct))
        if isinstance(a, int) and a >= 1:
            co = general_first_zagreb_coindex(g, a)
            judge(_close(co, (n - 1) * direct - general_first_zagreb(g, a + 1)))
            if non_regular:
                for anchor in cf.ANCHORS:
                    judge(_close(co, cf.zagreb_coindex_from_profile(dprof, a, anchor)))

    if not is_c3c4_free(g):
        return checks, failures

    tprof = two_distance_profile(g)
    m1_less_2m = tprof.first_zagreb - 2 * tprof.edge_count
    judge(sum(g.two_distance_degrees()) == m1_less_2m)
    leap_co = first_leap_zagreb_coindex(g)
    judge(general_first_leap_zagreb(g, 2) + leap_co == (n - 1) * m1_less_2m)

    leap_non_regular = tprof.min_d2 != tprof.max_d2
    for a in alphas:
        positive = a > 0
        if tprof.min_d2 == 0 and not positive:
            continue  # 0**a undefined for a < 0
        direct = general_first_leap_zagreb(g, a)
        if tprof.min_d2 == 0:
            if positive:
                judge(_close(direct, cf.leap_zagreb_min_zero(tprof, a, cf.SIMPLIFIED)))
                if tprof.max_d2 >= 2:
                    judge(_close(direct, cf.leap_zagreb_min_zero(tprof, a, cf.ANCHORED)))
            continue
        if leap_non_regular:
            for anchor in cf.ANCHORS:
                judge(_close(direct, cf.leap_zagreb_from_profile(tprof, a, anchor)))
        for report in (cf.leap_bound(tprof, a, cf.KIND_SECANT),
                       cf.leap_bound(tprof, a, cf.KIND_STEP),
                       cf.leap_remainder_bound(tprof, a)):
            if report.applicable:
                judge(cf.bound_holds(report, direct))
    if leap_non_regular and tprof.min_d2 >= 1:
        for anchor in cf.ANCHORS:
            judge(leap_co == cf.leap_coindex_from_profile(tprof, anchor))

    return checks, failures


def cmd_enumerate_check(args) -> int:
    alphas = args.alpha or [-1, 2, 3, 0.5]
    total_failures = 0
    for n in range(3, args.max_n + 1):
        graphs = checks = failures = 0
        for g in enumerate_connected_graphs(n):
            graphs += 1
            c, f = _check_graph(g, alphas)
            checks += c
            failures += f
        print(f"n={n} graphs={graphs} checks={checks} failures={failures}")
        total_failures += failures
    print("ok" if total_failures == 0 else f"FAIL: {total_failures} checks failed")
    return 1 if total_failures else 0


# -- regress -------------------------------------------------------------------


def cmd_regress(args) -> int:
    sources = []
    try:
        if args.data:
            for path in args.data:
                sources.append((path, load_dataset(path)))
        elif args.bundled:
            for name in args.bundled:
                sources.append((name, load_bundled(name)))
        else:
            names = available_datasets()
            if not names:
                print("no bundled datasets; pass --data or --bundled", file=sys.stderr)
                return 2
            for name in names:
                sources.append((name, load_bundled(name)))
    except (OSError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    rows = []
    for label, records in sources:
        models = reproduce_models(records)
        for (desc, prop), res in sorted(models.items()):
            if res is None:
                rows.append({"dataset": label, "descriptor": desc, "property": prop,
                             "n": 0, "slope": None, "intercept": None, "pearson_r": None,
                             "se_slope": None, "se_intercept": None})
                continue
            rows.append({"dataset": label, "descriptor": desc, "property": prop,
                         "n": res.n_points, "slope": res.slope, "intercept": res.intercept,
                         "pearson_r": res.pearson_r, "se_slope": res.se_slope,
                         "se_intercept": res.se_intercept})
    _emit(rows, ["dataset", "descriptor", "property", "n", "slope", "intercept",
                 "pearson_r", "se_slope", "se_intercept"], args.format)
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zagreb-indices",
        description="Degree- and 2-distance-degree-based Zagreb-family indices: "
                    "direct values, closed forms, bounds, sharpness, regression.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("compute", help="index values for one graph")
    _add_graph_source(p)
    _add_alphas(p, "1 2 3")
    _add_format(p)
    p.set_defaults(func=cmd_compute)

    p = subs.add_parser("verify-identities", help="check complementation identities")
    _add_graph_source(p)
    _add_alphas(p, "1 2 3")
    _add_format(p)
    p.set_defaults(func=cmd_verify_identities)

    p = subs.add_parser("bounds", help="evaluate all bounds against direct values")
    _add_graph_source(p)
    _add_alphas(p, "2 0.5")
    _add_format(p)
    p.set_defaults(func=cmd_bounds)

    p = subs.add_parser("sharpness", help="run the extremal-family battery")
    p.add_argument("--extended", action="store_true", help="larger parameter grids")
    _add_format(p)
    p.set_defaults(func=cmd_sharpness)

    p = subs.add_parser("enumerate-check",
                        help="validate closed forms on every connected graph up to "
                             "--max-n vertices (n=7 takes minutes)")
    p.add_argument("--max-n", type=int, default=6, metavar="N",
                   help="largest vertex count to enumerate (default 6)")
    _add_alphas(p, "-1 2 3 0.5")
    p.set_defaults(func=cmd_enumerate_check)

    p = subs.add_parser("regress", help="fit index/property regressions")
    p.add_argument("--data", action="append", metavar="PATH",
                   help="dataset CSV, repeatable")
    p.add_argument("--bundled", action="append", metavar="NAME",
                   help="bundled dataset name, repeatable (see README)")
    _add_format(p)
    p.set_defaults(func=cmd_regress)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
