"""Checking that the bounds are sharp: families that meet them with equality.

A bound is only interesting if something attains it.  This module pairs
each bound with the construction that attains it, evaluates both sides,
and reports the gap.  The built-in case list covers the six worked
examples plus two parametric families:

* cycles with pendant trees attached (attain the degree remainder bound
  at every exponent), and
* stars with pendants on some leaves (attain the leap remainder bound).

Rows are plain records, cheap to dump as CSV for eyeballing or plotting.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import (
    bound_attained,
    bound_gap,
    leap_bound,
    leap_remainder_bound,
    zagreb_bound,
    zagreb_remainder_bound,
)
from .families import build_named
from .graph import Graph, degree_profile, enumerate_connected_graphs, two_distance_profile
from .indices import general_first_leap_zagreb, general_first_zagreb

DEGREE_SECANT = "degree-secant"
DEGREE_STEP = "degree-step"
DEGREE_REMAINDER = "degree-remainder"
LEAP_SECANT = "leap-secant"
LEAP_STEP = "leap-step"
LEAP_REMAINDER = "leap-remainder"

BOUND_TAGS = (DEGREE_SECANT, DEGREE_STEP, DEGREE_REMAINDER,
              LEAP_SECANT, LEAP_STEP, LEAP_REMAINDER)

DEFAULT_ALPHAS = (2, 0.5)


@dataclass(frozen=True)
class SharpnessCase:
    """One family instance to check against one bound at several exponents."""

    family: str
    params: tuple
    bound: str
    alphas: tuple = DEFAULT_ALPHAS

    def __post_init__(self):
        if self.bound not in BOUND_TAGS:
            raise ValueError(f"unknown bound tag {self.bound!r}")


@dataclass(frozen=True)
class SharpnessRow:
    """Evaluated case at one exponent.

    For applicable bounds, gap = direct - bound_value and attained says
    whether the gap vanishes (exactly, or within 1e-9 relative in the
    float regime).  When the bound does not apply, bound_value and gap are
    None, attained is None, and note carries the reason code.
    """

    family: str
    params: tuple
    bound: str
    alpha: "int | float"
    direct: "int | Fraction | float"
    bound_value: "int | Fraction | float | None"
    gap: "int | Fraction | float | None"
    attained: "bool | None"
    note: str = ""


def evaluate_bound(graph: Graph, bound: str, alpha) -> "tuple":
    """(direct index value, BoundReport) for one graph, bound tag, exponent."""
    domain, _, kind = bound.partition("-")
    if domain == "degree":
        direct = general_first_zagreb(graph, alpha)
        prof = degree_profile(graph)
        if kind == "remainder":
            report = zagreb_remainder_bound(prof, alpha)
        else:
            report = zagreb_bound(prof, alpha, kind)
    elif domain == "leap":
        direct = general_first_leap_zagreb(graph, alpha)
        prof = two_distance_profile(graph)
        if kind == "remainder":
            report = leap_remainder_bound(prof, alpha)
        else:
            report = leap_bound(prof, alpha, kind)
    else:
        raise ValueError(f"unknown bound tag {bound!r}")
    return direct, report


def verify_sharpness(case: SharpnessCase) -> "list[SharpnessRow]":
    """Evaluate one case at each of its exponents."""
    graph = build_named(case.family, *case.params)
    rows = []
    for alpha in case.alphas:
        direct, report = evaluate_bound(graph, case.bound, alpha)
        if not report.applicable:
            rows.append(SharpnessRow(case.family, case.params, case.bound, alpha,
                                     direct, None, None, None, note=report.reason))
            continue
        rows.append(SharpnessRow(case.family, case.params, case.bound, alpha,
                                 direct, report.value, bound_gap(report, direct),
                                 bound_attained(report, direct)))
    return rows


def default_cases(extended: bool = False) -> "list[SharpnessCase]":
    """The built-in battery: six worked examples plus two parametric grids."""
    cases = [
        SharpnessCase("figure1", (), DEGREE_SECANT),
        SharpnessCase("figure2", (), DEGREE_STEP),
        SharpnessCase("figure3", (), DEGREE_REMAINDER),
        SharpnessCase("figure4", (), LEAP_SECANT),
        SharpnessCase("figure5", (), LEAP_STEP),
        SharpnessCase("figure6", (), LEAP_REMAINDER),
    ]
    cycle_p = range(3, 11 if extended else 7)
    cycle_r = range(1, 7 if extended else 5)
    for p in cycle_p:
        for r in cycle_r:
            cases.append(SharpnessCase("cycle_pendants", (p, r), DEGREE_REMAINDER))
    star_p = range(5, 13 if extended else 9)
    for p in star_p:
        for a in range(2, p - 2):
            cases.append(SharpnessCase("star_pendants", (p, a), LEAP_REMAINDER))
    return cases


def run_cases(cases) -> "list[SharpnessRow]":
    rows = []
    for case in cases:
        rows.extend(verify_sharpness(case))
    return rows


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


def rows_to_csv(rows) -> str:
    """Deterministic CSV dump, one line per row, sorted for stable diffs."""
    ordered = sorted(rows, key=lambda r: (r.family, r.params, r.bound, float(r.alpha)))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "params", "bound", "alpha", "direct",
                     "bound_value", "gap", "attained", "note"])
    for r in ordered:
        writer.writerow([r.family, ";".join(str(p) for p in r.params), r.bound,
                         _fmt(r.alpha), _fmt(r.direct), _fmt(r.bound_value),
                         _fmt(r.gap), _fmt(r.attained), r.note])
    return buf.getvalue()


def scan_for_sharp_instances(max_n: int, bound: str, alpha) -> "list[Graph]":
    """Every connected graph on at most max_n vertices that attains the bound.

    Graphs where the bound does not apply are skipped, not reported.
    Exhaustive, so keep max_n small (7 is already about 1.9 million graphs).
    """
    if bound not in BOUND_TAGS:
        raise ValueError(f"unknown bound tag {bound!r}")
    hits = []
    for n in range(2, max_n + 1):
        for g in enumerate_connected_graphs(n):
            direct, report = evaluate_bound(g, bound, alpha)
            if report.applicable and bound_attained(report, direct):
                hits.append(g)
    return hits
