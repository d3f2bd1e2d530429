"""Profile-level closed forms and sharp bounds for the index family.

Everything here consumes frequency profiles, not graphs: each formula
depends only on (n, m, degree counts), for the leap family also on the
first Zagreb value of the source graph, so profile-only families evaluate
exactly like profiles extracted from concrete graphs.

The algebraic idea is one elimination applied four ways.  Writing
freq[lo + i] for the counts between the extremes and span = hi - lo:

* eliminating the top count against the degree-sum equation rewrites the
  power sum around the secant slope s = (hi**a - lo**a) / span
  ("min" anchor);
* eliminating the two bottom counts rewrites it around the first unit
  step (lo+1)**a - lo**a ("min_plus_one" anchor).

Dropping the interior terms of either identity gives the two bound
families (the interior coefficients have a single sign on each side of
the exponent ranges a < 0, 0 < a < 1, a > 1), and splitting the total
2m - n*lo into quotient and remainder by the span gives the sharper
remainder bound together with two structural classifications.

Precondition failures are typed outcomes, never silent extrapolation:
value-returning evaluators raise :class:`Inapplicable` carrying a reason
code; bound evaluators return a :class:`BoundReport` with
``applicable=False`` and the same codes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from ._numeric import normalize_exponent, power, simplify
from .graph import DegreeProfile, TwoDistanceProfile

ANCHOR_MIN = "min"
ANCHOR_MIN_PLUS_ONE = "min_plus_one"
ANCHORS = (ANCHOR_MIN, ANCHOR_MIN_PLUS_ONE)

KIND_SECANT = "secant"
KIND_STEP = "step"
KIND_REMAINDER = "remainder"

UPPER = "upper"
LOWER = "lower"

# Reason codes for inapplicable formulas/bounds.
REGULAR_PROFILE = "regular-profile"          # min == max: nothing to interpolate
ALPHA_RANGE = "alpha-range"                  # exponent outside the result's range
ZERO_MIN_D2 = "zero-min-d2"                  # leap forms need min d2 >= 1
NONZERO_MIN_D2 = "nonzero-min-d2"            # the d2=0 variants need min d2 == 0
NOT_C3C4_FREE = "not-c3c4-free"              # leap forms need a C3/C4-free source
SPAN_TOO_SMALL = "span-too-small"            # remainder results need span >= 2
MAX_TOO_SMALL = "max-degree-too-small"       # remainder results need max >= 3
ZERO_QUOTIENT = "zero-quotient"              # total < span: no full block to peel
ZERO_REMAINDER = "zero-remainder"            # remainder bounds need remainder >= 1
MISSING_FREQUENCY = "missing-frequency"      # remainder bounds need freq[lo + r] > 0


class Inapplicable(ValueError):
    """A closed form whose hypotheses the given profile does not meet."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


@dataclass(frozen=True)
class RemainderDecomposition:
    """total split against the profile span: total == quotient * span + remainder."""

    total: int
    span: int
    quotient: int
    remainder: int

    def __post_init__(self):
        if self.span < 1 or not (0 <= self.remainder < self.span):
            raise ValueError("invalid decomposition")
        if self.total != self.quotient * self.span + self.remainder:
            raise ValueError("decomposition does not reproduce the total")


@dataclass(frozen=True)
class BoundReport:
    """Outcome of evaluating one bound at one exponent.

    ``direction`` says which side the direct index is guaranteed to lie on
    (direct <= value for 'upper').  Inapplicable bounds come back with
    ``applicable=False``, a reason code, and no value.  ``attained`` stays
    None until a sharpness check fills it in.
    """

    domain: str                 # 'degree' | 'leap'
    kind: str                   # 'secant' | 'step' | 'remainder'
    alpha: "int | float"
    direction: "str | None"
    value: "int | Fraction | float | None"
    applicable: bool = True
    reason: "str | None" = None
    attained: "bool | None" = None
    decomposition: "RemainderDecomposition | None" = None


def _not_applicable(domain, kind, alpha, reason):
    return BoundReport(domain=domain, kind=kind, alpha=alpha, direction=None,
                       value=None, applicable=False, reason=reason)


def _alpha_side(value):
    """'convex' for a < 0 or a > 1, 'concave' for 0 < a < 1, else None."""
    if value < 0 or value > 1:
        return "convex"
    if 0 < value < 1:
        return "concave"
    return None


def _secant(lo: int, hi: int, value, exact: bool, label: str):
    num = power(hi, value, exact, label) - power(lo, value, exact, label)
    if exact:
        return Fraction(num, hi - lo)
    return num / (hi - lo)


# -- interior gap terms ---------------------------------------------------


def secant_gap(p: int, q: int, i: int, alpha):
    """(p+i)**a - p**a - i * (q**a - p**a)/(q - p) for 1 <= i <= q - p - 1.

    Nonpositive for a < 0 or a > 1, nonnegative for 0 < a < 1: the power
    curve lies on one side of its secant between integer anchors p < q.
    """
    value, exact = normalize_exponent(alpha)
    if not (1 <= p < q):
        raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")
    if not (1 <= i <= q - p - 1):
        raise ValueError(f"offset must satisfy 1 <= i <= q - p - 1, got {i}")
    s = _secant(p, q, value, exact, "anchor")
    return simplify(power(p + i, value, exact, "anchor") - power(p, value, exact, "anchor") - i * s)


def step_gap(p: int, q: int, i: int, alpha):
    """(p+i)**a - p**a - i * ((p+1)**a - p**a) for 2 <= i <= q - p.

    Signs are mirrored relative to :func:`secant_gap`: nonnegative for
    a < 0 or a > 1, nonpositive for 0 < a < 1.
    """
    value, exact = normalize_exponent(alpha)
    if not (1 <= p < q):
        raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")
    if not (2 <= i <= q - p):
        raise ValueError(f"offset must satisfy 2 <= i <= q - p, got {i}")
    step = power(p + 1, value, exact, "anchor") - power(p, value, exact, "anchor")
    return simplify(power(p + i, value, exact, "anchor") - power(p, value, exact, "anchor") - i * step)


# -- shared formula core ---------------------------------------------------


def _power_sum(n, total, lo, hi, freq, value, exact, anchor, label):
    """Closed form for sum(freq[d] * d**a) given total = sum(freq[d]*(d-lo)).

    anchor 'min':           n*lo**a + total*s + interior terms vs the secant
    anchor 'min_plus_one':  n*lo**a + total*step + interior terms vs the unit step
    Both are identities for any profile with lo < hi.
    """
    if anchor not in ANCHORS:
        raise ValueError(f"unknown anchor {anchor!r}")
    p_lo = power(lo, value, exact, label)
    acc = n * p_lo
    if anchor == ANCHOR_MIN:
        slope = _secant(lo, hi, value, exact, label)
        acc += total * slope
        for i in range(1, hi - lo):
            cnt = freq.get(lo + i, 0)
            if cnt:
                acc += cnt * (power(lo + i, value, exact, label) - p_lo - i * slope)
    else:
        step = power(lo + 1, value, exact, label) - p_lo
        acc += total * step
        for i in range(2, hi - lo + 1):
            cnt = freq.get(lo + i, 0)
            if cnt:
                acc += cnt * (power(lo + i, value, exact, label) - p_lo - i * step)
    return simplify(acc)


# -- degree-based closed forms ---------------------------------------------


def zagreb_from_profile(prof: DegreeProfile, alpha, anchor: str = ANCHOR_MIN):
    """The generalized first Zagreb power sum from the degree profile alone.

    Equals the direct index for every graph realising the profile; needs a
    non-regular profile (min_degree != max_degree).
    """
    value, exact = normalize_exponent(alpha)
    lo, hi = prof.min_degree, prof.max_degree
    if lo == hi:
        raise Inapplicable(REGULAR_PROFILE, "profile has a single degree value")
    total = 2 * prof.edge_count - prof.vertex_count * lo
    return _power_sum(prof.vertex_count, total, lo, hi, prof.freq,
                      value, exact, anchor, "minimum degree")


def zagreb_coindex_from_profile(prof: DegreeProfile, alpha, anchor: str = ANCHOR_MIN):
    """The coindex at the given exponent, via the complementation identity
    coindex(a) = (n-1) * index(a) - index(a+1) applied to the closed form.

    Needs integer alpha >= 1 (real alpha > 1 also accepted, float mode).
    """
    value, exact = normalize_exponent(alpha)
    if exact:
        if value < 1:
            raise Inapplicable(ALPHA_RANGE, "coindex needs an integer exponent >= 1")
        upper = value + 1
    else:
        if value <= 1.0:
            raise Inapplicable(ALPHA_RANGE, "real-exponent coindex needs exponent > 1")
        upper = value + 1.0
    n = prof.vertex_count
    return simplify((n - 1) * zagreb_from_profile(prof, value, anchor)
                    - zagreb_from_profile(prof, upper, anchor))


def zagreb_bound(prof: DegreeProfile, alpha, kind: str) -> BoundReport:
    """Drop the interior terms of the chosen identity and report the side.

    'secant' bounds: upper for a < 0 or a > 1, lower for 0 < a < 1.
    'step' bounds: the directions flip, and when max_degree >= 3 the value
    is sharpened by the final interior coefficient (the unique-max-vertex
    correction).
    """
    if kind not in (KIND_SECANT, KIND_STEP):
        raise ValueError(f"unknown bound kind {kind!r}")
    value, exact = normalize_exponent(alpha)
    side = _alpha_side(value)
    if side is None:
        return _not_applicable("degree", kind, value, ALPHA_RANGE)
    lo, hi = prof.min_degree, prof.max_degree
    if lo == hi:
        return _not_applicable("degree", kind, value, REGULAR_PROFILE)
    n = prof.vertex_count
    total = 2 * prof.edge_count - n * lo
    p_lo = power(lo, value, exact, "minimum degree")
    if kind == KIND_SECANT:
        acc = n * p_lo + total * _secant(lo, hi, value, exact, "degree")
        direction = UPPER if side == "convex" else LOWER
    else:
        step = power(lo + 1, value, exact, "minimum degree") - p_lo
        acc = n * p_lo + total * step
        if hi >= 3:
            acc += power(hi, value, exact, "maximum degree") - p_lo - (hi - lo) * step
        direction = LOWER if side == "convex" else UPPER
    return BoundReport(domain="degree", kind=kind, alpha=value,
                       direction=direction, value=simplify(acc))


def degree_remainder_decomposition(prof: DegreeProfile) -> RemainderDecomposition:
    """Split total = 2m - n*min_degree as quotient * span + remainder."""
    lo, hi = prof.min_degree, prof.max_degree
    if lo == hi:
        raise Inapplicable(REGULAR_PROFILE, "profile has a single degree value")
    total = 2 * prof.edge_count - prof.vertex_count * lo
    q, r = divmod(total, hi - lo)
    return RemainderDecomposition(total=total, span=hi - lo, quotient=q, remainder=r)


def _remainder_report(domain, n, lo, hi, dec, value, exact, side, label):
    val = (n * power(lo, value, exact, label)
           + dec.total * _secant(lo, hi, value, exact, label)
           + power(lo + dec.remainder, value, exact, label)
           - power(lo, value, exact, label)
           - dec.remainder * _secant(lo, hi, value, exact, label))
    return BoundReport(domain=domain, kind=KIND_REMAINDER, alpha=value,
                       direction=UPPER if side == "convex" else LOWER,
                       value=simplify(val), decomposition=dec)


def _remainder_preconditions(lo, hi, freq, dec, side):
    if side is None:
        return ALPHA_RANGE
    if hi < 3:
        return MAX_TOO_SMALL
    if dec.span < 2:
        return SPAN_TOO_SMALL
    if dec.quotient < 1:
        return ZERO_QUOTIENT
    if dec.remainder < 1:
        return ZERO_REMAINDER
    if freq.get(lo + dec.remainder, 0) == 0:
        return MISSING_FREQUENCY
    return None


def zagreb_remainder_bound(prof: DegreeProfile, alpha) -> BoundReport:
    """Sharper secant-side bound using the remainder of 2m - n*min_degree
    modulo the span; upper for a < 0 or a > 1, lower for 0 < a < 1.

    Requires max_degree >= 3, span >= 2, a positive quotient, a nonzero
    remainder r, and a vertex of degree min_degree + r.  The report carries
    the decomposition it used.
    """
    value, exact = normalize_exponent(alpha)
    side = _alpha_side(value)
    lo, hi = prof.min_degree, prof.max_degree
    if lo == hi:
        return _not_applicable("degree", KIND_REMAINDER, value, REGULAR_PROFILE)
    dec = degree_remainder_decomposition(prof)
    reason = _remainder_preconditions(lo, hi, prof.freq, dec, side)
    if reason is not None:
        report = _not_applicable("degree", KIND_REMAINDER, value, reason)
        return replace(report, decomposition=dec)
    return _remainder_report("degree", prof.vertex_count, lo, hi,
                             dec, value, exact, side, "minimum degree")


BIDEGREED = "bidegreed"
SINGLE_INTERMEDIATE = "single-intermediate"


def _remainder_classification(lo, hi, freq, dec):
    if hi < 3:
        raise Inapplicable(MAX_TOO_SMALL, "classification needs maximum >= 3")
    if dec.span < 2:
        raise Inapplicable(SPAN_TOO_SMALL, "classification needs span >= 2")
    if dec.quotient < 1:
        raise Inapplicable(ZERO_QUOTIENT, "classification needs a positive quotient")
    if freq.get(hi, 0) != dec.quotient:
        return None
    return BIDEGREED if dec.remainder == 0 else SINGLE_INTERMEDIATE


def degree_remainder_classification(prof: DegreeProfile):
    """Structural consequences of the remainder decomposition.

    When the top-degree count equals the quotient: a zero remainder forces
    a bi-degreed profile ('bidegreed'); a nonzero remainder r forces all
    interior degrees above min+r to vanish and at most one vertex at min+r
    ('single-intermediate').  Returns None when the count differs.
    """
    lo, hi = prof.min_degree, prof.max_degree
    if lo == hi:
        raise Inapplicable(REGULAR_PROFILE, "profile has a single degree value")
    return _remainder_classification(lo, hi, prof.freq, degree_remainder_decomposition(prof))


# -- leap (2-distance degree) closed forms ----------------------------------


def _leap_guard(prof: TwoDistanceProfile, need_positive_min=True):
    if not prof.c3c4_free:
        raise Inapplicable(NOT_C3C4_FREE, "leap closed forms need a C3/C4-free source graph")
    if need_positive_min and prof.min_d2 == 0:
        raise Inapplicable(ZERO_MIN_D2, "use leap_zagreb_min_zero for profiles with min d2 = 0")


def _leap_total(prof: TwoDistanceProfile) -> int:
    return prof.first_zagreb - 2 * prof.edge_count - prof.vertex_count * prof.min_d2


def leap_zagreb_from_profile(prof: TwoDistanceProfile, alpha, anchor: str = ANCHOR_MIN):
    """The generalized first leap Zagreb power sum from the 2-distance
    profile, using M1 - 2m as the 2-distance degree total (valid exactly on
    C3/C4-free graphs).  Needs min d2 >= 1 and a non-regular profile."""
    value, exact = normalize_exponent(alpha)
    _leap_guard(prof)
    lo, hi = prof.min_d2, prof.max_d2
    if lo == hi:
        raise Inapplicable(REGULAR_PROFILE, "profile has a single 2-distance degree value")
    return _power_sum(prof.vertex_count, _leap_total(prof), lo, hi, prof.freq,
                      value, exact, anchor, "minimum 2-distance degree")


def leap_coindex_from_profile(prof: TwoDistanceProfile, anchor: str = ANCHOR_MIN):
    """The first leap Zagreb coindex, closed form at exponent 1.

    anchor 'min':
        (M1-2m)(n-1-hi-lo) + n*lo*hi - sum_i freq[lo+i] * i * (lo+i-hi)
    anchor 'min_plus_one':
        (M1-2m)(n-2lo-2) + n*lo*(lo+1) - sum_i freq[lo+i] * i * (i-1)

    Both are exact integers on C3/C4-free profiles with min d2 >= 1.
    """
    if anchor not in ANCHORS:
        raise ValueError(f"unknown anchor {anchor!r}")
    _leap_guard(prof)
    lo, hi = prof.min_d2, prof.max_d2
    if lo == hi:
        raise Inapplicable(REGULAR_PROFILE, "profile has a single 2-distance degree value")
    n = prof.vertex_count
    t = prof.first_zagreb - 2 * prof.edge_count
    if anchor == ANCHOR_MIN:
        acc = t * (n - 1 - hi - lo) + n * lo * hi
        for i in range(1, hi - lo):
            acc -= prof.freq.get(lo + i, 0) * i * (lo + i - hi)
    else:
        acc = t * (n - 2 * lo - 2) + n * lo * (lo + 1)
        for i in range(2, hi - lo + 1):
            acc -= prof.freq.get(lo + i, 0) * i * (i - 1)
    return acc


def leap_bound(prof: TwoDistanceProfile, alpha, kind: str) -> BoundReport:
    """Leap analogue of :func:`zagreb_bound`, anchored at the extreme
    2-distance degrees with total M1 - 2m - n*min."""
    if kind not in (KIND_SECANT, KIND_STEP):
        raise ValueError(f"unknown bound kind {kind!r}")
    value, exact = normalize_exponent(alpha)
    side = _alpha_side(value)
    if side is None:
        return _not_applicable("leap", kind, value, ALPHA_RANGE)
    if not prof.c3c4_free:
        return _not_applicable("leap", kind, value, NOT_C3C4_FREE)
    if prof.min_d2 == 0:
        return _not_applicable("leap", kind, value, ZERO_MIN_D2)
    lo, hi = prof.min_d2, prof.max_d2
    if lo == hi:
        return _not_applicable("leap", kind, value, REGULAR_PROFILE)
    n = prof.vertex_count
    total = _leap_total(prof)
    p_lo = power(lo, value, exact, "minimum 2-distance degree")
    if kind == KIND_SECANT:
        acc = n * p_lo + total * _secant(lo, hi, value, exact, "2-distance degree")
        direction = UPPER if side == "convex" else LOWER
    else:
        step = power(lo + 1, value, exact, "minimum 2-distance degree") - p_lo
        acc = n * p_lo + total * step
        if hi >= 3:
            acc += power(hi, value, exact, "maximum 2-distance degree") - p_lo - (hi - lo) * step
        direction = LOWER if side == "convex" else UPPER
    return BoundReport(domain="leap", kind=kind, alpha=value,
                       direction=direction, value=simplify(acc))


def leap_remainder_decomposition(prof: TwoDistanceProfile) -> RemainderDecomposition:
    """Split total = M1 - 2m - n*min_d2 as quotient * span + remainder."""
    _leap_guard(prof)
    lo, hi = prof.min_d2, prof.max_d2
    if lo == hi:
        raise Inapplicable(REGULAR_PROFILE, "profile has a single 2-distance degree value")
    q, r = divmod(_leap_total(prof), hi - lo)
    return RemainderDecomposition(total=_leap_total(prof), span=hi - lo, quotient=q, remainder=r)


def leap_remainder_bound(prof: TwoDistanceProfile, alpha) -> BoundReport:
    """Leap analogue of :func:`zagreb_remainder_bound`."""
    value, exact = normalize_exponent(alpha)
    side = _alpha_side(value)
    if not prof.c3c4_free:
        return _not_applicable("leap", KIND_REMAINDER, value, NOT_C3C4_FREE)
    if prof.min_d2 == 0:
        return _not_applicable("leap", KIND_REMAINDER, value, ZERO_MIN_D2)
    lo, hi = prof.min_d2, prof.max_d2
    if lo == hi:
        return _not_applicable("leap", KIND_REMAINDER, value, REGULAR_PROFILE)
    dec = leap_remainder_decomposition(prof)
    reason = _remainder_preconditions(lo, hi, prof.freq, dec, side)
    if reason is not None:
        report = _not_applicable("leap", KIND_REMAINDER, value, reason)
        return replace(report, decomposition=dec)
    return _remainder_report("leap", prof.vertex_count, lo, hi,
                             dec, value, exact, side, "minimum 2-distance degree")


def leap_remainder_classification(prof: TwoDistanceProfile):
    """Leap analogue of :func:`degree_remainder_classification`."""
    _leap_guard(prof)
    lo, hi = prof.min_d2, prof.max_d2
    if lo == hi:
        raise Inapplicable(REGULAR_PROFILE, "profile has a single 2-distance degree value")
    return _remainder_classification(lo, hi, prof.freq, leap_remainder_decomposition(prof))


SIMPLIFIED = "simplified"
ANCHORED = "anchored"


def leap_zagreb_min_zero(prof: TwoDistanceProfile, alpha, variant: str = SIMPLIFIED):
    """Leap power sum for profiles whose minimum 2-distance degree is 0
    (positive exponents only; 0**a contributes nothing).

    'simplified' eliminates the counts at 0 and 1:
        M1 - 2m + sum_{i>=2} freq[i] * (i**a - i)
    'anchored' eliminates the counts at 1 and at the maximum D (needs D >= 2),
    with s = (D**a - 1)/(D - 1):
        (n - n0) + (M1 - 2m - n + n0)*s + sum_{2<=i<D} freq[i]*(i**a - 1 - (i-1)*s)
    """
    value, exact = normalize_exponent(alpha)
    if (value < 0) if exact else (value < 0.0):
        raise ValueError("min-zero leap forms need a positive exponent")
    _leap_guard(prof, need_positive_min=False)
    if prof.min_d2 != 0:
        raise Inapplicable(NONZERO_MIN_D2, "profile minimum 2-distance degree is not 0")
    n = prof.vertex_count
    t = prof.first_zagreb - 2 * prof.edge_count
    hi = prof.max_d2
    if variant == SIMPLIFIED:
        acc = t if exact else float(t)
        for i, cnt in prof.freq.items():
            if i >= 2:
                acc += cnt * (power(i, value, exact, "2-distance degree") - i)
        return simplify(acc)
    if variant == ANCHORED:
        if hi < 2:
            raise Inapplicable(SPAN_TOO_SMALL, "anchored variant needs maximum d2 >= 2")
        n0 = prof.freq.get(0, 0)
        s = _secant(1, hi, value, exact, "2-distance degree")
        acc = (n - n0) + (t - n + n0) * s
        for i in range(2, hi):
            cnt = prof.freq.get(i, 0)
            if cnt:
                acc += cnt * (power(i, value, exact, "2-distance degree") - 1 - (i - 1) * s)
        return simplify(acc)
    raise ValueError(f"unknown variant {variant!r}")


# -- comparing bounds against direct values ---------------------------------


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def bound_gap(report: BoundReport, direct):
    """direct - bound value (sign tells which side the direct value sits on)."""
    if not report.applicable:
        raise ValueError(f"bound not applicable ({report.reason})")
    return simplify(direct - report.value)


def bound_holds(report: BoundReport, direct, rel_tol: float = 1e-9) -> bool:
    """Whether the direct value respects the reported direction, exactly in
    the exact regime and within rel_tol (relative to the bound) otherwise."""
    gap = bound_gap(report, direct)
    if _is_exact(gap):
        return gap <= 0 if report.direction == UPPER else gap >= 0
    slack = rel_tol * max(1.0, abs(float(report.value)))
    return float(gap) <= slack if report.direction == UPPER else float(gap) >= -slack


def bound_attained(report: BoundReport, direct, rel_tol: float = 1e-9) -> bool:
    """Whether the bound is met with equality (exact, or within rel_tol)."""
    gap = bound_gap(report, direct)
    if _is_exact(gap):
        return gap == 0
    return abs(float(gap)) <= rel_tol * max(1.0, abs(float(report.value)))
