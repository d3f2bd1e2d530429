"""Direct, definition-level computation of the index family.

These functions walk the graph itself (degrees, non-adjacent pairs,
distance-two pairs) and are the ground truth that every profile-level
closed form in :mod:`zagreb_indices.closed_forms` is checked against.

Exponent handling:

* integer exponents -> exact arithmetic (ints; fractions when negative);
* any other real exponent -> floats;
* exponent 0 is always rejected;
* a vertex with degree (or 2-distance degree) 0 contributes 0 for positive
  exponents and is a domain error for negative ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._numeric import normalize_exponent, power, simplify
from .graph import Graph


@dataclass(frozen=True)
class ExponentParam:
    """A validated index exponent.

    The defining family excludes exponents 0 and 1 (0 collapses each term
    to a vertex count, 1 to a plain degree sum), so construction rejects
    both.  ``mode`` is derived: 'exact' for integer exponents, 'real'
    otherwise.  The computation functions below also accept bare numbers;
    bare 1 is allowed there because the coindex identities use it.
    """

    alpha: "int | float"
    mode: str = field(init=False)

    def __post_init__(self):
        alpha = self.alpha
        if isinstance(alpha, bool):
            raise TypeError("exponent must be a number")
        if isinstance(alpha, Fraction):
            alpha = int(alpha) if alpha.denominator == 1 else float(alpha)
        if not isinstance(alpha, (int, float)):
            raise TypeError(f"exponent must be a number, got {type(alpha).__name__}")
        if alpha == 0 or alpha == 1:
            raise ValueError("exponents 0 and 1 are outside the family")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "mode", "exact" if isinstance(alpha, int) else "real")


def general_first_zagreb(g: Graph, alpha):
    """Sum of degree**alpha over all vertices.

    alpha=2 is the classic first Zagreb index, alpha=3 the forgotten
    index.  Exact for integer alpha, float otherwise.
    """
    value, exact = normalize_exponent(alpha)
    total = 0 if exact else 0.0
    for u, d in enumerate(g.degrees()):
        total += power(d, value, exact, label=f"degree of vertex {u}")
    return simplify(total)


def general_first_zagreb_coindex(g: Graph, alpha):
    """Sum of degree(u)**alpha + degree(v)**alpha over unordered pairs of
    distinct non-adjacent vertices.

    Defined for integer alpha >= 1 (exact); real alpha > 0 is accepted for
    exploration (float).
    """
    value, exact = normalize_exponent(alpha)
    if exact:
        if value < 1:
            raise ValueError("coindex needs an integer exponent >= 1")
    elif value <= 0.0:
        raise ValueError("coindex needs a positive exponent")
    n = g.vertex_count
    masks = g.adjacency_masks
    powers = [power(d, value, exact, label=f"degree of vertex {u}")
              for u, d in enumerate(g.degrees())]
    total = 0 if exact else 0.0
    for u in range(n):
        for v in range(u + 1, n):
            if not (masks[u] >> v) & 1:
                total += powers[u] + powers[v]
    return simplify(total)


def general_first_leap_zagreb(g: Graph, alpha):
    """Sum of d2**alpha over all vertices, where d2 counts the vertices at
    shortest-path distance exactly 2.  Exact for integer alpha."""
    value, exact = normalize_exponent(alpha)
    total = 0 if exact else 0.0
    for u, d2 in enumerate(g.two_distance_degrees()):
        total += power(d2, value, exact, label=f"2-distance degree of vertex {u}")
    return simplify(total)


def first_leap_zagreb_coindex(g: Graph) -> int:
    """Sum of d2(u) + d2(v) over unordered pairs of distinct vertices NOT at
    distance exactly 2 (adjacent pairs and pairs at distance >= 3 both
    count).  Always an exact integer."""
    d2masks = g.distance_two_masks()
    counts = [m.bit_count() for m in d2masks]
    n = g.vertex_count
    total = 0
    for u in range(n):
        for v in range(u + 1, n):
            if not (d2masks[u] >> v) & 1:
                total += counts[u] + counts[v]
    return total


def first_zagreb(g: Graph) -> int:
    """The classic first Zagreb index (exponent 2)."""
    return general_first_zagreb(g, 2)


def first_leap_zagreb(g: Graph) -> int:
    """The first leap Zagreb index (exponent 2 on 2-distance degrees)."""
    return general_first_leap_zagreb(g, 2)
