"""Named graph constructions.

Covers the basic families (paths, cycles, stars, complete graphs), six
fixed example graphs (``figure1`` .. ``figure6``) that the sharpness suite
uses as equality witnesses, the two parameterised extremal families, and
one profile-only family (tetracene chains) that is described by its degree
counts without ever materialising vertices.
"""

from __future__ import annotations

from itertools import combinations

from .graph import DegreeProfile, Graph


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 joined to all others."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, combinations(range(n), 2))


# The six fixed example graphs.  Each is a hand-laid-out drawing reduced to
# an edge list; the comments give the drawing coordinate of every vertex
# index so the pictures can be reconstructed.
_FIGURES = {
    # 4-cycle with two pendant vertices on each cycle vertex.
    # 0=(-3,3) 1=(3,3) 2=(3,-3) 3=(-3,-3); pendants 4=(6,4) 5=(4,6) on 1,
    # 6=(-4,6) 7=(-6,4) on 0, 8=(6,-4) 9=(4,-6) on 2, 10=(-6,-4) 11=(-4,-6) on 3.
    1: (12, [(0, 1), (1, 2), (2, 3), (0, 3),
             (1, 4), (1, 5), (0, 6), (0, 7),
             (2, 8), (2, 9), (3, 10), (3, 11)]),
    # 4-cycle with two pendants on a single cycle vertex.
    # 0=(-3,3) 1=(3,3) 2=(3,-3) 3=(-3,-3); pendants 4=(6,4) 5=(4,6) on 1.
    2: (6, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (1, 5)]),
    # 4-cycle with 3 pendants on one cycle vertex and 4 on each of the rest.
    # 0=(-3,3) 1=(3,3) 2=(3,-3) 3=(-3,-3);
    # on 1: 4=(6,5) 5=(5,6) 6=(6.4,3.5) 7=(3.5,6.4);
    # on 0: 8=(-4,6) 9=(-5.3,5.3) 10=(-6,4);
    # on 2: 11=(6,-5) 12=(5,-6) 13=(6.4,-3.5) 14=(3.5,-6.4);
    # on 3: 15=(-6,-5) 16=(-5,-6) 17=(-6.4,-3.5) 18=(-3.5,-6.4).
    3: (19, [(0, 1), (1, 2), (2, 3), (0, 3),
             (1, 4), (1, 5), (1, 6), (1, 7),
             (0, 8), (0, 9), (0, 10),
             (2, 11), (2, 12), (2, 13), (2, 14),
             (3, 15), (3, 16), (3, 17), (3, 18)]),
    # Spider-ish tree: a 5-vertex path whose middle vertex also carries one
    # pendant and two pendant 2-paths.
    # 0=(-10,0) 1=(-5,0) 2=(0,0) 3=(5,0) 4=(10,0);
    # 5=(-3,4) on 2; 6=(3,4) on 2 with 7=(6,8) on 6; 8=(0,-5) on 2 with 9=(0,-10) on 8.
    4: (10, [(0, 1), (1, 2), (2, 3), (3, 4),
             (2, 5), (2, 6), (6, 7), (2, 8), (8, 9)]),
    # 5-vertex path with one pendant on each of the two inner non-centre vertices.
    # 0=(-12,0) 1=(-6,0) 2=(0,0) 3=(6,0) 4=(12,0); 5=(-6,6) on 1; 6=(6,-6) on 3.
    5: (7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)]),
    # Star on 6 vertices with one pendant hung from each of three leaves
    # (same shape as star_with_pendants(6, 3)).
    # 0=(0,0) centre; leaves 1=(-5,0) 2=(5,0) 3=(-3,4) 4=(3,4) 5=(0,-5);
    # pendants 6=(10,0) on 2, 7=(6,8) on 4, 8=(0,-10) on 5.
    6: (9, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 6), (4, 7), (5, 8)]),
}


def figure_graph(index: int) -> Graph:
    """One of the six fixed example graphs, by number (1..6)."""
    try:
        n, edges = _FIGURES[index]
    except KeyError:
        raise ValueError(f"no example graph number {index!r}") from None
    return Graph(n, edges)


def cycle_with_pendants(p: int, r: int) -> Graph:
    """A p-cycle carrying r - 1 pendant vertices on cycle vertex 0 and r
    pendants on every other cycle vertex.

    The degree profile is exactly: p - 1 vertices of degree r + 2, one
    vertex of degree r + 1, and n - p leaves, with n = m = p(r + 1) - 1.
    This family attains the remainder-decomposition degree bound.
    """
    if p < 3:
        raise ValueError("cycle needs at least three vertices")
    if r < 1:
        raise ValueError("need at least one pendant per cycle vertex")
    edges = [(i, (i + 1) % p) for i in range(p)]
    nxt = p
    for i in range(p):
        for _ in range(r - 1 if i == 0 else r):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def star_with_pendants(p: int, a: int) -> Graph:
    """A star on p vertices with one pendant hung from each of a leaves,
    requiring p > 4 and 1 < a < p - 2.

    Its 2-distance degrees are: p - 2 on every original leaf, a on the
    centre, and 1 on every pendant.  This family attains the
    remainder-decomposition leap bound.
    """
    if p <= 4:
        raise ValueError("star must have more than four vertices")
    if not (1 < a < p - 2):
        raise ValueError(f"pendant count must satisfy 1 < a < p - 2, got a={a}, p={p}")
    edges = [(0, i) for i in range(1, p)]
    edges.extend((leaf, p + k) for k, leaf in enumerate(range(1, a + 1)))
    return Graph(p + a, edges)


def tetracene_degree_profile(k: int) -> DegreeProfile:
    """Degree profile of a chain of k fused tetracene units: 18k vertices,
    23k - 2 edges, 8k + 4 of degree 2 and 10k - 4 of degree 3.

    Profile-only on purpose: every downstream closed form needs nothing
    but these counts, so no concrete embedding is constructed.
    """
    if k < 1:
        raise ValueError("chain length must be at least 1")
    return DegreeProfile(18 * k, 23 * k - 2, {2: 8 * k + 4, 3: 10 * k - 4})


# CLI-facing registry: tag -> (builder, number of integer parameters).
FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "complete": (complete_graph, 1),
    "figure1": (lambda: figure_graph(1), 0),
    "figure2": (lambda: figure_graph(2), 0),
    "figure3": (lambda: figure_graph(3), 0),
    "figure4": (lambda: figure_graph(4), 0),
    "figure5": (lambda: figure_graph(5), 0),
    "figure6": (lambda: figure_graph(6), 0),
    "cycle_pendants": (cycle_with_pendants, 2),
    "star_pendants": (star_with_pendants, 2),
    "tetracene_profile": (tetracene_degree_profile, 1),
}


def build_named(tag: str, *params: int):
    """Build a registered family member; returns a Graph, or a DegreeProfile
    for the profile-only families."""
    try:
        builder, arity = FAMILIES[tag]
    except KeyError:
        raise ValueError(f"unknown family {tag!r}") from None
    if len(params) != arity:
        raise ValueError(f"family {tag!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def build_from_spec(spec: str):
    """Build from a compact ``tag`` or ``tag:p1,p2`` string (CLI syntax)."""
    tag, _, rest = spec.partition(":")
    params = []
    if rest:
        for field in rest.split(","):
            try:
                params.append(int(field))
            except ValueError:
                raise ValueError(f"bad family parameter {field!r} in {spec!r}") from None
    return build_named(tag, *params)
