"""Immutable simple graphs, degree profiles, and small-graph enumeration.

Graphs are stored as one adjacency bitmask per vertex (plain Python ints,
so there is no hard size limit, and graphs that fit in a machine word stay
cheap).  Adjacency tests, common-neighbour counts and distance-two queries
are single mask operations, which is what makes exhaustive verification
over all labeled graphs on <= 7 vertices practical in pure Python.

Everything in this module is an immutable value object: graphs and
profiles can be shared freely across threads or processes.  The exhaustive
enumerator accepts a deterministic shard argument so verification suites
can fan out over workers and merge results without coordination.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence, Tuple


class GraphConstructionError(ValueError):
    """Raised when an edge list does not describe a simple graph."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple undirected graph on vertices 0..n-1.

    Build one with ``Graph(n, pairs)`` or :func:`from_edge_list`.  Duplicate
    edges are collapsed; self-loops and out-of-range endpoints are rejected
    with an error that names the offending pair.
    """

    __slots__ = ("vertex_count", "_masks", "_edges")

    def __init__(self, vertex_count: int, pairs: Iterable[Tuple[int, int]] = ()):
        if not isinstance(vertex_count, int) or vertex_count < 0:
            raise GraphConstructionError(f"vertex count must be a non-negative integer, got {vertex_count!r}")
        masks = [0] * vertex_count
        for pair in pairs:
            u, v = pair
            if u == v:
                raise GraphConstructionError(f"self-loop at vertex {u!r}")
            if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
                raise GraphConstructionError(
                    f"edge ({u!r}, {v!r}) out of range for {vertex_count} vertices"
                )
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "_masks", tuple(masks))
        object.__setattr__(self, "_edges", None)

    @classmethod
    def _from_masks(cls, vertex_count: int, masks: Sequence[int]) -> "Graph":
        """Trusted fast path for already-validated adjacency masks."""
        g = object.__new__(cls)
        object.__setattr__(g, "vertex_count", vertex_count)
        object.__setattr__(g, "_masks", tuple(masks))
        object.__setattr__(g, "_edges", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph objects are immutable")

    def __delattr__(self, name):
        raise AttributeError("Graph objects are immutable")

    # -- basic queries -------------------------------------------------

    @property
    def adjacency_masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        cached = self._edges
        if cached is None:
            out = []
            for u in range(self.vertex_count):
                for v in _bits(self._masks[u] >> (u + 1)):
                    out.append((u, u + 1 + v))
            cached = tuple(out)
            object.__setattr__(self, "_edges", cached)
        return cached

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._masks) // 2

    def degree(self, u: int) -> int:
        return self._masks[u].bit_count()

    def degrees(self) -> Tuple[int, ...]:
        return tuple(m.bit_count() for m in self._masks)

    def neighbors(self, u: int) -> Iterator[int]:
        return _bits(self._masks[u])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._masks[u] >> v) & 1)

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 0:
            return False
        if n == 1:
            return True
        masks = self._masks
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= masks[u]
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << n) - 1

    def distance_two_masks(self) -> Tuple[int, ...]:
        """Per vertex, the bitmask of vertices at shortest-path distance exactly 2."""
        masks = self._masks
        out = []
        for u in range(self.vertex_count):
            first = masks[u]
            reach = 0
            for v in _bits(first):
                reach |= masks[v]
            out.append(reach & ~(first | (1 << u)))
        return tuple(out)

    def two_distance_degrees(self) -> Tuple[int, ...]:
        return tuple(m.bit_count() for m in self.distance_two_masks())

    # -- value semantics -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._masks == other._masks

    def __hash__(self):
        return hash((self.vertex_count, self._masks))

    def __repr__(self):
        return f"Graph({self.vertex_count}, {list(self.edges)!r})"


def from_edge_list(vertex_count: int, pairs: Iterable[Tuple[int, int]]) -> Graph:
    """Validating constructor; see :class:`Graph`."""
    return Graph(vertex_count, pairs)


# -- profiles -----------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Degree frequency summary of a graph: n, m, and counts per degree.

    All closed forms downstream consume profiles rather than graphs, so a
    profile can also be written down directly for a graph family that is
    never materialised (see ``tetracene_degree_profile``).
    """

    vertex_count: int
    edge_count: int
    freq: Mapping[int, int]

    def __post_init__(self):
        freq = {int(k): int(v) for k, v in sorted(self.freq.items())}
        object.__setattr__(self, "freq", freq)
        if self.vertex_count <= 0:
            raise ValueError("profile needs at least one vertex")
        if any(k < 0 or v <= 0 for k, v in freq.items()):
            raise ValueError(f"bad frequency table {freq!r}")
        if sum(freq.values()) != self.vertex_count:
            raise ValueError("frequencies do not sum to the vertex count")
        if sum(k * v for k, v in freq.items()) != 2 * self.edge_count:
            raise ValueError("degree sum does not equal twice the edge count")

    @property
    def min_degree(self) -> int:
        return min(self.freq)

    @property
    def max_degree(self) -> int:
        return max(self.freq)


@dataclass(frozen=True)
class TwoDistanceProfile:
    """2-distance-degree frequency summary, plus the graph data the leap
    closed forms need: the first Zagreb value and whether the source graph
    is free of triangles and quadrilaterals (only then does the identity
    sum(i * freq[i]) == M1 - 2m hold, and only then do the closed forms
    apply)."""

    vertex_count: int
    edge_count: int
    first_zagreb: int
    freq: Mapping[int, int]
    c3c4_free: bool

    def __post_init__(self):
        freq = {int(k): int(v) for k, v in sorted(self.freq.items())}
        object.__setattr__(self, "freq", freq)
        if self.vertex_count <= 0:
            raise ValueError("profile needs at least one vertex")
        if any(k < 0 or v <= 0 for k, v in freq.items()):
            raise ValueError(f"bad frequency table {freq!r}")
        if sum(freq.values()) != self.vertex_count:
            raise ValueError("frequencies do not sum to the vertex count")
        if self.c3c4_free:
            total = sum(k * v for k, v in freq.items())
            if total != self.first_zagreb - 2 * self.edge_count:
                raise ValueError(
                    "2-distance degree sum must equal M1 - 2m on a C3/C4-free profile"
                )

    @property
    def min_d2(self) -> int:
        return min(self.freq)

    @property
    def max_d2(self) -> int:
        return max(self.freq)


def degree_profile(g: Graph) -> DegreeProfile:
    """Degree profile of a non-empty graph."""
    if g.vertex_count == 0:
        raise ValueError("the empty graph has no degree profile")
    return DegreeProfile(g.vertex_count, g.edge_count, Counter(g.degrees()))


def two_distance_profile(g: Graph) -> TwoDistanceProfile:
    """2-distance-degree profile of a non-empty graph (BFS truncated at depth 2)."""
    if g.vertex_count == 0:
        raise ValueError("the empty graph has no 2-distance profile")
    degs = g.degrees()
    return TwoDistanceProfile(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        first_zagreb=sum(d * d for d in degs),
        freq=Counter(g.two_distance_degrees()),
        c3c4_free=is_c3c4_free(g),
    )


def is_c3c4_free(g: Graph) -> bool:
    """True iff the graph contains no triangle and no 4-cycle.

    A triangle is an edge whose endpoints share a neighbour; a 4-cycle
    exists iff some pair of distinct vertices has two common neighbours.
    """
    masks = g.adjacency_masks
    n = g.vertex_count
    for u in range(n):
        mu = masks[u]
        for v in range(u + 1, n):
            common = mu & masks[v]
            if common:
                if common.bit_count() >= 2:
                    return False
                if (mu >> v) & 1:
                    return False
    return True


# -- enumeration and random graphs --------------------------------------

MAX_ENUMERATION_VERTICES = 7


def enumerate_connected_graphs(
    n: int, shard: Tuple[int, int] | None = None
) -> Iterator[Graph]:
    """Yield every labeled connected graph on n vertices exactly once.

    Runs over all 2^(n(n-1)/2) edge subsets in increasing bitmask order, so
    the output order is deterministic.  ``shard=(k, parts)`` keeps only the
    subsets whose index is congruent to k mod parts; the shards partition
    the full run, so results can be fanned out and merged.

    Isomorphic graphs with different labelings are yielded separately (no
    isomorphism reduction): downstream identity checks quantify over all
    labeled graphs, and for n <= 7 the redundancy is affordable.
    """
    if not isinstance(n, int) or not (1 <= n <= MAX_ENUMERATION_VERTICES):
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_VERTICES}, got {n!r}")
    start, step = 0, 1
    if shard is not None:
        start, parts = shard
        if not (0 <= start < parts):
            raise ValueError(f"bad shard {shard!r}")
        step = parts
    pairs = list(combinations(range(n), 2))
    bits_to_pair = {1 << i: uv for i, uv in enumerate(pairs)}
    full = (1 << n) - 1
    min_edges = n - 1
    for mask in range(start, 1 << len(pairs), step):
        if mask.bit_count() < min_edges:
            continue
        masks = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            u, v = bits_to_pair[low]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            rest ^= low
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= masks[low.bit_length() - 1]
                f ^= low
            frontier = grow & ~seen
            seen |= frontier
        if seen == full:
            yield Graph._from_masks(n, masks)


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.0) -> Graph:
    """A uniformly-shaped random connected graph: a random recursive tree
    plus each remaining pair independently with probability extra_edge_prob.
    Deterministic given the rng state."""
    if n < 1:
        raise ValueError("need at least one vertex")
    masks = [0] * n
    for v in range(1, n):
        u = rng.randrange(v)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    if extra_edge_prob > 0:
        for u in range(n):
            for v in range(u + 1, n):
                if not (masks[u] >> v) & 1 and rng.random() < extra_edge_prob:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
    return Graph._from_masks(n, masks)


# -- plain-text edge lists ----------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format.

    Line 1 is ``n m``; the next m lines are ``u v`` with 0-based endpoints.
    ``#`` starts a comment; blank lines are skipped.  Errors carry the
    offending line number.
    """
    header: Tuple[int, int] | None = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            header = (a, b)
        else:
            pairs.append((a, b))
    if header is None:
        raise ValueError("empty edge-list input")
    n, m = header
    if len(pairs) != m:
        raise ValueError(f"header promises {m} edges but {len(pairs)} edge lines follow")
    try:
        return Graph(n, pairs)
    except GraphConstructionError as exc:
        raise ValueError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    """Canonical text form of a graph; parse(format(g)) == g, bit for bit."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))
