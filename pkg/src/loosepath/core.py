"""Canonical 3-uniform hypergraph representation and bookkeeping.

Vertices are dense 0-based integers below the ambient order; hyperedges
are strictly ascending 3-tuples.  Everything is immutable after
construction and all iteration is in lexicographic order, so every
algorithm built on top is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DuplicateVertex, FormatError, OrderTooSmall, SameVertex

Triple = tuple[int, int, int]


def make_triple(x: int, y: int, z: int) -> Triple:
    """Return the ascending-sorted triple {x, y, z}.

    Raises DuplicateVertex if any two arguments coincide.
    """
    if x == y or y == z or x == z:
        raise DuplicateVertex(f"triple needs three distinct vertices, got ({x}, {y}, {z})")
    a, b, c = sorted((x, y, z))
    return (a, b, c)


class Hypergraph:
    """A 3-uniform hypergraph: vertex count plus a deduplicated triple set."""

    __slots__ = ("order", "edges", "_masks", "_incidence")

    def __init__(self, order: int, edges=(), validate: bool = True):
        edges = tuple(sorted(edges))
        if validate:
            prev = None
            for e in edges:
                if len(e) != 3 or not (0 <= e[0] < e[1] < e[2]):
                    raise FormatError(f"not a canonical triple: {e!r}")
                if e[2] >= order:
                    raise FormatError(f"vertex {e[2]} out of range for order {order}")
                if e == prev:
                    raise FormatError(f"duplicate edge: {e!r}")
                prev = e
        self.order = order
        self.edges = edges
        self._masks = None
        self._incidence = None

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and self.order == other.order
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"Hypergraph(order={self.order}, edges={len(self.edges)})"

    def __contains__(self, triple):
        from bisect import bisect_left

        i = bisect_left(self.edges, triple)
        return i < len(self.edges) and self.edges[i] == triple

    @property
    def edge_masks(self) -> tuple[int, ...]:
        """Per-edge vertex bitmasks, aligned with self.edges."""
        if self._masks is None:
            self._masks = tuple((1 << a) | (1 << b) | (1 << c) for a, b, c in self.edges)
        return self._masks

    @property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the ascending indices of edges containing it."""
        if self._incidence is None:
            inc = [[] for _ in range(self.order)]
            for i, (a, b, c) in enumerate(self.edges):
                inc[a].append(i)
                inc[b].append(i)
                inc[c].append(i)
            self._incidence = tuple(tuple(lst) for lst in inc)
        return self._incidence

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def support(self) -> tuple[int, ...]:
        """Vertices that appear in at least one edge, ascending."""
        seen = set()
        for e in self.edges:
            seen.update(e)
        return tuple(sorted(seen))

    def without(self, removed) -> "Hypergraph":
        """Copy of the hypergraph with the given edges removed."""
        removed = set(removed)
        return Hypergraph(
            self.order, (e for e in self.edges if e not in removed), validate=False
        )


def complete_hypergraph(order: int) -> Hypergraph:
    """All binom(order, 3) triples, in lexicographic order."""
    if order < 3:
        raise OrderTooSmall(f"complete 3-uniform hypergraph needs order >= 3, got {order}")
    return Hypergraph(order, combinations(range(order), 3), validate=False)


def pair_degree(h: Hypergraph, v: int, w: int) -> int:
    """Number of edges of h containing both v and w."""
    if v == w:
        raise SameVertex(f"pair degree needs two distinct vertices, got {v} twice")
    if not (0 <= v < h.order and 0 <= w < h.order):
        raise FormatError(f"pair ({v}, {w}) out of range for order {h.order}")
    bit_v, bit_w = 1 << v, 1 << w
    both = bit_v | bit_w
    return sum(1 for m in h.edge_masks if m & both == both)


@dataclass(frozen=True)
class Component:
    """One connected component: its spanned vertices and its edges."""

    vertices: tuple[int, ...]
    edges: tuple[Triple, ...]


@dataclass(frozen=True)
class ComponentPartition:
    """Components ordered by smallest vertex, plus the isolated vertices."""

    components: tuple[Component, ...]
    isolated: tuple[int, ...]


def components(h: Hypergraph) -> ComponentPartition:
    """Partition h's edges into connected components via union-find.

    Two edges are connected when a chain of pairwise-intersecting edges
    joins them.  Isolated vertices (in no edge) are reported separately,
    not as components.
    """
    parent = list(range(h.order))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for a, b, c in h.edges:
        ra = find(a)
        parent[find(b)] = ra
        parent[find(c)] = ra

    by_root: dict[int, list[Triple]] = {}
    for e in h.edges:
        by_root.setdefault(find(e[0]), []).append(e)

    comps = []
    for edges in by_root.values():
        verts = set()
        for e in edges:
            verts.update(e)
        comps.append(Component(tuple(sorted(verts)), tuple(edges)))
    comps.sort(key=lambda comp: comp.vertices[0])

    covered = set()
    for comp in comps:
        covered.update(comp.vertices)
    isolated = tuple(v for v in range(h.order) if v not in covered)
    return ComponentPartition(tuple(comps), isolated)


def triple_rank(order: int, triple: Triple) -> int:
    """Lexicographic rank of a triple among all triples of the given order."""
    a, b, c = triple
    return comb(order, 3) - comb(order - a, 3) + comb(order - a - 1, 2) - comb(order - b, 2) + (c - b - 1)


def all_triples(order: int):
    return combinations(range(order), 3)


# --- text format -----------------------------------------------------------
#
# Header `p hgraph N`, one `e a b c` line per edge, `c ...` comments.


def write_hypergraph(h: Hypergraph) -> str:
    lines = [f"p hgraph {h.order}"]
    lines.extend(f"e {a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    order = None
    edges = []
    seen = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if order is not None:
                raise FormatError(f"line {ln}: repeated header")
            if len(fields) != 3 or fields[1] != "hgraph":
                raise FormatError(f"line {ln}: expected 'p hgraph N'")
            try:
                order = int(fields[2])
            except ValueError as exc:
                raise FormatError(f"line {ln}: non-integer order") from exc
            if order < 0:
                raise FormatError(f"line {ln}: negative order")
        elif fields[0] == "e":
            if order is None:
                raise FormatError(f"line {ln}: edge before header")
            if len(fields) != 4:
                raise FormatError(f"line {ln}: expected 'e a b c'")
            try:
                x, y, z = (int(f) for f in fields[1:])
            except ValueError as exc:
                raise FormatError(f"line {ln}: non-integer vertex") from exc
            if min(x, y, z) < 0 or max(x, y, z) >= order:
                raise FormatError(f"line {ln}: vertex out of range 0..{order - 1}")
            t = make_triple(x, y, z)
            if t in seen:
                raise FormatError(f"line {ln}: duplicate edge {t}")
            seen.add(t)
            edges.append(t)
        else:
            raise FormatError(f"line {ln}: unknown record {fields[0]!r}")
    if order is None:
        raise FormatError("missing 'p hgraph N' header")
    return Hypergraph(order, edges, validate=False)
