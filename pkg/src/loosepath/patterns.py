"""Detection and enumeration of the three forbidden patterns.

The patterns, as subhypergraphs (extra edges in the host never disqualify
a copy):

* loose path of length three -- edges e1, e2, e3 with |e1 & e2| = 1,
  |e2 & e3| = 1 and e1, e3 disjoint; spans 7 vertices.
* loose 3-cycle -- three edges pairwise sharing exactly one vertex, the
  three shared vertices distinct; spans 6 vertices.
* gadget -- five vertices whose first four carry the full 3-uniform
  clique, plus the three edges v1v2v5, v2v3v5, v3v4v5; 7 edges total.

Fast detectors return the lexicographically first witness; a separate
brute-force oracle over injective vertex maps validates them in the test
suites.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from heapq import merge
from itertools import combinations, permutations

from .core import Hypergraph, Triple


class PatternKind(enum.Enum):
    LOOSE_PATH3 = "loose-path-3"
    LOOSE_CYCLE3 = "loose-cycle-3"
    GADGET = "gadget"

    @property
    def vertex_count(self) -> int:
        return _TEMPLATES[self][0]

    @property
    def template_edges(self) -> tuple[Triple, ...]:
        """Edges of the pattern on vertex labels 0..vertex_count-1."""
        return _TEMPLATES[self][1]


_TEMPLATES = {
    PatternKind.LOOSE_PATH3: (7, ((0, 1, 2), (2, 3, 4), (4, 5, 6))),
    PatternKind.LOOSE_CYCLE3: (6, ((0, 1, 2), (0, 4, 5), (2, 3, 4))),
    PatternKind.GADGET: (
        5,
        ((0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 2, 3), (1, 2, 3), (1, 2, 4), (2, 3, 4)),
    ),
}

# Gadget edges in role terms (v1..v5 = 0..4): the 4-clique plus the three
# edges through v5.
GADGET_ROLE_EDGES = (
    (0, 1, 2),
    (0, 1, 3),
    (0, 2, 3),
    (1, 2, 3),
    (0, 1, 4),
    (1, 2, 4),
    (2, 3, 4),
)


@dataclass(frozen=True)
class Embedding:
    """A witnessed copy of a pattern inside a host hypergraph.

    roles maps e1/e2/e3 to host triples for the path and cycle, and
    v1..v5 to host vertices for the gadget.
    """

    kind: PatternKind
    edges: tuple[Triple, ...]
    roles: dict

    def validate(self, host: Hypergraph) -> None:
        """Assert this embedding's edges exist in host and fit the pattern."""
        for e in self.edges:
            if e not in host:
                raise AssertionError(f"embedding edge {e} missing from host")
        if not check_pattern_edges(self.kind, self.edges):
            raise AssertionError(f"edges {self.edges} do not form {self.kind.value}")


def check_pattern_edges(kind: PatternKind, edges) -> bool:
    """Do these host edges form the pattern, in some arrangement?"""
    edges = tuple(edges)
    sets = [set(e) for e in edges]
    if kind is PatternKind.LOOSE_PATH3:
        if len(edges) != 3:
            return False
        for mid in range(3):
            a, b = [i for i in range(3) if i != mid]
            if (
                len(sets[a] & sets[mid]) == 1
                and len(sets[mid] & sets[b]) == 1
                and not (sets[a] & sets[b])
            ):
                return True
        return False
    if kind is PatternKind.LOOSE_CYCLE3:
        if len(edges) != 3:
            return False
        return (
            len(sets[0] & sets[1]) == 1
            and len(sets[1] & sets[2]) == 1
            and len(sets[0] & sets[2]) == 1
            and len(sets[0] | sets[1] | sets[2]) == 6
        )
    if kind is PatternKind.GADGET:
        if len(edges) != 7:
            return False
        verts = sorted(set().union(*sets))
        if len(verts) != 5:
            return False
        edge_set = set(edges)
        for perm in permutations(verts):
            if perm[0] > perm[3]:
                continue
            if all(
                tuple(sorted((perm[x], perm[y], perm[z]))) in edge_set
                for x, y, z in GADGET_ROLE_EDGES
            ):
                return True
        return False
    raise ValueError(kind)


# --- loose path of length three ---------------------------------------------


def _path_exists(h: Hypergraph) -> bool:
    """Middle-centric existence scan; cheap on path-free hosts.

    For each candidate middle edge, the end-edge candidate lists are
    built per connector in increasing-degree order so that hosts whose
    edges all share a vertex (stars) bail out without touching the big
    incidence list.
    """
    if h.order < 7 or len(h.edges) < 3:
        return False
    masks = h.edge_masks
    inc = h.incidence
    for i2, e2 in enumerate(h.edges):
        m2 = masks[i2]
        conns = sorted(e2, key=lambda v: len(inc[v]))
        lists = []
        nonempty = 0
        for pos, v in enumerate(conns):
            vbit = 1 << v
            lst = [j for j in inc[v] if j != i2 and masks[j] & m2 == vbit]
            lists.append(lst)
            if lst:
                nonempty += 1
            # two empty lists among the three connectors kill this middle
            if pos + 1 - nonempty >= 2:
                break
        if nonempty < 2:
            continue
        for a in range(3):
            if not lists[a]:
                continue
            for b in range(a + 1, 3):
                if not lists[b]:
                    continue
                for ja in lists[a]:
                    ma = masks[ja]
                    for jb in lists[b]:
                        if masks[jb] & ma == 0:
                            return True
    return False


def find_loose_path3(h: Hypergraph):
    """Lexicographically first loose path of length three, or None.

    The witness minimizes (e1, e2, e3) with e1 < e3; existence is decided
    first by a scan that is fast on path-free hosts, so the quadratic
    witness extraction only runs when a copy is present.
    """
    if not _path_exists(h):
        return None
    edges = h.edges
    masks = h.edge_masks
    inc = h.incidence
    for i1, e1 in enumerate(edges):
        m1 = masks[i1]
        # middles must meet e1, so scan the merged incidence of its vertices
        prev = -1
        for i2 in merge(inc[e1[0]], inc[e1[1]], inc[e1[2]]):
            if i2 == prev or i2 == i1:
                continue
            prev = i2
            m2 = masks[i2]
            inter = m1 & m2
            if inter.bit_count() != 1:
                continue
            e2 = edges[i2]
            outer = [v for v in e2 if (1 << v) & inter == 0]
            last = -1
            for i3 in merge(inc[outer[0]], inc[outer[1]]):
                if i3 == last or i3 <= i1 or i3 == i2:
                    continue
                last = i3
                m3 = masks[i3]
                if m3 & m1 == 0 and (m3 & m2).bit_count() == 1:
                    e3 = edges[i3]
                    return Embedding(
                        PatternKind.LOOSE_PATH3,
                        (e1, e2, e3),
                        {"e1": e1, "e2": e2, "e3": e3},
                    )
    raise AssertionError("existence scan and witness scan disagree")


def enumerate_loose_path3(h: Hypergraph):
    """All loose-path copies as canonical (e1, e2, e3) tuples, e1 < e3.

    Sorted lexicographically; each copy appears exactly once (the middle
    edge of a copy is determined, the two ends are unordered).
    """
    edges = h.edges
    masks = h.edge_masks
    n = len(edges)
    out = []
    for i1 in range(n):
        m1 = masks[i1]
        for i3 in range(i1 + 1, n):
            m3 = masks[i3]
            if m1 & m3:
                continue
            for i2 in range(n):
                if i2 == i1 or i2 == i3:
                    continue
                m2 = masks[i2]
                if (m2 & m1).bit_count() == 1 and (m2 & m3).bit_count() == 1:
                    out.append((edges[i1], edges[i2], edges[i3]))
    out.sort()
    return out


# --- loose 3-cycle -----------------------------------------------------------


def find_loose_cycle3(h: Hypergraph):
    """Lexicographically first loose 3-cycle (as a sorted edge triple), or None."""
    edges = h.edges
    masks = h.edge_masks
    n = len(edges)
    if n < 3:
        return None
    for i in range(n - 2):
        mi = masks[i]
        for j in range(i + 1, n - 1):
            mj = masks[j]
            if (mi & mj).bit_count() != 1:
                continue
            mij = mi | mj
            for k in range(j + 1, n):
                mk = masks[k]
                if (
                    (mi & mk).bit_count() == 1
                    and (mj & mk).bit_count() == 1
                    and (mij | mk).bit_count() == 6
                ):
                    return Embedding(
                        PatternKind.LOOSE_CYCLE3,
                        (edges[i], edges[j], edges[k]),
                        {"e1": edges[i], "e2": edges[j], "e3": edges[k]},
                    )
    return None


# --- gadget ------------------------------------------------------------------


def find_gadget(h: Hypergraph):
    """First gadget embedding, scanning 5-vertex supports in ascending
    order and role assignments lexicographically with v1 < v4 (the
    reversal automorphism makes the other orientation redundant)."""
    if len(h.edges) < 7:
        return None
    candidates = [v for v in range(h.order) if h.degree(v) >= 3]
    if len(candidates) < 5:
        return None
    edge_set = set(h.edges)
    for sub in combinations(candidates, 5):
        smask = 0
        for v in sub:
            smask |= 1 << v
        inside = sum(1 for m in h.edge_masks if m & ~smask == 0)
        if inside < 7:
            continue
        for perm in permutations(sub):
            if perm[0] > perm[3]:
                continue
            edges = []
            ok = True
            for x, y, z in GADGET_ROLE_EDGES:
                t = tuple(sorted((perm[x], perm[y], perm[z])))
                if t not in edge_set:
                    ok = False
                    break
                edges.append(t)
            if ok:
                roles = {f"v{i + 1}": perm[i] for i in range(5)}
                return Embedding(PatternKind.GADGET, tuple(edges), roles)
    return None


# --- shared front door -------------------------------------------------------

_FINDERS = {
    PatternKind.LOOSE_PATH3: find_loose_path3,
    PatternKind.LOOSE_CYCLE3: find_loose_cycle3,
    PatternKind.GADGET: find_gadget,
}


def find_pattern(kind: PatternKind, h: Hypergraph):
    return _FINDERS[kind](h)


def contains_pattern(kind: PatternKind, h: Hypergraph) -> bool:
    if kind is PatternKind.LOOSE_PATH3:
        return _path_exists(h)
    return _FINDERS[kind](h) is not None


# --- brute-force oracle ------------------------------------------------------


def oracle_contains(kind: PatternKind, h: Hypergraph) -> bool:
    """Brute force over injective maps of the pattern's vertices into h.

    Backtracks vertex by vertex, rejecting a partial map as soon as a
    fully-mapped pattern edge is missing from the host.  Desk scale only.
    """
    k, template = _TEMPLATES[kind]
    if h.order < k:
        return False
    edge_set = set(h.edges)
    # pattern edges checked at the depth where their last vertex is placed
    checks_at = [[] for _ in range(k + 1)]
    for e in template:
        checks_at[max(e) + 1].append(e)

    img = [0] * k
    used = [False] * h.order

    def extend(depth: int) -> bool:
        if depth == k:
            return True
        for v in range(h.order):
            if used[v]:
                continue
            img[depth] = v
            ok = True
            for x, y, z in checks_at[depth + 1]:
                if tuple(sorted((img[x], img[y], img[z]))) not in edge_set:
                    ok = False
                    break
            if ok:
                used[v] = True
                if extend(depth + 1):
                    return True
                used[v] = False
        return False

    return extend(0)


def oracle_contains_plain(kind: PatternKind, h: Hypergraph) -> bool:
    """Reference oracle: every injective map, no pruning.  Tiny hosts only."""
    k, template = _TEMPLATES[kind]
    if h.order < k:
        return False
    edge_set = set(h.edges)
    for img in permutations(range(h.order), k):
        if all(
            tuple(sorted((img[x], img[y], img[z]))) in edge_set for x, y, z in template
        ):
            return True
    return False
