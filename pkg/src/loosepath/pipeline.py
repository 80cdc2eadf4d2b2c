"""Coloring audit pipeline.

Implements the counting argument that forces a monochromatic loose path
of length three once the host is large enough: purify every color class,
color vertex pairs that sit in at least three surviving same-colored
triples, pick the most popular pair color, and drive the resulting
ordinary graph into a 3-edge path whose case analysis would contradict
the purification guarantees.  Every quantity is recorded in an auditable
trace.

threshold(n) is the guaranteed order: the smallest N whose margin
m = N - 2n satisfies (m - 2)^2 >= 18n + 1, computed in exact integer
arithmetic so perfect squares (n = 16, 20, ...) do not wobble.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, isqrt

from .core import Hypergraph, Triple, make_triple
from .errors import (
    FalsificationWitness,
    FormatError,
    InvalidColoring,
    MissingGadgetEdge,
    PairDegreeTooLow,
)
from .purification import purify
from .patterns import Embedding, PatternKind, check_pattern_edges, find_loose_path3


class Coloring:
    """Total map from all triples of a complete host to colors 0..n-1."""

    __slots__ = ("order", "n_colors", "assignment", "_classes")

    def __init__(self, order: int, n_colors: int, assignment: dict):
        if n_colors < 1:
            raise InvalidColoring(f"need at least one color, got {n_colors}")
        if order < 3:
            raise InvalidColoring(f"coloring needs order >= 3, got {order}")
        expected = comb(order, 3)
        if len(assignment) != expected:
            raise InvalidColoring(
                f"assignment covers {len(assignment)} triples, expected {expected}"
            )
        for t, color in assignment.items():
            if len(t) != 3 or not (0 <= t[0] < t[1] < t[2] < order):
                raise InvalidColoring(f"bad triple {t!r}")
            if not (0 <= color < n_colors):
                raise InvalidColoring(f"color {color} out of range for triple {t}")
        self.order = order
        self.n_colors = n_colors
        self.assignment = dict(assignment)
        self._classes = None

    def color_of(self, triple: Triple) -> int:
        return self.assignment[triple]

    def class_edges(self, color: int) -> tuple[Triple, ...]:
        return self.classes()[color].edges

    def classes(self) -> tuple[Hypergraph, ...]:
        """One hypergraph per color, all on the full vertex set."""
        if self._classes is None:
            buckets = [[] for _ in range(self.n_colors)]
            for t in sorted(self.assignment):
                buckets[self.assignment[t]].append(t)
            self._classes = tuple(
                Hypergraph(self.order, edges, validate=False) for edges in buckets
            )
        return self._classes


def write_coloring(col: Coloring) -> str:
    lines = [f"p hcol {col.order} {col.n_colors}"]
    lines.extend(
        f"e {a} {b} {c} {col.assignment[(a, b, c)]}"
        for a, b, c in sorted(col.assignment)
    )
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    order = n_colors = None
    assignment = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if order is not None:
                raise FormatError(f"line {ln}: repeated header")
            if len(fields) != 4 or fields[1] != "hcol":
                raise FormatError(f"line {ln}: expected 'p hcol N n'")
            try:
                order, n_colors = int(fields[2]), int(fields[3])
            except ValueError as exc:
                raise FormatError(f"line {ln}: non-integer header field") from exc
        elif fields[0] == "e":
            if order is None:
                raise FormatError(f"line {ln}: edge before header")
            if len(fields) != 5:
                raise FormatError(f"line {ln}: expected 'e a b c s'")
            try:
                x, y, z, s = (int(f) for f in fields[1:])
            except ValueError as exc:
                raise FormatError(f"line {ln}: non-integer field") from exc
            t = make_triple(x, y, z)
            if t in assignment:
                raise FormatError(f"line {ln}: duplicate triple {t}")
            assignment[t] = s
        else:
            raise FormatError(f"line {ln}: unknown record {fields[0]!r}")
    if order is None:
        raise FormatError("missing 'p hcol N n' header")
    return Coloring(order, n_colors, assignment)


def threshold(n_colors: int) -> int:
    """Smallest order at which every n-coloring is guaranteed a
    monochromatic loose path: 2n + 2 + ceil(sqrt(18n + 1))."""
    if n_colors < 1:
        raise InvalidColoring(f"need at least one color, got {n_colors}")
    s = isqrt(18 * n_colors + 1)
    if s * s < 18 * n_colors + 1:
        s += 1
    return 2 * n_colors + 2 + s


def find_mono_path(col: Coloring):
    """First color class containing a loose path, scanning colors in order.

    Returns (color, embedding), or None below the guarantee threshold.
    At or above the threshold a miss contradicts the guarantee and raises
    FalsificationWitness.
    """
    for color, cls in enumerate(col.classes()):
        emb = find_loose_path3(cls)
        if emb is not None:
            return color, emb
    if col.order >= threshold(col.n_colors):
        raise FalsificationWitness(
            f"no monochromatic loose path in a {col.n_colors}-coloring on "
            f"{col.order} >= threshold({col.n_colors}) vertices"
        )
    return None


@dataclass(frozen=True)
class PairGraph:
    """Ordinary graph spanned by the pairs of one pair-color class."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "PairGraph":
        pairs = tuple(sorted(pairs))
        verts = set()
        for u, v in pairs:
            verts.add(u)
            verts.add(v)
        return cls(tuple(sorted(verts)), pairs)


def find_path3_in_graph(g: PairGraph):
    """Lexicographically first (v1, v2, v3, v4) with edges v1v2, v2v3, v3v4."""
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    for v1 in g.vertices:
        for v2 in adj[v1]:
            for v3 in adj[v2]:
                if v3 == v1:
                    continue
                for v4 in adj[v3]:
                    if v4 != v1 and v4 != v2:
                        return (v1, v2, v3, v4)
    return None


@dataclass(frozen=True)
class CaseWitness:
    """Outcome of the 3-edge-path case analysis: which pattern appeared."""

    kind: PatternKind
    edges: tuple[Triple, ...]
    roles: dict

    def __post_init__(self):
        if not check_pattern_edges(self.kind, self.edges):
            raise FalsificationWitness(
                f"case analysis produced edges that are not a {self.kind.value}",
                detail=self.edges,
            )


def case_analysis(ht: Hypergraph, path: tuple[int, int, int, int]) -> CaseWitness:
    """Classify what a 3-edge pair path forces inside one color class.

    Requires each of the pairs v1v2, v2v3, v3v4 to lie in at least three
    edges of ht.  Picks a middle edge v2v3v5 avoiding v1 and v4, then
    end edges v1v2w (w outside {v3, v5}) and v3v4u (u outside {v2, v5}),
    and classifies the choices: generic (w, u) gives a loose path; w = u,
    or w = v4 with u != v1, or u = v1 with w != v4 give a loose cycle;
    if the only admissible choice is (w, u) = (v4, v1) the five vertices
    span a gadget, whose seven edges are verified present.
    """
    v1, v2, v3, v4 = path
    if len({v1, v2, v3, v4}) != 4:
        raise PairDegreeTooLow(f"path vertices must be distinct, got {path}")

    def thirds(a: int, b: int) -> list[int]:
        bits = (1 << a) | (1 << b)
        out = [
            next(v for v in e if v != a and v != b)
            for e, m in zip(ht.edges, ht.edge_masks)
            if m & bits == bits
        ]
        return sorted(out)

    t12, t23, t34 = thirds(v1, v2), thirds(v2, v3), thirds(v3, v4)
    for pair, t in (((v1, v2), t12), ((v2, v3), t23), ((v3, v4), t34)):
        if len(t) < 3:
            raise PairDegreeTooLow(
                f"pair {pair} lies in {len(t)} edges of the class, needs >= 3"
            )

    def triple(a, b, c):
        return tuple(sorted((a, b, c)))

    for v5 in (x for x in t23 if x not in (v1, v4)):
        mid = triple(v2, v3, v5)
        ws = [w for w in t12 if w not in (v3, v5)]
        us = [u for u in t34 if u not in (v2, v5)]
        roles = {"v1": v1, "v2": v2, "v3": v3, "v4": v4, "v5": v5}
        for w in ws:
            for u in us:
                if w != v4 and u != w and u != v1:
                    return CaseWitness(
                        PatternKind.LOOSE_PATH3,
                        (triple(v1, v2, w), mid, triple(v3, v4, u)),
                        roles | {"w": w, "u": u},
                    )
        for w in ws:
            if w in us:
                return CaseWitness(
                    PatternKind.LOOSE_CYCLE3,
                    (triple(v1, v2, w), mid, triple(v3, v4, w)),
                    roles | {"w": w, "u": w},
                )
        if v4 in ws:
            for u in us:
                if u != v1:
                    return CaseWitness(
                        PatternKind.LOOSE_CYCLE3,
                        (triple(v1, v2, v4), mid, triple(v3, v4, u)),
                        roles | {"w": v4, "u": u},
                    )
        if v1 in us:
            for w in ws:
                if w != v4:
                    return CaseWitness(
                        PatternKind.LOOSE_CYCLE3,
                        (triple(v1, v2, w), mid, triple(v1, v3, v4)),
                        roles | {"w": w, "u": v1},
                    )
        # every admissible choice was (w, u) = (v4, v1): forced gadget
        assert ws == [v4] and us == [v1]
        gadget_edges = []
        for x, y, z in (
            (v1, v2, v3),
            (v1, v2, v4),
            (v1, v3, v4),
            (v2, v3, v4),
            (v1, v2, v5),
            (v2, v3, v5),
            (v3, v4, v5),
        ):
            t = triple(x, y, z)
            if t not in ht:
                raise MissingGadgetEdge(
                    f"forced gadget on {(v1, v2, v3, v4, v5)} is missing edge {t}"
                )
            gadget_edges.append(t)
        return CaseWitness(
            PatternKind.GADGET,
            tuple(gadget_edges),
            roles | {"w": v4, "u": v1},
        )
    raise AssertionError("a middle edge avoiding the path ends always exists")


MONO_PATH_FOUND = "mono-path-found"
INCONCLUSIVE = "inconclusive"
FALSIFICATION = "falsification"


@dataclass(frozen=True)
class TraceStatus:
    kind: str
    stage: int
    detail: str
    color: int | None = None
    witness: Embedding | None = None
    case: CaseWitness | None = None


@dataclass
class PipelineTrace:
    """Every quantity of the audit, re-checked on completion."""

    order: int
    n_colors: int
    margin: int
    blank_budget: int
    status: TraceStatus | None = None
    blank_sets: tuple[tuple[Triple, ...], ...] = ()
    blank_counts: tuple[int, ...] = ()
    blank_total: int = 0
    pair_colors: dict = field(default_factory=dict)
    uncolored_count: int | None = None
    colored_counts: tuple[int, ...] = ()
    chosen_color: int | None = None
    chosen_count: int | None = None
    graph_vertex_count: int | None = None
    graph_edge_count: int | None = None
    path: tuple[int, int, int, int] | None = None
    case_witness: CaseWitness | None = None

    def validate(self) -> None:
        if self.blank_counts and not self.blank_total < self.blank_budget:
            raise FalsificationWitness(
                f"{self.blank_total} blank edges, budget {self.blank_budget}"
            )
        if self.uncolored_count is not None and self.margin > 2:
            if self.uncolored_count * (self.margin - 2) > 3 * self.blank_total:
                raise FalsificationWitness(
                    f"{self.uncolored_count} uncolored pairs exceed "
                    f"3*{self.blank_total}/{self.margin - 2}"
                )
        if self.chosen_count is not None and self.uncolored_count is not None:
            total_pairs = comb(self.order, 2)
            if self.chosen_count * self.n_colors < total_pairs - self.uncolored_count:
                raise FalsificationWitness("chosen color misses the pigeonhole average")


def audit(col: Coloring) -> PipelineTrace:
    """Run the full counting pipeline on a coloring and record the trace.

    Terminal states: mono-path-found at stage 0 (some class contains the
    loose path), inconclusive at stage 5 (the pair graph was too small to
    force anything -- lawful only below the threshold), or falsification
    (an internal guarantee failed; never happens on lawful inputs).
    """
    n = col.n_colors
    big_n = col.order
    m = big_n - 2 * n
    trace = PipelineTrace(
        order=big_n, n_colors=n, margin=m, blank_budget=3 * big_n * n
    )

    # stage 0: direct scan; purification below applies to path-free classes only
    for color, cls in enumerate(col.classes()):
        emb = find_loose_path3(cls)
        if emb is not None:
            trace.status = TraceStatus(
                MONO_PATH_FOUND,
                stage=0,
                detail=f"color {color} contains a loose path of length three",
                color=color,
                witness=emb,
            )
            return trace

    # stage 1: purify every class; deleted edges become blanks
    blanks: list[frozenset] = []
    try:
        for cls in col.classes():
            if big_n >= 5:
                cert = purify(cls)
                blanks.append(frozenset(cert.deleted))
            else:
                # below 5 vertices neither forbidden pattern fits
                blanks.append(frozenset())
    except FalsificationWitness as exc:
        trace.status = TraceStatus(FALSIFICATION, stage=1, detail=str(exc))
        return trace
    trace.blank_sets = tuple(tuple(sorted(b)) for b in blanks)
    trace.blank_counts = tuple(len(b) for b in blanks)
    trace.blank_total = sum(trace.blank_counts)
    if trace.blank_total >= trace.blank_budget:
        trace.status = TraceStatus(
            FALSIFICATION,
            stage=1,
            detail=f"{trace.blank_total} blanks exceed budget {trace.blank_budget}",
        )
        return trace

    # stage 2: pair coloring over non-blank triples
    pair_colors: dict[tuple[int, int], int | None] = {}
    blank_cover: dict[tuple[int, int], int] = {}
    for u, v in combinations(range(big_n), 2):
        counts = [0] * n
        blanks_here = 0
        for w in range(big_n):
            if w == u or w == v:
                continue
            t = tuple(sorted((u, v, w)))
            color = col.assignment[t]
            if t in blanks[color]:
                blanks_here += 1
            else:
                counts[color] += 1
        chosen = None
        for s in range(n):
            if counts[s] >= 3:
                chosen = s
                break
        pair_colors[(u, v)] = chosen
        blank_cover[(u, v)] = blanks_here
    trace.pair_colors = pair_colors

    # stage 3: every uncolored pair must sit in at least m - 2 blanks
    uncolored = [p for p, s in pair_colors.items() if s is None]
    trace.uncolored_count = len(uncolored)
    for p in uncolored:
        if blank_cover[p] < m - 2:
            trace.status = TraceStatus(
                FALSIFICATION,
                stage=3,
                detail=f"uncolored pair {p} lies in only {blank_cover[p]} blanks",
            )
            return trace
    if m > 2 and len(uncolored) * (m - 2) > 3 * trace.blank_total:
        trace.status = TraceStatus(
            FALSIFICATION,
            stage=3,
            detail=f"{len(uncolored)} uncolored pairs exceed the 3B/(m-2) bound",
        )
        return trace

    # stage 4: the most popular pair color
    colored_counts = [0] * n
    for s in pair_colors.values():
        if s is not None:
            colored_counts[s] += 1
    trace.colored_counts = tuple(colored_counts)
    t_color = max(range(n), key=lambda s: (colored_counts[s], -s))
    trace.chosen_color = t_color
    trace.chosen_count = colored_counts[t_color]

    # stage 5: the graph spanned by the chosen pairs
    g = PairGraph.from_pairs(p for p, s in pair_colors.items() if s == t_color)
    trace.graph_vertex_count = len(g.vertices)
    trace.graph_edge_count = len(g.edges)
    if len(g.edges) <= len(g.vertices):
        if big_n >= threshold(n):
            trace.status = TraceStatus(
                FALSIFICATION,
                stage=5,
                detail=(
                    f"pair graph has {len(g.edges)} edges on {len(g.vertices)} "
                    f"vertices at order {big_n} >= threshold"
                ),
            )
        else:
            trace.status = TraceStatus(
                INCONCLUSIVE,
                stage=5,
                detail=(
                    f"pair graph has {len(g.edges)} edges on {len(g.vertices)} "
                    "vertices; nothing is forced below the threshold"
                ),
            )
        trace.validate()
        return trace

    # stage 6: more edges than vertices forces a 3-edge path
    path = find_path3_in_graph(g)
    if path is None:
        trace.status = TraceStatus(
            FALSIFICATION,
            stage=6,
            detail="no 3-edge path in a graph with more edges than vertices",
        )
        return trace
    trace.path = path

    # stage 7: the case analysis on the surviving class contradicts purify
    survivors = Hypergraph(
        big_n,
        (e for e in col.class_edges(t_color) if e not in blanks[t_color]),
        validate=False,
    )
    try:
        witness = case_analysis(survivors, path)
        trace.case_witness = witness
        trace.status = TraceStatus(
            FALSIFICATION,
            stage=7,
            detail=(
                f"case analysis found a {witness.kind.value} among surviving "
                f"edges of color {t_color}, contradicting purification"
            ),
            case=witness,
        )
    except FalsificationWitness as exc:
        trace.status = TraceStatus(FALSIFICATION, stage=7, detail=str(exc))
    trace.validate()
    return trace
