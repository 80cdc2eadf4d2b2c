"""Edge-deletion purification of path-free hypergraphs.

Given a hypergraph on n >= 5 vertices that contains no loose path of
length three, purify() deletes fewer than 3n edges so that no loose
3-cycle and no gadget survives, working component by component:

* component with a cycle on >= 7 vertices: delete every edge (the edge
  count of such a component is asserted to stay below 3*n_i - 8);
* component with a cycle on exactly 6 vertices: keep only the edges
  through a maximum-degree vertex -- a star contains neither pattern;
* component with a gadget but no cycle: it must span exactly 5 vertices;
  delete a minimum set of edges hitting every gadget copy;
* anything else is already clean.

Any violation of the asserted structure raises FalsificationWitness
rather than being silently repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .core import Hypergraph, Triple, components
from .errors import FalsificationWitness, NoGadgetPresent, NotPathFree, OrderTooSmall
from .patterns import (
    GADGET_ROLE_EDGES,
    PatternKind,
    contains_pattern,
    find_gadget,
    find_loose_cycle3,
    find_loose_path3,
)

CYCLE_LARGE = "cycle-large"
CYCLE_SIX = "cycle-six"
GADGET_COMPONENT = "gadget"
CLEAN = "clean"


@dataclass(frozen=True)
class ComponentRecord:
    """Ledger row: what purify did to one component."""

    vertices: tuple[int, ...]
    vertex_count: int
    edge_count: int
    classification: str
    deleted: tuple[Triple, ...]
    min_hitting_exceeds_four: bool = False

    @property
    def deleted_count(self) -> int:
        return len(self.deleted)


@dataclass(frozen=True)
class DeletionCertificate:
    """Outcome of purify: the deleted edges plus a per-component ledger."""

    order: int
    deleted: tuple[Triple, ...]
    ledger: tuple[ComponentRecord, ...]

    @property
    def total_deleted(self) -> int:
        return len(self.deleted)

    def __post_init__(self):
        if sum(r.deleted_count for r in self.ledger) != self.total_deleted:
            raise FalsificationWitness(
                "ledger deletions do not add up to the certificate total"
            )
        if self.total_deleted >= 3 * self.order:
            raise FalsificationWitness(
                f"deleted {self.total_deleted} edges, budget is {3 * self.order}"
            )


# All gadget copies on 5 fixed vertices, as bitmasks over the 10 possible
# triples; used by the exhaustive hitting-set search.
_TRIPLES5 = tuple(combinations(range(5), 3))
_T5_INDEX = {t: i for i, t in enumerate(_TRIPLES5)}


def _gadget_copy_masks5() -> tuple[int, ...]:
    masks = set()
    for perm in permutations(range(5)):
        m = 0
        for x, y, z in GADGET_ROLE_EDGES:
            m |= 1 << _T5_INDEX[tuple(sorted((perm[x], perm[y], perm[z])))]
        masks.add(m)
    return tuple(sorted(masks))


_GADGET_MASKS5 = _gadget_copy_masks5()


def destroy_gadget_component(comp: Hypergraph) -> tuple[Triple, ...]:
    """Minimum set of edges whose removal leaves the component gadget-free.

    The component must span exactly 5 vertices and contain a gadget.
    Exhaustive search over deletion sets in increasing size, then
    lexicographic order, so the result is the deterministic minimum.
    """
    support = comp.support()
    if len(support) != 5:
        raise NoGadgetPresent(
            f"component spans {len(support)} vertices, needs exactly 5"
        )
    edges = comp.edges
    if len(edges) > 10:
        raise NoGadgetPresent(f"component has {len(edges)} edges, at most 10 possible")

    relabel = {v: i for i, v in enumerate(support)}
    bits = [
        _T5_INDEX[tuple(sorted((relabel[a], relabel[b], relabel[c])))]
        for a, b, c in edges
    ]
    full = 0
    for b in bits:
        full |= 1 << b
    copies = [m for m in _GADGET_MASKS5 if m & full == m]
    if not copies:
        raise NoGadgetPresent("component contains no gadget")

    for size in range(1, len(edges) + 1):
        for combo in combinations(range(len(edges)), size):
            removed = 0
            for i in combo:
                removed |= 1 << bits[i]
            rest = full & ~removed
            if not any(m & rest == m for m in copies):
                return tuple(edges[i] for i in combo)
    raise AssertionError("deleting every edge always destroys the gadget")


def purify(h: Hypergraph) -> DeletionCertificate:
    """Run the purification procedure on a path-free hypergraph.

    Raises NotPathFree when the input contains a loose path of length
    three, OrderTooSmall below 5 vertices, and FalsificationWitness when
    the structure the procedure relies on fails to hold (oversized cycle
    components, gadget components not on 5 vertices, or a residual copy
    surviving the deletions).
    """
    if h.order < 5:
        raise OrderTooSmall(f"purification needs order >= 5, got {h.order}")
    witness = find_loose_path3(h)
    if witness is not None:
        raise NotPathFree("input contains a loose path of length three", witness)

    records = []
    deleted_all = []
    for comp in components(h).components:
        n_i = len(comp.vertices)
        sub = Hypergraph(h.order, comp.edges, validate=False)
        exceeds_four = False
        if find_loose_cycle3(sub) is not None:
            if n_i >= 7:
                budget = 3 * n_i - 8
                if len(comp.edges) > budget:
                    raise FalsificationWitness(
                        f"cycle component on {n_i} vertices has {len(comp.edges)} "
                        f"edges, above the {budget} bound",
                        detail=comp,
                    )
                deleted = comp.edges
                classification = CYCLE_LARGE
            else:
                # a cycle spans 6 vertices, so n_i == 6 here
                center = max(
                    comp.vertices, key=lambda v: (len(sub.incidence[v]), -v)
                )
                deleted = tuple(e for e in comp.edges if center not in e)
                classification = CYCLE_SIX
        else:
            gadget = find_gadget(sub)
            if gadget is not None:
                if n_i != 5:
                    raise FalsificationWitness(
                        f"cycle-free gadget component spans {n_i} vertices, not 5",
                        detail=(comp, gadget),
                    )
                deleted = destroy_gadget_component(sub)
                exceeds_four = len(deleted) > 4
                classification = GADGET_COMPONENT
            else:
                deleted = ()
                classification = CLEAN

        if len(deleted) >= 3 * n_i:
            raise FalsificationWitness(
                f"deleted {len(deleted)} edges from a component on {n_i} vertices"
            )
        if deleted:
            residual = sub.without(deleted)
            if contains_pattern(PatternKind.LOOSE_CYCLE3, residual) or contains_pattern(
                PatternKind.GADGET, residual
            ):
                raise FalsificationWitness(
                    "residual component still contains a forbidden pattern",
                    detail=(comp, deleted),
                )
        records.append(
            ComponentRecord(
                vertices=comp.vertices,
                vertex_count=n_i,
                edge_count=len(comp.edges),
                classification=classification,
                deleted=deleted,
                min_hitting_exceeds_four=exceeds_four,
            )
        )
        deleted_all.extend(deleted)

    return DeletionCertificate(
        order=h.order, deleted=tuple(sorted(deleted_all)), ledger=tuple(records)
    )
