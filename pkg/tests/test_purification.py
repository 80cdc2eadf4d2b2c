from itertools import combinations

import pytest

from loosepath.core import Hypergraph, complete_hypergraph
from loosepath.errors import NoGadgetPresent, NotPathFree, OrderTooSmall
from loosepath.gen import SplitMix64, random_pfree
from loosepath.purification import (
    CLEAN,
    CYCLE_LARGE,
    CYCLE_SIX,
    GADGET_COMPONENT,
    destroy_gadget_component,
    purify,
)
from loosepath.patterns import (
    PatternKind,
    check_pattern_edges,
    contains_pattern,
    find_loose_path3,
)

GADGET_EDGES = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 4), (1, 2, 4), (2, 3, 4)]


def star(order, center=0):
    return Hypergraph(
        order,
        [
            tuple(sorted((center, a, b)))
            for a, b in combinations([v for v in range(order) if v != center], 2)
        ],
    )


def brute_min_hitting(h):
    """independent minimum: try all deletion subsets, smallest first"""
    edges = h.edges
    for size in range(len(edges) + 1):
        for combo in combinations(edges, size):
            if not contains_pattern(PatternKind.GADGET, h.without(combo)):
                return size
    raise AssertionError


def test_purify_star_is_clean():
    cert = purify(star(9))
    assert cert.total_deleted == 0
    assert [r.classification for r in cert.ledger] == [CLEAN]


def test_purify_exact_gadget_component():
    cert = purify(Hypergraph(5, GADGET_EDGES))
    assert cert.total_deleted <= 4
    assert [r.classification for r in cert.ledger] == [GADGET_COMPONENT]
    assert cert.total_deleted == brute_min_hitting(Hypergraph(5, GADGET_EDGES))
    assert not cert.ledger[0].min_hitting_exceeds_four


def test_purify_complete_six():
    cert = purify(complete_hypergraph(6))
    assert cert.total_deleted == 10
    rec = cert.ledger[0]
    assert rec.classification == CYCLE_SIX
    assert rec.edge_count == 20
    # what survives is the star at vertex 0
    kept = set(complete_hypergraph(6).edges) - set(cert.deleted)
    assert len(kept) == 10
    assert all(0 in e for e in kept)


def test_purify_cycle_large_component():
    # a loose cycle plus one edge that meets it in two vertices: still
    # path-free, spans 7 vertices, and contains the cycle
    h = Hypergraph(7, [(0, 1, 2), (2, 3, 4), (0, 4, 5), (0, 2, 6)])
    assert find_loose_path3(h) is None
    cert = purify(h)
    rec = cert.ledger[0]
    assert rec.classification == CYCLE_LARGE
    assert rec.vertex_count == 7
    assert rec.deleted_count == 4  # whole component went away
    assert cert.total_deleted < 3 * 7


def test_purify_mixed_components():
    edges = [tuple(sorted((0, a, b))) for a, b in combinations(range(1, 9), 2)]
    edges += [tuple(sorted((9 + x, 9 + y, 9 + z))) for x, y, z in combinations(range(6), 3)]
    edges += [tuple(15 + v for v in e) for e in GADGET_EDGES]
    h = Hypergraph(20, edges)
    cert = purify(h)
    assert [r.classification for r in cert.ledger] == [CLEAN, CYCLE_SIX, GADGET_COMPONENT]
    assert cert.total_deleted == 0 + 10 + 1
    assert cert.total_deleted == sum(r.deleted_count for r in cert.ledger)


def test_purify_rejects_hosts_with_paths():
    with pytest.raises(NotPathFree) as err:
        purify(complete_hypergraph(7))
    assert err.value.witness is not None
    assert check_pattern_edges(PatternKind.LOOSE_PATH3, err.value.witness.edges)


def test_purify_rejects_tiny_order():
    with pytest.raises(OrderTooSmall):
        purify(Hypergraph(4, [(0, 1, 2)]))


def test_purify_all_five_vertex_hypergraphs():
    # no cycle fits in 5 vertices, so only gadget components and clean ones
    triples5 = list(combinations(range(5), 3))
    for mask in range(1 << 10):
        h = Hypergraph(
            5, [triples5[i] for i in range(10) if mask >> i & 1], validate=False
        )
        cert = purify(h)
        assert cert.total_deleted < 15
        residual = h.without(cert.deleted)
        assert not contains_pattern(PatternKind.GADGET, residual)
        assert not contains_pattern(PatternKind.LOOSE_CYCLE3, residual)


def test_destroy_exact_gadget_minimum():
    h = Hypergraph(5, GADGET_EDGES)
    removed = destroy_gadget_component(h)
    assert len(removed) == brute_min_hitting(h) == 1
    assert not contains_pattern(PatternKind.GADGET, h.without(removed))


def test_destroy_complete_five():
    h = complete_hypergraph(5)
    removed = destroy_gadget_component(h)
    assert len(removed) <= 4
    assert len(removed) == brute_min_hitting(h)
    assert not contains_pattern(PatternKind.GADGET, h.without(removed))


def test_destroy_requires_gadget():
    with pytest.raises(NoGadgetPresent):
        destroy_gadget_component(Hypergraph(5, GADGET_EDGES[:6]))
    with pytest.raises(NoGadgetPresent):
        destroy_gadget_component(Hypergraph(6, [(0, 1, 2), (3, 4, 5)]))


def test_purify_random_pfree_certificates():
    rng = SplitMix64(2024)
    for trial in range(120):
        order = 7 + trial % 6
        h = random_pfree(order, rng.next_u64())
        cert = purify(h)
        assert cert.total_deleted < 3 * order
        assert cert.total_deleted == sum(r.deleted_count for r in cert.ledger)
        for rec in cert.ledger:
            assert rec.deleted_count < 3 * rec.vertex_count
        residual = h.without(cert.deleted)
        assert not contains_pattern(PatternKind.LOOSE_CYCLE3, residual)
        assert not contains_pattern(PatternKind.GADGET, residual)
        assert set(cert.deleted) <= set(h.edges)
