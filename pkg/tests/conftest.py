"""Shared test oracles.

The containment tables here are built from scratch in test code (raw
enumeration of injective pattern embeddings plus a superset-closure
pass) so the heavy sweeps validate the library against an independent
computation path, not against itself.
"""

from itertools import combinations, permutations

import pytest

from loosepath.core import Hypergraph
from loosepath.gen import SplitMix64
from loosepath.purification import purify
from loosepath.patterns import find_gadget, find_loose_cycle3

TRIPLES6 = tuple(combinations(range(6), 3))
T6_INDEX = {t: i for i, t in enumerate(TRIPLES6)}

CYCLE_TEMPLATE = ((0, 1, 2), (2, 3, 4), (0, 4, 5))
GADGET_TEMPLATE = (
    (0, 1, 2),
    (0, 1, 3),
    (0, 2, 3),
    (1, 2, 3),
    (0, 1, 4),
    (1, 2, 4),
    (2, 3, 4),
)


def copy_masks_on_six(template, k):
    masks = set()
    for img in permutations(range(6), k):
        m = 0
        for x, y, z in template:
            m |= 1 << T6_INDEX[tuple(sorted((img[x], img[y], img[z])))]
        masks.add(m)
    return sorted(masks)


def closure_table(seed_masks, nbits):
    """bit m set iff mask m is a superset of some seed mask"""
    big = 0
    for m in seed_masks:
        big |= 1 << m
    span = 1 << nbits
    for b in range(nbits):
        step = 1 << b
        pattern = (1 << step) - 1
        size = 2 * step
        while size < span:
            pattern |= pattern << size
            size *= 2
        big |= (big & pattern) << step
    return big.to_bytes(span // 8, "little")


def table_has(table, mask):
    return bool(table[mask >> 3] >> (mask & 7) & 1)


def hypergraph6(mask):
    return Hypergraph(
        6, (TRIPLES6[i] for i in range(20) if mask >> i & 1), validate=False
    )


def mask_of_edges6(edges):
    m = 0
    for e in edges:
        m |= 1 << T6_INDEX[e]
    return m


@pytest.fixture(scope="session")
def six_tables():
    cyc = closure_table(copy_masks_on_six(CYCLE_TEMPLATE, 6), 20)
    gad = closure_table(copy_masks_on_six(GADGET_TEMPLATE, 5), 20)
    return cyc, gad


@pytest.fixture(scope="session")
def six_vertex_sweep(six_tables):
    """One pass over all 2^20 six-vertex hypergraphs.

    Runs the cycle and gadget detectors against the oracle tables and
    purify against its budget and residual guarantees, and returns the
    aggregate so separate acceptance tests can assert their own slices.
    """
    cyc_table, gad_table = six_tables
    summary = {
        "cases": 0,
        "detector_mismatches": 0,
        "purify_failures": 0,
        "budget_violations": 0,
        "residual_violations": 0,
        "max_deleted": 0,
        "residual_by_mask": {},
    }
    rng = SplitMix64(20240)
    sample_every = (1 << 20) // 10000
    for mask in range(1 << 20):
        h = hypergraph6(mask)
        if (find_loose_cycle3(h) is not None) != table_has(cyc_table, mask):
            summary["detector_mismatches"] += 1
        if (find_gadget(h) is not None) != table_has(gad_table, mask):
            summary["detector_mismatches"] += 1
        try:
            cert = purify(h)
        except Exception:
            summary["purify_failures"] += 1
            continue
        if cert.total_deleted >= 18:
            summary["budget_violations"] += 1
        residual = mask & ~mask_of_edges6(cert.deleted)
        if table_has(cyc_table, residual) or table_has(gad_table, residual):
            summary["residual_violations"] += 1
        if cert.total_deleted > summary["max_deleted"]:
            summary["max_deleted"] = cert.total_deleted
        if mask % sample_every == rng.below(sample_every):
            summary["residual_by_mask"][mask] = residual
        summary["cases"] += 1
    return summary


def report(label, ok, details=""):
    marker = "PASS" if ok else "FAIL"
    print(f"{marker} {label}" + (f" ({details})" if details else ""))
    assert ok, f"{label}: {details}"
