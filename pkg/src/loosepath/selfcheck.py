"""Exhaustive desk-scale verification suites behind the selfcheck command.

The six-vertex and five-vertex universes are small enough to sweep
completely.  Pattern presence is cross-checked against containment
tables built by brute-force enumeration of injective pattern embeddings
followed by a superset closure -- a code path with nothing in common
with the fast detectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from .core import Hypergraph
from .gen import SplitMix64
from .purification import destroy_gadget_component, purify
from .patterns import (
    PatternKind,
    contains_pattern,
    find_gadget,
    find_loose_cycle3,
    oracle_contains,
)
from .pipeline import PairGraph, find_path3_in_graph, threshold


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    details: str


# --- containment tables ------------------------------------------------------

TRIPLES6 = tuple(combinations(range(6), 3))
_T6_INDEX = {t: i for i, t in enumerate(TRIPLES6)}


def _copy_masks_on_six(kind: PatternKind) -> tuple[int, ...]:
    """Bitmasks (over the 20 triples of a 6-vertex host) of every copy of
    the pattern, from raw injective-map enumeration."""
    k = kind.vertex_count
    template = kind.template_edges
    masks = set()
    for img in permutations(range(6), k):
        m = 0
        for x, y, z in template:
            m |= 1 << _T6_INDEX[tuple(sorted((img[x], img[y], img[z])))]
        masks.add(m)
    return tuple(sorted(masks))


def superset_closure_table(seed_masks, nbits: int) -> bytes:
    """Byte table with bit m set iff m is a superset of some seed mask."""
    big = 0
    for m in seed_masks:
        big |= 1 << m
    span = 1 << nbits
    for b in range(nbits):
        step = 1 << b
        block = (1 << step) - 1
        pattern = block
        size = 2 * step
        while size < span:
            pattern |= pattern << size
            size *= 2
        big |= (big & pattern) << step
    return big.to_bytes(span // 8, "little")


def table_contains(table: bytes, mask: int) -> bool:
    return bool(table[mask >> 3] >> (mask & 7) & 1)


def containment_tables_six() -> tuple[bytes, bytes]:
    """(cycle table, gadget table) over all 2^20 six-vertex hypergraphs."""
    cyc = superset_closure_table(_copy_masks_on_six(PatternKind.LOOSE_CYCLE3), 20)
    gad = superset_closure_table(_copy_masks_on_six(PatternKind.GADGET), 20)
    return cyc, gad


def hypergraph_from_mask6(mask: int) -> Hypergraph:
    return Hypergraph(
        6, (TRIPLES6[i] for i in range(20) if mask >> i & 1), validate=False
    )


def mask6_of_edges(edges) -> int:
    m = 0
    for e in edges:
        m |= 1 << _T6_INDEX[e]
    return m


# --- sweeps ------------------------------------------------------------------


def purify_sweep_six(quick: bool = False, seed: int = 0) -> CheckResult:
    """Purify every 6-vertex hypergraph (or a random subsample with
    --quick): budget below 18, residual free of both patterns."""
    cyc_table, gad_table = containment_tables_six()
    if quick:
        rng = SplitMix64(seed)
        cases = sorted({rng.below(1 << 20) for _ in range(1 << 14)})
    else:
        cases = range(1 << 20)
    max_deleted = 0
    count = 0
    for mask in cases:
        h = hypergraph_from_mask6(mask)
        cert = purify(h)
        if cert.total_deleted >= 18:
            return CheckResult(
                "purify-sweep-6", False, f"mask {mask} deleted {cert.total_deleted}"
            )
        residual = mask & ~mask6_of_edges(cert.deleted)
        if table_contains(cyc_table, residual) or table_contains(gad_table, residual):
            return CheckResult(
                "purify-sweep-6", False, f"mask {mask} left a forbidden pattern"
            )
        max_deleted = max(max_deleted, cert.total_deleted)
        count += 1
    return CheckResult(
        "purify-sweep-6", True, f"cases={count} max-deleted={max_deleted}"
    )


def gadget_hitting_sweep_five() -> CheckResult:
    """Every 5-vertex hypergraph containing the gadget yields a minimum
    hitting set of at most 4 edges."""
    triples5 = tuple(combinations(range(5), 3))
    worst = 0
    count = 0
    for mask in range(1 << 10):
        h = Hypergraph(
            5, (triples5[i] for i in range(10) if mask >> i & 1), validate=False
        )
        if find_gadget(h) is None:
            continue
        removed = destroy_gadget_component(h)
        if len(removed) > 4:
            return CheckResult(
                "gadget-hitting-5", False, f"mask {mask} needs {len(removed)} deletions"
            )
        if find_gadget(h.without(removed)) is not None:
            return CheckResult("gadget-hitting-5", False, f"mask {mask} not destroyed")
        worst = max(worst, len(removed))
        count += 1
    return CheckResult("gadget-hitting-5", True, f"hosts={count} max-hitting={worst}")


def _random_host(rng: SplitMix64, order: int) -> Hypergraph:
    # density varies from 1/16 to 15/16 so both sparse and dense hosts appear
    num = rng.below(15) + 1
    bound = num * ((1 << 64) // 16)
    edges = [t for t in combinations(range(order), 3) if rng.next_u64() < bound]
    return Hypergraph(order, edges, validate=False)


def detector_oracle_equivalence(quick: bool = False, seed: int = 0) -> CheckResult:
    """Fast detectors against the brute-force oracle.

    Six-vertex hosts are checked against the enumeration-based tables
    (all 2^20, or a subsample with --quick); random hosts on 7..9
    vertices are checked against the injective-map oracle for all three
    patterns.
    """
    cyc_table, gad_table = containment_tables_six()
    if quick:
        rng = SplitMix64(seed)
        cases = sorted({rng.below(1 << 20) for _ in range(1 << 14)})
    else:
        cases = range(1 << 20)
    for mask in cases:
        h = hypergraph_from_mask6(mask)
        if (find_loose_cycle3(h) is not None) != table_contains(cyc_table, mask):
            return CheckResult("detector-oracle", False, f"cycle mismatch at {mask}")
        if (find_gadget(h) is not None) != table_contains(gad_table, mask):
            return CheckResult("detector-oracle", False, f"gadget mismatch at {mask}")

    rng = SplitMix64(seed ^ 0x9E3779B97F4A7C15)
    samples = 1000 if quick else 10000
    for i in range(samples):
        order = 7 + i % 3
        h = _random_host(rng, order)
        for kind in PatternKind:
            if contains_pattern(kind, h) != oracle_contains(kind, h):
                return CheckResult(
                    "detector-oracle",
                    False,
                    f"{kind.value} mismatch on random host #{i} (order {order})",
                )
    return CheckResult(
        "detector-oracle", True, f"six-vertex cases plus {samples} random hosts agree"
    )


def path_forcing_check(quick: bool = False, seed: int = 0) -> CheckResult:
    """Graphs with more edges than vertices contain a 3-edge path:
    exhaustively on up to 7 vertices (6 with --quick), then on random
    larger graphs."""
    for k in range(2, 7 if quick else 8):
        slots = list(combinations(range(k), 2))
        n_slots = len(slots)
        for mask in range(1 << n_slots):
            if mask.bit_count() <= k:
                continue
            edges = [slots[i] for i in range(n_slots) if mask >> i & 1]
            g = PairGraph.from_pairs(edges)
            if find_path3_in_graph(g) is None:
                return CheckResult(
                    "path-forcing", False, f"k={k} mask={mask} has no 3-edge path"
                )
    rng = SplitMix64(seed)
    for i in range(1000 if quick else 10000):
        k = 8 + rng.below(193)
        want = k + 1 + rng.below(k)
        pairs = set()
        while len(pairs) < want:
            u = rng.below(k)
            v = rng.below(k)
            if u != v:
                pairs.add((min(u, v), max(u, v)))
        g = PairGraph.from_pairs(pairs)
        if find_path3_in_graph(g) is None:
            return CheckResult("path-forcing", False, f"random graph #{i} failed")
    return CheckResult("path-forcing", True, "exhaustive small graphs plus random graphs")


def arithmetic_sweep(limit: int = 10**6) -> CheckResult:
    """Integer boundary facts for the guarantee threshold.

    For every n up to the limit the computed threshold brackets the
    square root exactly and the strict positivity (m-1)(m-2) > 18n holds
    at the threshold margin.  Crossover against the linear bound 3n+1:
    the square-root bound formula ties it exactly at n = 20 and beats it
    for every larger n (threshold ties again at 21 by integer rounding,
    then wins outright).
    """
    for n in range(1, limit + 1):
        thr = threshold(n)
        d = thr - 2 * n - 2
        if not (d >= 0 and d * d >= 18 * n + 1 > (d - 1) * (d - 1)):
            return CheckResult("arithmetic", False, f"threshold bracket fails at n={n}")
        margin = thr - 2 * n
        if not (margin - 1) * (margin - 2) > 18 * n:
            return CheckResult("arithmetic", False, f"strict positivity fails at n={n}")
    if 18 * 20 + 1 != 19 * 19:
        return CheckResult("arithmetic", False, "no exact tie at n=20")
    for n in range(21, 10001):
        if not 18 * n + 1 < (n - 1) * (n - 1):
            return CheckResult("arithmetic", False, f"formula crossover fails at n={n}")
    for n in range(7, 20):
        if not 3 * n + 1 < threshold(n):
            return CheckResult("arithmetic", False, f"linear bound not better at n={n}")
    for n in (20, 21):
        if threshold(n) != 3 * n + 1:
            return CheckResult("arithmetic", False, f"integer tie missing at n={n}")
    for n in range(22, 10001):
        if not threshold(n) < 3 * n + 1:
            return CheckResult("arithmetic", False, f"integer crossover fails at n={n}")
    # closed form of the pigeonhole average, in exact rationals
    for n in range(1, 60):
        for m in range(3, 70):
            big_n = 2 * n + m
            r = 3 * big_n * n
            lhs = Fraction(comb(big_n, 2) - Fraction(3 * r, m - 2), n)
            rhs = big_n + big_n * (Fraction(m - 1, 2 * n) - Fraction(9, m - 2))
            if lhs != rhs:
                return CheckResult("arithmetic", False, f"closed form fails n={n} m={m}")
    return CheckResult("arithmetic", True, f"n swept to {limit}")


def run_all(quick: bool = False, seed: int = 0) -> list[CheckResult]:
    return [
        purify_sweep_six(quick=quick, seed=seed),
        gadget_hitting_sweep_five(),
        detector_oracle_equivalence(quick=quick, seed=seed),
        path_forcing_check(quick=quick, seed=seed),
        arithmetic_sweep(10**4 if quick else 10**6),
    ]
