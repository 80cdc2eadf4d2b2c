"""Seeded generators for random colorings and random path-free hypergraphs.

The PRNG is SplitMix64: state advances by the 64-bit golden-ratio
constant and the output is the two-round mix of the new state.  First
outputs for seed 0 are 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4,
0x06C45D188009454F.  Same seed plus same parameters gives bit-identical
results on any platform.
"""

from __future__ import annotations

from itertools import combinations

from .core import Hypergraph
from .errors import InvalidColoring, OrderTooSmall
from .pipeline import Coloring

_U64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit PRNG stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _U64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _U64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
        return (z ^ (z >> 31)) & _U64

    def below(self, bound: int) -> int:
        # modulo reduction; the bias is ~bound/2^64 and irrelevant here,
        # determinism is what the suites rely on
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates driven by the stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def random_coloring(order: int, n_colors: int, seed: int) -> Coloring:
    """Uniform independent color per triple, drawn in lexicographic order."""
    if order < 3:
        raise OrderTooSmall(f"coloring needs order >= 3, got {order}")
    if n_colors < 1:
        raise InvalidColoring(f"need at least one color, got {n_colors}")
    rng = SplitMix64(seed)
    assignment = {t: rng.below(n_colors) for t in combinations(range(order), 3)}
    return Coloring(order, n_colors, assignment)


def _creates_loose_path(masks: list[int], new_mask: int) -> bool:
    """Would adding the edge with this vertex mask create a loose path?

    Only paths through the new edge need checking; the host was path-free
    before.  The new edge can serve as the middle or as an end.
    """
    # as middle: two ends at distinct connectors, disjoint from each other
    ends_by_connector = []
    for m in masks:
        inter = m & new_mask
        if inter.bit_count() == 1:
            ends_by_connector.append((inter, m))
    for i, (ca, ma) in enumerate(ends_by_connector):
        for cb, mb in ends_by_connector[i + 1 :]:
            if ca != cb and ma & mb == 0:
                return True
    # as an end: a middle meeting it in one vertex, and a far end
    for inter_mid, mid in ends_by_connector:
        for m in masks:
            if m == mid:
                continue
            if (m & mid).bit_count() == 1 and m & new_mask == 0:
                return True
    return False


def random_pfree(order: int, seed: int) -> Hypergraph:
    """Greedy maximal path-free hypergraph from a seeded triple shuffle.

    Triples are shuffled with the seeded stream and added one at a time
    unless the addition would create a loose path of length three.  The
    result is maximal under that order and is deliberately dense.
    """
    if order < 5:
        raise OrderTooSmall(f"path-free generation needs order >= 5, got {order}")
    triples = list(combinations(range(order), 3))
    rng = SplitMix64(seed)
    rng.shuffle(triples)
    kept = []
    masks: list[int] = []
    for t in triples:
        m = (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        if not _creates_loose_path(masks, m):
            kept.append(t)
            masks.append(m)
    return Hypergraph(order, kept, validate=False)
