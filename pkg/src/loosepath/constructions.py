"""Lower-bound colorings, extremal stars, and the bounds table.

The lower-bound coloring on n + 5 vertices peels off one star per color
and finishes with the complete block on the last six vertices; every
class is verified path-free by the detector before it is returned, so
its correctness never rests on folklore.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Hypergraph
from .errors import FalsificationWitness, FormatError, OrderTooSmall
from .patterns import find_loose_path3
from .pipeline import Coloring, threshold

# Known exact values of the smallest guaranteed order, by color count.
# n = 1 is forced by the pattern itself (first complete host with a copy);
# the rest are established small-color values from the literature.
EXACT_VALUES: dict[int, tuple[int, str]] = {1: (7, "derived: smallest complete host containing the path")}
EXACT_VALUES[2] = (8, "literature: exact two-color value")
for _n in range(3, 11):
    EXACT_VALUES[_n] = (_n + 6, "literature: exact small-color value")


@dataclass(frozen=True)
class BoundsRow:
    """One row of the bounds table for a given color count."""

    n: int
    lower: int
    upper_old: int | None
    upper_new: int
    exact: int | None
    best_upper: int

    def __post_init__(self):
        if self.lower > self.best_upper:
            raise FalsificationWitness(
                f"lower bound {self.lower} above best upper {self.best_upper} at n={self.n}"
            )
        if self.exact is not None and not self.lower <= self.exact <= self.best_upper:
            raise FalsificationWitness(
                f"exact value {self.exact} outside [{self.lower}, {self.best_upper}] at n={self.n}"
            )


def bounds_table(n_max: int) -> list[BoundsRow]:
    """Rows for n = 1..n_max: lower n+6, the linear upper 3n+1 (defined
    for n >= 7), the square-root upper threshold(n), and known exacts."""
    if n_max < 1:
        raise OrderTooSmall(f"need n_max >= 1, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        upper_old = 3 * n + 1 if n >= 7 else None
        upper_new = threshold(n)
        uppers = [upper_new] if upper_old is None else [upper_old, upper_new]
        exact = EXACT_VALUES[n][0] if n in EXACT_VALUES else None
        rows.append(
            BoundsRow(
                n=n,
                lower=n + 6,
                upper_old=upper_old,
                upper_new=upper_new,
                exact=exact,
                best_upper=min(uppers),
            )
        )
    return rows


def star_hypergraph(order: int, center: int) -> Hypergraph:
    """All binom(order-1, 2) triples through one vertex; the extremal
    path-free hypergraph."""
    if order < 3:
        raise OrderTooSmall(f"star needs order >= 3, got {order}")
    if not 0 <= center < order:
        raise FormatError(f"center {center} out of range for order {order}")
    others = [v for v in range(order) if v != center]
    edges = (tuple(sorted((center, a, b))) for a, b in combinations(others, 2))
    return Hypergraph(order, edges, validate=False)


def lower_bound_coloring(n_colors: int) -> Coloring:
    """Coloring of the complete host on n + 5 vertices with every class
    free of the loose path, witnessing that n + 5 vertices are not enough.

    Color i < n-1 takes the triples through vertex i avoiding all
    smaller vertices (a star, so path-free); the last color takes every
    triple inside the final six vertices (too few vertices for the
    path).  Each class is re-checked by the detector before returning.
    """
    if n_colors < 1:
        raise OrderTooSmall(f"need at least one color, got {n_colors}")
    order = n_colors + 5
    assignment = {}
    for t in combinations(range(order), 3):
        assignment[t] = min(t[0], n_colors - 1)
    col = Coloring(order, n_colors, assignment)
    for color, cls in enumerate(col.classes()):
        emb = find_loose_path3(cls)
        if emb is not None:
            raise FalsificationWitness(
                f"lower-bound construction class {color} contains a loose path",
                detail=emb,
            )
    return col


def bounds_tsv(rows: list[BoundsRow]) -> str:
    """Stable TSV rendering with '-' for undefined entries."""
    lines = ["n\tlower\tupper_old\tupper_new\texact\tbest_upper"]
    for r in rows:
        old = "-" if r.upper_old is None else str(r.upper_old)
        exact = "-" if r.exact is None else str(r.exact)
        lines.append(f"{r.n}\t{r.lower}\t{old}\t{r.upper_new}\t{exact}\t{r.best_upper}")
    return "\n".join(lines) + "\n"
