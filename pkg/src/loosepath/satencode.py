"""CNF export for "color the complete host with no monochromatic loose path".

One boolean variable per (triple, color), indexed in lexicographic
(triple, color) order starting from 1.  Clauses: every triple gets at
least one color; for every loose-path copy and every color, not all
three of its edges carry that color; and a single unit clause pins
triple (0,1,2) to color 0 as a safe symmetry break.  At-most-one-color
clauses are deliberately absent: a multi-colored satisfying assignment
restricts to a proper coloring by keeping each triple's smallest true
color, which is exactly how decode_model reads models back.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import Triple, complete_hypergraph, triple_rank
from .errors import FormatError, ModelInvalid, OrderTooSmall, UncoloredTriple
from .patterns import enumerate_loose_path3, find_loose_path3
from .pipeline import Coloring


@dataclass(frozen=True)
class CnfInstance:
    n_colors: int
    order: int
    n_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def var(self, triple: Triple, color: int) -> int:
        return triple_rank(self.order, triple) * self.n_colors + color + 1

    def triple_color_of(self, var: int) -> tuple[Triple, int]:
        idx, color = divmod(var - 1, self.n_colors)
        for i, t in enumerate(combinations(range(self.order), 3)):
            if i == idx:
                return t, color
        raise FormatError(f"variable {var} out of range")


def encode(n_colors: int, order: int) -> CnfInstance:
    """Build the CNF instance; satisfiable iff some n-coloring of the
    complete host keeps every color class path-free."""
    if order < 7:
        raise OrderTooSmall(
            f"no loose path fits in {order} vertices; encoding starts at 7"
        )
    if n_colors < 1:
        raise OrderTooSmall(f"need at least one color, got {n_colors}")

    def var(triple: Triple, color: int) -> int:
        return triple_rank(order, triple) * n_colors + color + 1

    clauses = []
    triples = list(combinations(range(order), 3))
    for t in triples:
        clauses.append(tuple(var(t, c) for c in range(n_colors)))
    host = complete_hypergraph(order)
    copies = enumerate_loose_path3(host)
    for color in range(n_colors):
        for e1, e2, e3 in copies:
            clauses.append((-var(e1, color), -var(e2, color), -var(e3, color)))
    clauses.append((var((0, 1, 2), 0),))
    return CnfInstance(
        n_colors=n_colors,
        order=order,
        n_vars=comb(order, 3) * n_colors,
        clauses=tuple(clauses),
    )


def to_dimacs(inst: CnfInstance) -> str:
    lines = [f"p cnf {inst.n_vars} {len(inst.clauses)}"]
    for clause in inst.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> list[int]:
    """Literals from solver output: 'v' lines or a plain signed-int list;
    's'/'c' lines and terminating zeros are ignored."""
    lits = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] in "cs":
            continue
        fields = line.split()
        if fields[0] == "v":
            fields = fields[1:]
        for f in fields:
            try:
                lit = int(f)
            except ValueError as exc:
                raise FormatError(f"bad literal {f!r} in model") from exc
            if lit != 0:
                lits.append(lit)
    return lits


def decode_model(model: list[int], n_colors: int, order: int) -> Coloring:
    """Turn a satisfying assignment back into a coloring.

    Each triple takes its smallest true color; a triple with no true
    color raises UncoloredTriple.  The result is validated: every class
    must be path-free, otherwise the model is rejected as ModelInvalid.
    """
    n_vars = comb(order, 3) * n_colors
    true_vars = set()
    for lit in model:
        if abs(lit) > n_vars:
            raise FormatError(f"literal {lit} out of range for {n_vars} variables")
        if lit > 0:
            true_vars.add(lit)

    assignment = {}
    for i, t in enumerate(combinations(range(order), 3)):
        base = i * n_colors
        for c in range(n_colors):
            if base + c + 1 in true_vars:
                assignment[t] = c
                break
        else:
            raise UncoloredTriple(f"triple {t} has no true color variable")
    col = Coloring(order, n_colors, assignment)
    for color, cls in enumerate(col.classes()):
        if find_loose_path3(cls) is not None:
            raise ModelInvalid(
                f"decoded class {color} contains a loose path of length three"
            )
    return col
