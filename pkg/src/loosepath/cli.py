"""Command-line entry point.

Exit codes: 0 success or witness found; 1 legitimate not-found or
inconclusive; 2 invalid input or usage; 3 internal falsification (never
seen on lawful inputs in a correct build).
"""

from __future__ import annotations

import argparse
import sys

from . import constructions, gen, pipeline, purification, satencode, selfcheck
from .core import parse_hypergraph, write_hypergraph
from .errors import FalsificationWitness, InputError

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_INVALID = 2
EXIT_FALSIFIED = 3


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _witness_lines(embedding) -> list[str]:
    return [f"e {a} {b} {c}" for a, b, c in embedding.edges]


def cmd_bounds(args) -> int:
    rows = constructions.bounds_table(args.max_n)
    _emit(constructions.bounds_tsv(rows), args.output)
    return EXIT_OK


def cmd_construct_lower(args) -> int:
    col = constructions.lower_bound_coloring(args.colors)
    _emit(pipeline.write_coloring(col), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    col = pipeline.parse_coloring(_read(args.coloring))
    lines = []
    clean = True
    for color, cls in enumerate(col.classes()):
        emb = pipeline.find_loose_path3(cls)
        if emb is None:
            lines.append(f"color {color} path-free edges={len(cls.edges)}")
        else:
            clean = False
            lines.append(f"color {color} contains-path edges={len(cls.edges)}")
            lines.extend("  " + ln for ln in _witness_lines(emb))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if clean else EXIT_NOT_FOUND


def cmd_extract(args) -> int:
    col = pipeline.parse_coloring(_read(args.coloring))
    found = pipeline.find_mono_path(col)
    if found is None:
        _emit("not-found\n", args.output)
        return EXIT_NOT_FOUND
    color, emb = found
    _emit("\n".join([f"color {color}"] + _witness_lines(emb)) + "\n", args.output)
    return EXIT_OK


def render_certificate(cert: purification.DeletionCertificate, edge_count: int) -> str:
    lines = [f"purify order={cert.order} edges={edge_count}"]
    for rec in cert.ledger:
        verts = ",".join(str(v) for v in rec.vertices)
        line = (
            f"component vertices={verts} n={rec.vertex_count} "
            f"edges={rec.edge_count} class={rec.classification} "
            f"deleted={rec.deleted_count}"
        )
        if rec.min_hitting_exceeds_four:
            line += " hitting-above-four"
        lines.append(line)
    lines.extend(f"delete e {a} {b} {c}" for a, b, c in cert.deleted)
    lines.append(f"total-deleted {cert.total_deleted} budget {3 * cert.order}")
    return "\n".join(lines) + "\n"


def cmd_purify(args) -> int:
    h = parse_hypergraph(_read(args.graph))
    cert = purification.purify(h)
    _emit(render_certificate(cert, len(h.edges)), args.output)
    return EXIT_OK


def render_trace(trace: pipeline.PipelineTrace) -> str:
    lines = [
        f"audit order={trace.order} colors={trace.n_colors} "
        f"margin={trace.margin} blank-budget={trace.blank_budget}"
    ]
    status = trace.status
    lines.append("stage: scan")
    if status.kind == pipeline.MONO_PATH_FOUND:
        lines.append(f"  witness color={status.color}")
        lines.extend("  " + ln for ln in _witness_lines(status.witness))
    else:
        lines.append("  no monochromatic loose path")
        if trace.blank_counts:
            lines.append("stage: purify")
            for color, count in enumerate(trace.blank_counts):
                lines.append(f"  blanks color={color} count={count}")
            lines.append(f"  blank-total {trace.blank_total}")
        if trace.uncolored_count is not None:
            colored = sum(trace.colored_counts) if trace.colored_counts else 0
            lines.append("stage: pair-color")
            lines.append(
                f"  colored-pairs {colored} uncolored {trace.uncolored_count}"
            )
        if trace.chosen_color is not None:
            lines.append("stage: choose")
            lines.append(
                f"  color={trace.chosen_color} pairs={trace.chosen_count}"
            )
        if trace.graph_vertex_count is not None:
            lines.append("stage: pair-graph")
            lines.append(
                f"  vertices={trace.graph_vertex_count} edges={trace.graph_edge_count}"
            )
        if trace.path is not None:
            lines.append("stage: graph-path")
            lines.append("  path " + " ".join(str(v) for v in trace.path))
        if trace.case_witness is not None:
            lines.append("stage: case-analysis")
            lines.append(f"  kind {trace.case_witness.kind.value}")
            for a, b, c in trace.case_witness.edges:
                lines.append(f"  e {a} {b} {c}")
    lines.append(f"terminal {status.kind} stage={status.stage} detail={status.detail}")
    return "\n".join(lines) + "\n"


def cmd_audit(args) -> int:
    col = pipeline.parse_coloring(_read(args.coloring))
    trace = pipeline.audit(col)
    _emit(render_trace(trace), args.output)
    kind = trace.status.kind
    if kind == pipeline.MONO_PATH_FOUND:
        return EXIT_OK
    if kind == pipeline.INCONCLUSIVE:
        return EXIT_NOT_FOUND
    return EXIT_FALSIFIED


def cmd_gen(args) -> int:
    if args.what == "coloring":
        if args.colors is None:
            raise InputError("gen coloring needs --colors")
        col = gen.random_coloring(args.order, args.colors, args.seed)
        _emit(pipeline.write_coloring(col), args.output)
    else:
        h = gen.random_pfree(args.order, args.seed)
        _emit(write_hypergraph(h), args.output)
    return EXIT_OK


def cmd_sat_export(args) -> int:
    inst = satencode.encode(args.colors, args.order)
    _emit(satencode.to_dimacs(inst), args.output)
    return EXIT_OK


def cmd_sat_decode(args) -> int:
    model = satencode.parse_model(_read(args.model))
    col = satencode.decode_model(model, args.colors, args.order)
    header = (
        f"c decoded model: {args.colors} colors on {args.order} vertices, "
        "all classes path-free\n"
    )
    _emit(header + pipeline.write_coloring(col), args.output)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    results = selfcheck.run_all(quick=args.quick, seed=args.seed)
    ok = True
    lines = []
    for r in results:
        ok = ok and r.ok
        lines.append(f"{'ok' if r.ok else 'FAIL'} {r.name} {r.details}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if ok else EXIT_FALSIFIED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loosepath",
        description="3-uniform hypergraph toolkit for loose-path Ramsey machinery",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("bounds", help="bounds table as TSV")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    add_output(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct-lower", help="lower-bound coloring on n+5 vertices")
    p.add_argument("--colors", type=int, required=True)
    add_output(p)
    p.set_defaults(func=cmd_construct_lower)

    p = sub.add_parser("verify", help="report per-class path witness or path-free")
    p.add_argument("--coloring", required=True)
    add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", help="first monochromatic loose path in a coloring")
    p.add_argument("--coloring", required=True)
    add_output(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("audit", help="run the full counting pipeline on a coloring")
    p.add_argument("--coloring", required=True)
    add_output(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("purify", help="delete edges until no cycle or gadget remains")
    p.add_argument("--graph", required=True)
    add_output(p)
    p.set_defaults(func=cmd_purify)

    p = sub.add_parser("gen", help="seeded random instances")
    p.add_argument("what", choices=("coloring", "pfree"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--colors", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    add_output(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sat-export", help="DIMACS CNF for path-free colorability")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    add_output(p)
    p.set_defaults(func=cmd_sat_export)

    p = sub.add_parser("sat-decode", help="decode and validate a solver model")
    p.add_argument("--model", required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    add_output(p)
    p.set_defaults(func=cmd_sat_decode)

    p = sub.add_parser("selfcheck", help="run the exhaustive desk-scale suites")
    p.add_argument("--quick", action="store_true", help="subsample the big sweeps")
    p.add_argument("--seed", type=int, default=0)
    add_output(p)
    p.set_defaults(func=cmd_selfcheck)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except FalsificationWitness as exc:
        print(f"falsification: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
