import subprocess
import sys

import pytest

from loosepath.cli import run


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bounds_output(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--max-n", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n\tlower")
    assert [ln.split("\t")[1] for ln in lines[1:]] == ["7", "8", "9"]


def test_construct_lower_and_verify(tmp_path, capsys):
    path = tmp_path / "lower3.hcol"
    code, _, _ = run_cli(capsys, "construct-lower", "--colors", "3", "-o", str(path))
    assert code == 0
    text = path.read_text()
    assert text.startswith("p hcol 8 3\n")

    code, out, _ = run_cli(capsys, "verify", "--coloring", str(path))
    assert code == 0
    assert out.count("path-free") == 3

    code, out, _ = run_cli(capsys, "extract", "--coloring", str(path))
    assert code == 1
    assert out.strip() == "not-found"


def test_verify_flags_a_path(tmp_path, capsys):
    lines = ["p hcol 7 1"]
    from itertools import combinations

    lines += [f"e {a} {b} {c} 0" for a, b, c in combinations(range(7), 3)]
    path = tmp_path / "one.hcol"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run_cli(capsys, "verify", "--coloring", str(path))
    assert code == 1
    assert "contains-path" in out


def test_audit_exit_codes(tmp_path, capsys):
    mono = tmp_path / "mono.hcol"
    code, _, _ = run_cli(
        capsys, "gen", "coloring", "--order", "13", "--colors", "2", "--seed", "5",
        "-o", str(mono),
    )
    assert code == 0
    code, out, _ = run_cli(capsys, "audit", "--coloring", str(mono))
    assert code == 0
    assert "terminal mono-path-found stage=0" in out

    code, _, _ = run_cli(capsys, "construct-lower", "--colors", "4", "-o", str(mono))
    assert code == 0
    code, out, _ = run_cli(capsys, "audit", "--coloring", str(mono))
    assert code == 1
    assert "terminal inconclusive stage=5" in out
    assert "stage: purify" in out


def test_extract_reports_witness(tmp_path, capsys):
    mono = tmp_path / "mono.hcol"
    run_cli(capsys, "gen", "coloring", "--order", "13", "--colors", "2", "--seed", "5",
            "-o", str(mono))
    code, out, _ = run_cli(capsys, "extract", "--coloring", str(mono))
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("color ")
    assert len(lines) == 4
    assert all(ln.startswith("e ") for ln in lines[1:])


def test_purify_command(tmp_path, capsys):
    graph = tmp_path / "g.hg"
    lines = ["p hgraph 6"]
    from itertools import combinations

    lines += [f"e {a} {b} {c}" for a, b, c in combinations(range(6), 3)]
    graph.write_text("\n".join(lines) + "\n")
    code, out, _ = run_cli(capsys, "purify", "--graph", str(graph))
    assert code == 0
    assert "class=cycle-six deleted=10" in out
    assert "total-deleted 10 budget 18" in out


def test_purify_rejects_hosts_with_paths(tmp_path, capsys):
    graph = tmp_path / "p.hg"
    graph.write_text("p hgraph 7\ne 0 1 2\ne 2 3 4\ne 4 5 6\n")
    code, _, err = run_cli(capsys, "purify", "--graph", str(graph))
    assert code == 2
    assert "loose path" in err


def test_gen_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.hg", tmp_path / "b.hg"
    run_cli(capsys, "gen", "pfree", "--order", "9", "--seed", "11", "-o", str(a))
    run_cli(capsys, "gen", "pfree", "--order", "9", "--seed", "11", "-o", str(b))
    assert a.read_text() == b.read_text()
    assert a.read_text().startswith("p hgraph 9\n")


def test_gen_coloring_needs_colors(capsys):
    code, _, err = run_cli(capsys, "gen", "coloring", "--order", "9")
    assert code == 2
    assert "colors" in err


def test_sat_export_and_decode(tmp_path, capsys):
    cnf = tmp_path / "inst.cnf"
    code, _, _ = run_cli(
        capsys, "sat-export", "--colors", "2", "--order", "7", "-o", str(cnf)
    )
    assert code == 0
    header = cnf.read_text().split("\n", 1)[0]
    assert header == "p cnf 70 1296"  # 35 + 2*630 + 1 clauses

    # hand-build a model from the lower-bound coloring and decode it
    from loosepath.constructions import lower_bound_coloring

    col = lower_bound_coloring(2)
    lits = []
    for i, t in enumerate(sorted(col.assignment)):
        for c in range(2):
            var = i * 2 + c + 1
            lits.append(var if col.assignment[t] == c else -var)
    model = tmp_path / "model.txt"
    model.write_text("s SATISFIABLE\nv " + " ".join(map(str, lits)) + " 0\n")
    out_col = tmp_path / "decoded.hcol"
    code, _, _ = run_cli(
        capsys, "sat-decode", "--model", str(model), "--colors", "2", "--order", "7",
        "-o", str(out_col),
    )
    assert code == 0
    text = out_col.read_text()
    assert "all classes path-free" in text
    assert "p hcol 7 2" in text


def test_sat_decode_rejects_bad_model(tmp_path, capsys):
    model = tmp_path / "model.txt"
    model.write_text(" ".join(str(v) for v in range(1, 71)) + "\n")  # everything true
    code, _, err = run_cli(
        capsys, "sat-decode", "--model", str(model), "--colors", "2", "--order", "7"
    )
    assert code == 2
    assert "loose path" in err


def test_missing_file_is_invalid_input(capsys):
    code, _, err = run_cli(capsys, "audit", "--coloring", "/nonexistent/file")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert run(["bounds"]) == 2  # missing --max-n
    assert run(["no-such-command"]) == 2


def test_selfcheck_quick(capsys):
    code, out, _ = run_cli(capsys, "selfcheck", "--quick")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 5
    assert all(ln.startswith("ok ") for ln in lines)
    names = [ln.split()[1] for ln in lines]
    assert names == [
        "purify-sweep-6",
        "gadget-hitting-5",
        "detector-oracle",
        "path-forcing",
        "arithmetic",
    ]


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "loosepath.cli"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2  # no subcommand


def test_cli_output_matches_between_processes(tmp_path):
    cmd = [sys.executable, "-c",
           "import sys; from loosepath.cli import run; sys.exit(run(sys.argv[1:]))",
           "gen", "coloring", "--order", "8", "--colors", "3", "--seed", "4"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.startswith("p hcol 8 3\n")
