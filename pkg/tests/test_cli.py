import json
import subprocess
import sys

import pytest

from grundy.cli import main
from grundy.io import dump_coloring, emit_graph
from grundy.graph import Graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_exact_path(capsys):
    code, out, _ = run(capsys, "exact", "--family", "path", "--n", "4")
    assert code == 0
    assert out.splitlines() == ["gamma = 3", "witness = 1 2 3 1"]


def test_exact_from_dimacs_file(tmp_path, capsys):
    path = tmp_path / "k3.col"
    path.write_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    code, out, _ = run(capsys, "exact", "--input", str(path))
    assert code == 0 and out.startswith("gamma = 3")


def test_exact_inconclusive_exit(capsys):
    code, out, _ = run(capsys, "exact", "--family", "torus", "--dims", "3,4", "--budget-nodes", "5")
    assert code == 1 and "inconclusive" in out


def test_usage_errors_go_to_stderr(tmp_path, capsys):
    code, out, err = run(capsys, "exact")
    assert code == 2 and out == "" and "error" in err
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 5 1\ne 1 7\n")
    code, out, err = run(capsys, "exact", "--input", str(bad))
    assert code == 2 and "out of range" in err
    code, _, err = run(capsys, "exact", "--family", "cycle", "--n", "2")
    assert code == 2 and err
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_witness_found_and_absent(capsys):
    code, out, _ = run(capsys, "witness", "--family", "path", "--n", "4", "--target", "3")
    assert code == 0 and json.loads(out)["n"] == 4
    code, out, _ = run(capsys, "witness", "--family", "cycle", "--n", "4", "--target", "3")
    assert code == 1 and out.startswith("none")


def test_greedy_with_order(capsys):
    code, out, _ = run(capsys, "greedy", "--family", "path", "--n", "4", "--order", "3,2,0,1")
    assert code == 0
    assert json.loads(out.splitlines()[1])["colors"] == [1, 3, 2, 1]


def test_verify(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(dump_coloring([1, 3, 2, 1]))
    code, out, _ = run(capsys, "verify", "--family", "path", "--n", "4", "--coloring", str(good))
    assert code == 0 and "grundy = true" in out
    bad = tmp_path / "bad.json"
    bad.write_text(dump_coloring([3, 1, 1, 1]))
    code, out, _ = run(capsys, "verify", "--family", "star", "--n", "3", "--coloring", str(bad))
    assert code == 1 and "missing" in out
    code, out, _ = run(capsys, "verify", "--family", "star", "--n", "3", "--coloring", str(bad), "--proper-only")
    assert code == 0


def test_product_emit_and_exact(capsys):
    code, out, _ = run(capsys, "product", "--factor", "path 2", "--factor", "path 2")
    assert code == 0 and out == emit_graph(Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))
    code, out, _ = run(capsys, "product", "--factor", "cycle 4", "--factor", "cycle 4", "--exact")
    assert code == 0 and "gamma = 5" in out
    code, out, _ = run(capsys, "product", "--factor", "path 3", "--emit", "dot")
    assert out.startswith("graph G {")


@pytest.mark.parametrize(
    "argv,colors",
    [
        (["--rule", "prop3", "--family", "path", "--n", "4", "--second", "path", "--length", "3"], 5),
        (["--rule", "prop4", "--family", "cycle", "--n", "5", "--second", "cycle", "--length", "4"], 4),
        (["--rule", "thm2", "--family", "path", "--n", "4", "--p", "3"], 5),
        (["--rule", "thm3", "--family", "path", "--n", "4", "--p", "5"], 7),
        (["--rule", "mesh", "--dims", "3,3,4"], 7),
        (["--rule", "even-torus", "--dims", "4,6"], 5),
        (["--rule", "odd-torus", "--dims", "3,5"], 5),
    ],
)
def test_construct_rules(capsys, argv, colors):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == 0
    assert f"colors = {colors}" in out and "verified = true" in out


def test_construct_ng(capsys):
    code, out, _ = run(capsys, "construct", "--rule", "ng", "--n", "1,1,1")
    assert code == 0
    assert "sum = 8" in out and "conditions = none" in out


def test_construct_missing_arguments(capsys):
    code, _, err = run(capsys, "construct", "--rule", "mesh")
    assert code == 2 and "--dims" in err
    code, _, err = run(capsys, "construct", "--rule", "thm2", "--family", "path", "--n", "4")
    assert code == 2 and "--p" in err


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "cycle", "--n", "5")
    assert code == 0
    assert "delta_plus_one = 3" in out and "stability_bound = 4" in out and "combined = 3" in out


def test_atoms_k3(capsys):
    code, out, _ = run(capsys, "atoms", "--k", "3")
    assert code == 0
    assert out.splitlines()[0] == "k = 3 members = 2 complete = true"
    assert out.count("certificate = ") == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "exact", "--family", "complete", "--n", "4", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("gamma = 4")


def test_threads_env_fallback(monkeypatch, capsys):
    monkeypatch.setenv("GRUNDY_THREADS", "3")
    from grundy.cli import build_parser

    args = build_parser().parse_args(["exact", "--family", "path", "--n", "3"])
    assert args.threads == 3


def test_reproduce_subset_is_deterministic(capsys):
    first = run(capsys, "reproduce", "--check", "families", "--check", "counterexample")
    second = run(capsys, "reproduce", "--check", "families", "--check", "counterexample")
    assert first == second and first[0] == 0
    assert "| families | path 4 | 3 | 3 | PASS |" in first[1]
    code, out, _ = run(capsys, "reproduce", "--check", "counterexample", "--table", "csv")
    assert out.splitlines()[0] == "check,case,expected,observed,status"
    code, _, err = run(capsys, "reproduce")
    assert code == 2 and err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grundy.cli", "exact", "--family", "cycle", "--n", "5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("gamma = 3")
