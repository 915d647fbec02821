"""Command-line behavior: goldens, exit codes, and output stability."""

import json
import subprocess
import sys

import pytest

from ringlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# ---------------------------------------------------------------------------
# reduction commands


def test_snf_golden(tmp_path, capsys):
    doc = {"ring": "integers", "rows": 2, "cols": 2, "entries": [2, 4, 4, 6]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    code, out = run(capsys, "snf", "--input", str(path))
    assert code == 0
    result = json.loads(out)
    assert result["diagonal"] == [2, 2]
    assert result["verified"] is True
    assert result["divisibility_chain"] is True
    assert "witness" not in result


def test_snf_reads_stdin(capsys, monkeypatch):
    doc = {"ring": "integers", "rows": 2, "cols": 2, "entries": [[2, 0], [0, 3]]}
    monkeypatch.setattr("sys.stdin", __import__("io").StringIO(json.dumps(doc)))
    code, out = run(capsys, "snf")
    assert code == 0
    assert json.loads(out)["diagonal"] == [1, 6]


def test_reduce_emits_witness(tmp_path, capsys):
    doc = {"ring": "modular(6)", "rows": 2, "cols": 2, "entries": [[3, 0], [0, 2]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    code, out = run(capsys, "reduce", "--input", str(path), "--emit-witness")
    assert code == 0
    result = json.loads(out)
    assert result["diagonal"] == [1, 0]
    assert set(result["witness"]) == {"P", "P_inv", "Q", "Q_inv"}


def test_snf_rejects_bad_json(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", __import__("io").StringIO("not json"))
    code, out = run(capsys, "snf")
    assert code == 3
    assert "input error" in out


def test_snf_rejects_bad_ring(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"ring": "what", "rows": 1, "cols": 1, "entries": [1]}))
    code, out = run(capsys, "snf", "--input", str(path))
    assert code == 3


def test_snf_rejects_missing_file(tmp_path, capsys):
    code, out = run(capsys, "snf", "--input", str(tmp_path / "absent.json"))
    assert code == 3
    assert "input error" in out


def test_bezout_verified_identity(capsys):
    code, out = run(capsys, "bezout", "12", "18")
    assert code == 0
    assert "d=6" in out
    assert "verified=True" in out
    code, out = run(capsys, "bezout", "--ring", "poly(gf(5))", "[2, 1]", "[1, 0, 1]")
    assert code == 0
    assert "verified=True" in out


# ---------------------------------------------------------------------------
# monoid commands


def test_refine_golden(capsys):
    code, out = run(capsys, "refine", "--generators", "1", "0", "5", "5", "0")
    assert code == 0
    assert "z11=0" in out and "z21=5" in out
    assert "verified=True" in out


def test_refine_bound_exhaustion(capsys):
    code, out = run(
        capsys, "refine", "--generators", "1", "--bound", "2", "5", "5", "5", "5"
    )
    assert code == 2
    assert "exhausted" in out


def test_refine_sum_mismatch(capsys):
    code, out = run(capsys, "refine", "--generators", "1", "1", "0", "0", "0")
    assert code == 3
    assert "input error" in out


def test_refine_presented_monoid(capsys):
    doc = json.dumps({"generators": 2, "relations": [[[2, 0], [0, 1]]]})
    code, out = run(capsys, "refine", "--monoid", doc, "2,0", "0,1", "0,1", "2,0")
    assert code == 0
    assert "verified=True" in out


def test_check_cancellation(capsys):
    code, out = run(
        capsys, "check-cancellation", "--generators", "2", "--unit", "1,1",
        "--max-entry", "3",
    )
    assert code == 0
    assert "pairs_checked=256" in out
    assert "holds" in out


def test_check_cancellation_needs_monoid(capsys):
    code, out = run(capsys, "check-cancellation", "--unit", "1")
    assert code == 3


# ---------------------------------------------------------------------------
# module commands


def test_localize_at_maximal(capsys):
    code, out = run(
        capsys, "localize", "--ring", "modular(6)", "--module", "2,1",
        "--at-maximal", "0",
    )
    assert code == 0
    assert "free_rank=2" in out
    assert "multiplicative_set_inverts=True" in out


def test_localize_at_element(capsys):
    code, out = run(
        capsys, "localize", "--ring", "modular(6)", "--module", "2,1",
        "--at-element", "4",
    )
    assert code == 0
    assert "corner(modular(6), 4)" in out


def test_localize_needs_exactly_one_site(capsys):
    code, _ = run(capsys, "localize", "--ring", "modular(6)", "--module", "1,1")
    assert code == 3
    code, _ = run(
        capsys, "localize", "--ring", "modular(6)", "--module", "1,1",
        "--at-element", "3", "--at-maximal", "0",
    )
    assert code == 3


def test_iso_answers_both_ways(capsys):
    code, out = run(
        capsys, "iso", "--ring", "modular(6)", "--left", "1,2", "--right", "1,2"
    )
    assert code == 0
    assert "iso=True" in out
    code, out = run(
        capsys, "iso", "--ring", "modular(6)", "--left", "1,2", "--right", "2,1"
    )
    assert code == 1
    assert "iso=False" in out


# ---------------------------------------------------------------------------
# the verify suite


def test_verify_suite_passes(capsys):
    code, out = run(capsys, "verify", "--ring", "modular(6)", "--bound", "2")
    assert code == 0
    assert out.endswith("result=pass\n")
    for name in (
        "check=refinement",
        "check=local-global",
        "check=partition-of-unity",
        "check=cancellation-and-reduction",
        "check=jacobson-lift",
        "check=decomposition",
    ):
        assert name in out
    assert "violated" not in out


def test_verify_output_is_stable(capsys):
    _, first = run(capsys, "verify", "--ring", "modular(4)", "--bound", "2")
    _, second = run(capsys, "verify", "--ring", "modular(4)", "--bound", "2")
    assert first == second


def test_verify_accepts_explicit_generators(capsys):
    code, out = run(
        capsys, "verify", "--ring", "modular(6)", "--bound", "1",
        "--generators", "3,4",
    )
    assert code == 0
    assert "generators=[3, 4]" in out


def test_verify_rejects_non_modular(capsys):
    code, out = run(capsys, "verify", "--ring", "integers", "--bound", "2")
    assert code == 3
    assert "input error" in out


# ---------------------------------------------------------------------------
# counterexample searches


def test_counterexample_ex31(capsys):
    code, out = run(capsys, "counterexample", "ex31", "--degree", "2")
    assert code == 0
    assert "verdict=not-principal-up-to bound=2" in out
    assert "bounded evidence" in out


def test_counterexample_ex31_default_degree(capsys):
    code, out = run(capsys, "counterexample", "ex31")
    assert code == 0
    assert "bound=3" in out
    assert "candidates_examined=127" in out


def test_counterexample_ex33(capsys):
    code, out = run(capsys, "counterexample", "ex33")
    assert code == 0
    assert "poly2(gf(2), bound=2)" in out
    assert "verdict=not-principal-up-to bound=2" in out


def test_counterexample_ex33_other_prime(capsys):
    code, out = run(capsys, "counterexample", "ex33", "--p", "3", "--degree", "1")
    assert code == 0
    assert "poly2(gf(3), bound=1)" in out


def test_counterexample_ex34(capsys):
    code, out = run(capsys, "counterexample", "ex34", "--height", "1")
    assert code == 0
    assert "verdict=no-reduction-within-bounds" in out
    assert "column_pairs_examined=6561" in out


def test_counterexample_ex34_budget(capsys):
    code, out = run(capsys, "counterexample", "ex34", "--height", "5")
    assert code == 2
    assert "exhausted" in out


# ---------------------------------------------------------------------------
# argument handling


def test_unknown_subcommand_is_input_error(capsys):
    assert main(["nonsense"]) == 3


def test_help_exits_clean(capsys):
    assert main(["--help"]) == 0


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "ringlab.cli", "bezout", "4", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "d=2" in proc.stdout
