from __future__ import annotations

import json
import subprocess
import sys

import pytest

from mayacycles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestShow:
    def test_genus_figure(self, capsys):
        code, out, _ = run(capsys, "show", "--blocks", "2,3,5,7,10")
        assert code == 0
        assert "genus: 2" in out
        assert "┃" in out

    def test_vacuum(self, capsys):
        code, out, _ = run(capsys, "show", "--blocks", "0", "--ascii")
        assert code == 0
        assert out.splitlines()[0] == "...#|....."
        assert "index: 0" in out

    def test_frobenius_matches_blocks(self, capsys):
        _, a, _ = run(capsys, "show", "--frobenius", "|3,4,5,6,7")
        _, b, _ = run(capsys, "show", "--blocks", "0,3,8")
        assert a == b

    def test_malformed_spec(self, capsys):
        code, _, err = run(capsys, "show", "--blocks", "3,1,2")
        assert code == 2 and "error" in err

    def test_needs_one_form(self, capsys):
        code, _, _ = run(capsys, "show")
        assert code == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--coords", "0|3|2", "--k", "3")
    assert code == 0
    assert "signature (1, 1, 1)" in out and "Okamoto" in out


class TestEnumerate:
    def test_count_matches_brute_force(self, capsys):
        from mayacycles.maya import brute_force_cyclic

        code, out, _ = run(capsys, "enumerate", "--p", "3", "--k", "1", "--max", "4", "--count")
        assert code == 0
        assert out.startswith(f"{len(brute_force_cyclic(3, 4))} diagrams")

    def test_inadmissible(self, capsys):
        code, _, err = run(capsys, "enumerate", "--p", "4", "--k", "3")
        assert code == 2 and "inadmissible" in err

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--p", "3", "--k", "3", "--max", "2", "--verify", "--perms", "all")
        assert code == 0
        assert out.strip().endswith("specs pass")
        assert "FAIL" not in out

    def test_deterministic(self, capsys):
        args = ("enumerate", "--p", "4", "--k", "2", "--max", "2", "--perms", "2", "--seed", "3")
        assert run(capsys, *args) == run(capsys, *args)

    def test_json(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--p", "3", "--k", "1", "--max", "3", "--json")
        assert code == 0 and len(json.loads(out)) == 3

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--p", "3", "--k", "1", "--bogus"])
        assert exc.value.code == 2


class TestSolve:
    def test_gh(self, capsys):
        code, out, _ = run(capsys, "solve", "--sig", "3", "--coords", "0,3,8", "--perm", "2,1,0")
        assert code == 0
        assert "P_IV: a=12, b=-50" in out

    def test_p5(self, capsys):
        code, out, _ = run(capsys, "solve", "--sig", "1,3", "--coords", "0|3,4,6", "--perm", "0,1,3,2")
        assert code == 0
        assert "P_V: a=49/8, b=-2, c=-13/2, d=-1/2" in out

    def test_a4(self, capsys):
        code, out, _ = run(capsys, "solve", "--sig", "5", "--coords", "0,2,5,6,7", "--perm", "3,4,2,1,0")
        assert code == 0
        assert "a: (-2, 4, 6, 4, -14)" in out

    def test_signature_mismatch(self, capsys):
        code, _, _ = run(capsys, "solve", "--sig", "4", "--coords", "0,2,5,6,7", "--perm", "3,4,2,1,0")
        assert code == 2

    def test_bad_permutation_length(self, capsys):
        code, _, _ = run(capsys, "solve", "--coords", "0,3,8", "--perm", "0,1")
        assert code == 2

    def test_json_round_trip_verifies(self, capsys, tmp_path):
        path = tmp_path / "sol.json"
        code, out, _ = run(capsys, "solve", "--coords", "0,3,4|2", "--perm", "0,1,3,2", "--json", "-o", str(path))
        assert code == 0
        assert json.loads(out) == json.loads(path.read_text())
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert "json round-trip stable" in out

    def test_tampered_document_fails(self, capsys, tmp_path):
        path = tmp_path / "sol.json"
        run(capsys, "solve", "--coords", "0,3,8", "--perm", "2,1,0", "-o", str(path))
        data = json.loads(path.read_text())
        data["chain"]["as"][0] = "11"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 3 and out.strip().endswith("FAIL")

    def test_verify_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", str(tmp_path / "nope.json"))
        assert code == 2


def test_scalar(capsys):
    code, out, _ = run(capsys, "scalar", "--coords", "0|3|2", "--perm", "2,0,1")
    assert code == 0
    assert "a=-3, b=-128/9" in out and "residual: ok" in out


def test_scalar_needs_small_period(capsys):
    code, _, _ = run(capsys, "scalar", "--coords", "0,2,5,6,7", "--perm", "0,1,2,3,4")
    assert code == 2


class TestReproduce:
    def test_full_run(self, capsys):
        code, out, _ = run(capsys, "reproduce")
        assert code == 0
        assert out.strip().endswith("10/10 examples pass")
        assert "warning:" in out

    def test_only_p5(self, capsys):
        code, out, _ = run(capsys, "reproduce", "--only", "p5")
        assert code == 0
        assert out.strip().endswith("3/3 examples pass")

    def test_fault_canary(self, capsys):
        code, out, _ = run(capsys, "reproduce", "--fault", "hermite")
        assert code == 3
        assert "0/10 examples pass" in out
        # the fault must not leak into later computations
        code, _, _ = run(capsys, "reproduce", "--only", "p4")
        assert code == 0

    def test_json(self, capsys):
        code, out, _ = run(capsys, "reproduce", "--only", "p4", "--json")
        data = json.loads(out)
        assert code == 0 and [d["ok"] for d in data] == [True, True]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mayacycles", "show", "--blocks", "0,3,8", "--ascii"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "genus: 1" in proc.stdout
