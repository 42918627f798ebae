import json
import subprocess
import sys

import pytest

from baerinv import __version__
from baerinv import multipliers as mf
from baerinv.cli import main, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_exit(capsys, *argv):
    # argparse failures raise SystemExit
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    out, err = capsys.readouterr()
    return exc.value.code, out, err


def test_witt(capsys):
    code, out, _ = run(capsys, "witt", "--weight", "2", "--gens", "2")
    env = json.loads(out)
    assert code == 0 and env["result"] == 1 and env["version"] == __version__
    assert set(env) == {"command", "params", "hypotheses", "result", "version"}
    code, out, _ = run(capsys, "witt", "--weight", "1", "--gens", "7", "--format", "tsv")
    assert out == "7\n"


def test_witt_bad_weight_names_flag(capsys):
    code, _, err = run_exit(capsys, "witt", "--weight", "0", "--gens", "2")
    assert code == 2 and "--weight" in err


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--gens", "2", "--min", "1", "--max", "2", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["x1\t1", "x2\t1", "[x2,x1]\t2"]
    code, out, _ = run(capsys, "basis", "--gens", "1", "--min", "2", "--max", "4")
    assert code == 0 and json.loads(out)["result"] == []
    code, _, err = run(capsys, "basis", "--gens", "2", "--min", "3", "--max", "2")
    assert code == 2 and "--min" in err


def test_sets(capsys):
    code, out, _ = run(capsys, "sets", "--n", "1", "--c1", "1", "--c2", "1", "--gens", "3", "--which", "A")
    res = json.loads(out)["result"]
    assert code == 0 and res["count"] == res["formula"] == 3
    code, out, _ = run(
        capsys, "sets", "--n", "1", "--c1", "1", "--c2", "1", "--gens", "2", "--which", "B", "--format", "tsv"
    )
    assert out.splitlines() == ["[[[x2,x1],x1],[x2,x1]]\t5", "[[[x2,x1],x2],[x2,x1]]\t5"]


def test_rank_v(capsys):
    code, out, _ = run(capsys, "rank", "v", "--n", "1", "--c1", "3", "--c2", "2", "--gens", "2")
    env = json.loads(out)
    assert code == 0 and env["result"] == 6 and env["hypotheses"]["case"] == "disjoint"


def test_rank_v_violation(capsys):
    code, out, err = run(capsys, "rank", "v", "--n", "2", "--c1", "3", "--c2", "2", "--gens", "2")
    env = json.loads(out)
    assert code == 1
    assert env["result"] is None
    assert "2c2-c1 > 2n-2 violated: 1 <= 2" in err
    assert env["hypotheses"]["violations"] == ["2c2-c1 > 2n-2 violated: 1 <= 2"]


def test_rank_poly(capsys):
    code, out, _ = run(capsys, "rank", "poly", "--n", "2", "--classes", "2,1", "--gens", "2", "--format", "tsv")
    assert code == 0 and out == "10\n"
    code, out, err = run(capsys, "rank", "poly", "--n", "3", "--classes", "2,1", "--gens", "2")
    assert code == 1 and json.loads(out)["result"] is None and "c1 >= n violated: 2 < 3" in err


def test_rank_poly_malformed(capsys):
    code, _, err = run_exit(capsys, "rank", "poly", "--n", "2", "--classes", "2,x", "--gens", "2")
    assert code == 2 and "--classes" in err
    code, _, _ = run(capsys, "rank", "poly", "--n", "2", "--classes", "2,0", "--gens", "2")
    assert code == 2


def test_multiplier_abelian(capsys):
    code, out, _ = run(capsys, "multiplier", "abelian", "--rank", "2", "--torsion", "4,2", "--class", "1")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["free_rank"] == 1 and res["cyclic_factors"] == [[4, 2], [2, 3]]
    code, _, err = run(capsys, "multiplier", "abelian", "--rank", "2", "--torsion", "4,3")
    assert code == 2 and "divisibility" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-gens", "2", "--max-class", "3", "--max-n", "2", "--lie-triples", "50")
    env = json.loads(out)
    assert code == 0 and env["result"]["passed"]
    assert [s["name"] for s in env["result"]["suites"]] == [
        "witt", "cardinality", "basicness", "disjointness", "lie", "abelian", "poly",
    ]


def test_verify_witt_suite(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "10", "--suite", "witt", "--format", "tsv")
    assert code == 0 and out.startswith("witt\tPASS")


def test_verify_detects_corrupted_formula(capsys, monkeypatch):
    real = mf.card_A_minus_C

    def corrupted(p):
        return real(p) + (1 if p.m == 3 and p.c1 == 2 else 0)

    monkeypatch.setattr(mf, "card_A_minus_C", corrupted)
    code, out, err = run(capsys, "verify", "--max-gens", "3", "--max-class", "3", "--max-n", "1", "--suite", "cardinality")
    assert code == 3
    assert "VParams(m=3, n=1, c1=2" in err
    assert not json.loads(out)["result"]["passed"]


def test_verify_cap(capsys):
    code, _, err = run(capsys, "verify", "--cap", "10", "--suite", "cardinality")
    assert code == 2 and "cap" in err


def test_envelope_round_trip_and_determinism(capsys):
    argv = ("sets", "--n", "1", "--c1", "3", "--c2", "2", "--gens", "2", "--which", "A-C")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    env = json.loads(first)
    assert serialize(env) + "\n" == first
    assert json.loads(serialize(env)) == env


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "baerinv", "witt", "--weight", "6", "--gens", "2", "--format", "tsv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "9\n"


@pytest.mark.slow
def test_verify_default_grid(capsys):
    code, out, _ = run(capsys, "verify", "--max-gens", "3", "--max-class", "5", "--max-n", "2")
    result = json.loads(out)["result"]
    assert code == 0 and result["passed"]
    assert all(s["checks"] > 0 for s in result["suites"])
