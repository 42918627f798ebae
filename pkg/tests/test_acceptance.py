"""Exit criteria. Each test records one PASS/FAIL line, printed after the run."""

import contextlib
import io
import json
import random
import time

import pytest

from baerinv import hall, lie
from baerinv import multipliers as mf
from baerinv.cli import main
from baerinv.commutators import bracket, is_basic
from baerinv.oracles import elementary_divisors, schur_multiplier
from baerinv.verify import abelian_groups, random_homogeneous
from conftest import ACCEPTANCE_LINES

V_GRID = [
    mf.VParams(m, n, c1, c2)
    for m in (1, 2, 3)
    for n in (1, 2)
    for c1 in range(1, 6)
    for c2 in range(1, c1 + 1)
]


@pytest.fixture
def record(request):
    name = request.node.name.removeprefix("test_")
    details = {}
    yield details
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    extra = ", ".join(f"{k}={v}" for k, v in details.items())
    ACCEPTANCE_LINES.append(f"{status}  {name}" + (f"  ({extra})" if extra else ""))


def test_witt_agreement(record):
    hall.basis_of_weight.cache_clear()
    start = time.perf_counter()
    for m in (1, 2, 3):
        for w in range(1, 11):
            assert len(hall.generate_basis(m, w, w)) == hall.witt(w, m), (m, w)
    elapsed = time.perf_counter() - start
    assert [hall.witt(w, 2) for w in range(1, 11)] == [2, 1, 2, 3, 6, 9, 18, 30, 56, 99]
    record["seconds"] = round(elapsed, 2)
    assert elapsed < 10


def test_cardinality_formulas(record):
    hall.basis_of_weight.cache_clear()
    start = time.perf_counter()
    for p in V_GRID:
        a = mf.enumerate_set(p, "A").as_set()
        c = mf.enumerate_set(p, "C").as_set()
        assert mf.card_A(p) == len(a), p
        assert mf.card_A_cap_C(p) == len(a & c), p
        assert mf.card_A_minus_C(p) == len(a) - len(a & c) == len(a - c), p
    elapsed = time.perf_counter() - start
    record["points"] = len(V_GRID)
    record["seconds"] = round(elapsed, 2)
    assert elapsed < 60


def test_basis_validity(record):
    points = [p for p in V_GRID if p.h1 and p.h2]
    for p in points:
        sets = {k: mf.enumerate_set(p, k) for k in ("A", "B", "C")}
        for kind, s in sets.items():
            assert all(is_basic(bracket(b, a)) for b, a in s), (p, kind)
        d = mf.basis_D(p)
        assert not ((sets["B"].as_set() | sets["C"].as_set()) & d.as_set()), p
        assert len(d) == mf.v_multiplier_rank(p), p
        if len(d):
            assert lie.independent(lie.inject(c, p.m) for c in d.commutators()), p
    record["points"] = len(points)


def test_lie_oracle_soundness(record):
    rng = random.Random(20240607)
    triples = 0
    while triples < 500:
        m = rng.choice((2, 3))
        ws = [rng.randint(1, 6) for _ in range(3)]
        if sum(ws) > 8:
            continue
        u, v, w = (random_homogeneous(rng, m, x) for x in ws)
        assert lie.bracket(u, v) == -lie.bracket(v, u)
        jac = lie.bracket(u, lie.bracket(v, w)) + lie.bracket(v, lie.bracket(w, u)) + lie.bracket(w, lie.bracket(u, v))
        assert not jac, (u, v, w, jac)
        triples += 1
    fixpoints = 0
    for m in (2, 3):
        for wt in range(2, 8 if m == 2 else 6):
            for h in hall.basis_of_weight(m, wt):
                assert lie.bracket(lie.inject(h.left, m), lie.inject(h.right, m)) == lie.inject(h, m)
                fixpoints += 1
    record["triples"] = triples
    record["fixpoints"] = fixpoints


def test_abelian_multiplier_cross_check(record):
    dec = mf.abelian_multiplier(mf.AbelianGroupSpec(2, (4, 2)), 1)
    assert (dec.free_rank, dec.cyclic_factors) == (1, ((4, 2), (2, 3)))
    groups = 0
    for g in abelian_groups(3, 3, 12):
        assert all(a % b == 0 for a, b in zip(g.torsion, g.torsion[1:]))
        dec = mf.abelian_multiplier(g, 1)
        free, tors = schur_multiplier(g.free_rank, g.torsion)
        assert dec.free_rank == free, g
        assert elementary_divisors(dec.torsion_moduli()) == tors, g
        groups += 1
    record["groups"] = groups


def test_polynilpotent_recursion(record):
    assert mf.polynilpotent_rank(mf.PolyParams(2, 2, (2, 1))) == 10
    checked = 0
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            rows = [(a,) for a in range(1, 5)]
            rows += [(a, b) for a in range(1, 5) for b in range(1, 5)]
            rows += [(a, b, c) for a in range(1, 5) for b in range(1, 5) for c in range(1, 5)]
            for row in rows:
                if row[0] < n:
                    continue
                r = mf.polynilpotent_rank(mf.PolyParams(m, n, row))
                if len(row) == 1:
                    assert r == sum(hall.witt(i, m) for i in range(row[0] + 1, row[0] + n + 1))
                else:
                    prev = mf.polynilpotent_rank(mf.PolyParams(m, n, row[:-1]))
                    assert r == hall.witt(row[-1] + 1, prev), (m, n, row)
                checked += 1
    record["rows"] = checked


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main([str(a) for a in argv])
    return code, out.getvalue(), err.getvalue()


def test_hypothesis_gating(record):
    violating = 0
    for m in (1, 2, 3):
        for n in (1, 2):
            for c1 in range(1, 6):
                for c2 in range(1, 6):
                    p = mf.VParams(m, n, c1, c2)
                    code, out, err = _cli("rank", "v", "--n", n, "--c1", c1, "--c2", c2, "--gens", m)
                    if p.h1 and p.h2:
                        assert code == 0 and json.loads(out)["result"] == mf.card_A_minus_C(p)
                        continue
                    violating += 1
                    assert code == 1, p
                    assert json.loads(out)["result"] is None
                    if not p.h1:
                        assert f"c1 >= c2 violated: {c1} < {c2}" in err
                    if not p.h2:
                        assert f"2c2-c1 > 2n-2 violated: {2 * c2 - c1} <= {2 * n - 2}" in err
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for row in [(a,) for a in range(1, 5)] + [(a, b) for a in range(1, 5) for b in range(1, 5)]:
                classes = ",".join(map(str, row))
                code, out, err = _cli("rank", "poly", "--n", n, "--classes", classes, "--gens", m)
                if row[0] >= n:
                    assert code == 0
                    continue
                violating += 1
                assert code == 1 and json.loads(out)["result"] is None
                assert f"c1 >= n violated: {row[0]} < {n}" in err
    record["violating_points"] = violating
