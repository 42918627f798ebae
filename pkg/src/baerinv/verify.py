"""Formula-versus-oracle suites, shared by the ``verify`` command and the tests.

Every suite returns a list of :class:`Failure` records; an empty list means the
suite passed. Closed forms are looked up through the ``multipliers`` module at
call time so a patched (mutated) formula is what gets checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from baerinv import hall, lie
from baerinv import multipliers as mf
from baerinv.commutators import bracket, is_basic
from baerinv.errors import InvalidInput
from baerinv.oracles import basic_by_filtering, elementary_divisors, schur_multiplier

SUITES = ("witt", "cardinality", "basicness", "disjointness", "lie", "abelian", "poly")


@dataclass(frozen=True)
class GridConfig:
    max_gens: int = 3
    max_n: int = 2
    max_class: int = 5
    max_weight: int = 10
    lie_triples: int = 500
    lie_max_weight: int = 8
    max_torsion: int = 3
    max_modulus: int = 12
    max_row_length: int = 3
    seed: int = 0
    cap: int = 5_000_000
    suites: tuple[str, ...] = SUITES

    def __post_init__(self):
        for name in ("max_gens", "max_n", "max_class", "max_weight", "lie_max_weight", "cap"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InvalidInput(f"--{name.replace('_', '-')} must be a positive integer, got {v!r}")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise InvalidInput(f"unknown suite(s): {', '.join(unknown)}")

    def v_grid(self):
        for m in range(1, self.max_gens + 1):
            for n in range(1, self.max_n + 1):
                for c1 in range(1, self.max_class + 1):
                    for c2 in range(1, c1 + 1):
                        yield mf.VParams(m, n, c1, c2)


@dataclass(frozen=True)
class Failure:
    suite: str
    point: str
    expected: object
    got: object
    what: str = ""

    def __str__(self):
        what = f"{self.what}: " if self.what else ""
        return f"[{self.suite}] {what}{self.point}: expected {self.expected}, got {self.got}"


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok, point, expected, got, what=""):
        self.checks += 1
        if not ok:
            self.failures.append(Failure(self.name, str(point), expected, got, what))


def _pair_estimate(m, beta_lo, beta_hi, alpha_lo, alpha_hi):
    return hall.witt_sum(beta_lo, beta_hi, m) * hall.witt_sum(alpha_lo, alpha_hi, m)


def estimated_pairs(p: mf.VParams) -> int:
    """Upper bound on the pairs enumerated for A, B and C at one point."""
    m, n, c1, c2, cap = p.m, p.n, p.c1, p.c2, p.weight_cap
    return (
        _pair_estimate(m, c1 + 1, c1 + n, c2 + 1, c2 + n)
        + _pair_estimate(m, c1 + n + 1, cap - c2 - 1, c2 + 1, cap - c1 - n - 1)
        + _pair_estimate(m, c2 + n + 1, cap - c1 - 1, c1 + 1, cap - c2 - n - 1)
    )


def check_cap(cfg: GridConfig) -> None:
    for p in cfg.v_grid():
        est = estimated_pairs(p)
        if est > cfg.cap:
            raise InvalidInput(
                f"grid point {p} would enumerate about {est} pairs, above the cap {cfg.cap}"
            )


def witt_suite(cfg: GridConfig) -> SuiteResult:
    res = SuiteResult("witt")
    for m in range(1, cfg.max_gens + 1):
        for w in range(1, cfg.max_weight + 1):
            res.check(
                len(hall.basis_of_weight(m, w)) == hall.witt(w, m),
                f"m={m} w={w}",
                hall.witt(w, m),
                len(hall.basis_of_weight(m, w)),
                "witt vs enumeration",
            )
    # Exhaustive filter over all trees, small sizes only.
    for m in range(1, min(cfg.max_gens, 2) + 1):
        for w in range(1, min(cfg.max_weight, 5) + 1):
            brute = basic_by_filtering(m, w)
            res.check(
                list(hall.basis_of_weight(m, w)) == brute,
                f"m={m} w={w}",
                len(brute),
                len(hall.basis_of_weight(m, w)),
                "dynamic programming vs filtering all trees",
            )
    return res


def cardinality_suite(cfg: GridConfig) -> SuiteResult:
    res = SuiteResult("cardinality")
    for p in cfg.v_grid():
        a = mf.enumerate_set(p, "A")
        c = mf.enumerate_set(p, "C").as_set()
        a_set = a.as_set()
        cap_size = len(a_set & c)
        diff_size = len(a_set - c)
        res.check(mf.card_A(p) == len(a), p, len(a), mf.card_A(p), "|A|")
        res.check(mf.card_A_cap_C(p) == cap_size, p, cap_size, mf.card_A_cap_C(p), "|A&C|")
        res.check(mf.card_A_minus_C(p) == diff_size, p, diff_size, mf.card_A_minus_C(p), "|A-C|")
        res.check(
            mf.card_A_minus_C(p) == mf.card_A(p) - mf.card_A_cap_C(p),
            p,
            mf.card_A(p) - mf.card_A_cap_C(p),
            mf.card_A_minus_C(p),
            "|A-C| = |A| - |A&C|",
        )
        if not p.disjoint:
            parts = [mf.enumerate_set(p, k).as_set() for k in ("A1", "A2", "A3")]
            union = parts[0] | parts[1] | parts[2]
            sizes = sum(len(s) for s in parts)
            res.check(
                union == a_set and sizes == len(a_set),
                p,
                len(a_set),
                sizes,
                "A = A1 + A2 + A3 disjointly",
            )
    return res


def basicness_suite(cfg: GridConfig) -> SuiteResult:
    res = SuiteResult("basicness")
    for p in cfg.v_grid():
        if not (p.h1 and p.h2):
            continue
        for kind in ("A", "B", "C"):
            bad = [f"[{b},{a}]" for b, a in mf.enumerate_set(p, kind) if not is_basic(bracket(b, a))]
            res.check(not bad, p, "all basic", bad[:3], f"elements of {kind}")
    return res


def disjointness_suite(cfg: GridConfig) -> SuiteResult:
    res = SuiteResult("disjointness")
    for p in cfg.v_grid():
        if not (p.h1 and p.h2):
            continue
        d = mf.basis_D(p)
        bc = mf.enumerate_set(p, "B").as_set() | mf.enumerate_set(p, "C").as_set()
        overlap = bc & d.as_set()
        res.check(not overlap, p, 0, len(overlap), "(B|C) & (A-C)")
        res.check(len(d) == mf.v_multiplier_rank(p), p, len(d), mf.v_multiplier_rank(p), "|D| = rank")
        res.check(
            lie.independent(lie.inject(c, p.m) for c in d.commutators()) if len(d) else True,
            p,
            True,
            False,
            "D independent in the free Lie ring",
        )
    return res


def random_homogeneous(rng: random.Random, m: int, w: int, terms: int = 3) -> lie.LieElement:
    basis = hall.basis_of_weight(m, w)
    picked = rng.sample(basis, min(terms, len(basis)))
    return lie.LieElement(m, {c: rng.choice([-3, -2, -1, 1, 2, 3]) for c in picked})


def lie_suite(cfg: GridConfig) -> SuiteResult:
    res = SuiteResult("lie")
    rng = random.Random(cfg.seed)
    max_gens = max(2, cfg.max_gens)
    for i in range(cfg.lie_triples):
        m = rng.randint(2, max_gens)
        while True:
            ws = [rng.randint(1, cfg.lie_max_weight - 2) for _ in range(3)]
            if sum(ws) <= cfg.lie_max_weight:
                break
        u, v, w = (random_homogeneous(rng, m, x) for x in ws)
        point = f"triple {i} m={m} weights={ws}"
        uv = lie.bracket(u, v)
        res.check(uv == -lie.bracket(v, u), point, "[u,v] = -[v,u]", uv, "antisymmetry")
        jac = lie.bracket(u, lie.bracket(v, w)) + lie.bracket(v, lie.bracket(w, u)) + lie.bracket(w, uv)
        res.check(not jac, point, 0, jac, "Jacobi")
        if u and v:
            res.check(uv.weights() <= {ws[0] + ws[1]}, point, {ws[0] + ws[1]}, uv.weights(), "grading")
    for m in range(2, max_gens + 1):
        for w in range(2, min(cfg.lie_max_weight, 6) + 1):
            for h in hall.basis_of_weight(m, w):
                got = lie.bracket(lie.inject(h.left, m), lie.inject(h.right, m))
                res.check(got == lie.inject(h, m), f"m={m} h={h}", h, got, "basis fixpoint")
    for w in range(2, min(cfg.lie_max_weight, 5) + 1):
        m = 2
        images = [
            lie.bracket(lie.inject(a, m), lie.inject(b, m))
            for wa in range(1, w)
            for a in hall.basis_of_weight(m, wa)
            for b in hall.basis_of_weight(m, w - wa)
        ]
        r = lie.rank(images)
        res.check(r == hall.witt(w, m), f"m={m} w={w}", hall.witt(w, m), r, "dimension of degree-w brackets")
        basis = [lie.inject(c, m) for c in hall.basis_of_weight(m, w)]
        res.check(lie.independent(basis), f"m={m} w={w}", True, False, "basis independent")
    return res


def abelian_groups(max_free: int, max_torsion: int, max_modulus: int):
    def chains(length, bound):
        if length == 0:
            yield ()
            return
        for first in range(2, bound + 1):
            for rest in chains(length - 1, first):
                if not rest or first % rest[0] == 0:
                    yield (first,) + rest

    for r in range(max_free + 1):
        for k in range(max_torsion + 1):
            for t in chains(k, max_modulus):
                yield mf.AbelianGroupSpec(r, t)


def abelian_suite(cfg: GridConfig) -> SuiteResult:
    res = SuiteResult("abelian")
    for g in abelian_groups(cfg.max_gens, cfg.max_torsion, cfg.max_modulus):
        dec = mf.abelian_multiplier(g, 1)
        free, tors = schur_multiplier(g.free_rank, g.torsion)
        got = (dec.free_rank, elementary_divisors(dec.torsion_moduli()))
        res.check(got == (free, tors), g, (free, dict(tors)), (got[0], dict(got[1])), "c=1 vs gcd/tensor oracle")
        if any(mult < 0 for _, mult in dec.cyclic_factors):
            res.check(False, g, "nonnegative multiplicities", dec.cyclic_factors)
    return res


def _rows(length, bound):
    if length == 0:
        yield ()
        return
    for c in range(1, bound + 1):
        for rest in _rows(length - 1, bound):
            yield (c,) + rest


def poly_suite(cfg: GridConfig) -> SuiteResult:
    res = SuiteResult("poly")
    max_poly_n = max(cfg.max_n, 3)
    max_row_class = min(cfg.max_class, 4)
    for m in range(1, cfg.max_gens + 1):
        for n in range(1, max_poly_n + 1):
            for t in range(1, cfg.max_row_length + 1):
                for row in _rows(t, max_row_class):
                    if row[0] < n:
                        continue
                    p = mf.PolyParams(m, n, row)
                    got = mf.polynilpotent_rank(p)
                    if t == 1:
                        want = hall.witt_sum(row[0] + 1, row[0] + n, m)
                    else:
                        prev = mf.polynilpotent_rank(mf.PolyParams(m, n, row[:-1]))
                        want = hall.witt(row[-1] + 1, prev)
                    res.check(got == want, p, want, got, "r_t = witt(c_t+1, r_{t-1})")
                    if t >= 2 and row[-1] == 1:
                        prev = mf.polynilpotent_rank(mf.PolyParams(m, n, row[:-1]))
                        dec = mf.abelian_multiplier(mf.AbelianGroupSpec(prev), 1)
                        res.check(got == dec.free_rank, p, dec.free_rank, got, "last step as Schur multiplier of Z^r")
    return res


_RUNNERS = {
    "witt": witt_suite,
    "cardinality": cardinality_suite,
    "basicness": basicness_suite,
    "disjointness": disjointness_suite,
    "lie": lie_suite,
    "abelian": abelian_suite,
    "poly": poly_suite,
}


def run(cfg: GridConfig) -> list[SuiteResult]:
    if any(s in cfg.suites for s in ("cardinality", "basicness", "disjointness")):
        check_cap(cfg)
    return [_RUNNERS[name](cfg) for name in SUITES if name in cfg.suites]
