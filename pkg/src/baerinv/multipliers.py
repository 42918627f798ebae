"""Closed-form ranks of Baer invariants of free nilpotent groups.

Setting: G is the free nilpotent group of class n on m generators and V the
outer-commutator variety defined by [gamma_{c1+1}, gamma_{c2+1}]. The
multiplier VM(G) is described through three sets of commutator pairs
[beta, alpha] of basic commutators:

    A: c1+1 <= wt(beta) <= c1+n,   c2+1 <= wt(alpha) <= c2+n
    B: wt(beta) >= c1+n+1, wt(alpha) >= c2+1, wt(beta)+wt(alpha) <= 2n+c1+c2+1
    C: B with c1 and c2 exchanged in the lower bounds

all with beta > alpha. When c1 >= c2 and 2*c2 - c1 > 2n - 2, VM(G) is free
abelian on A - C. The counting functions (card_*) are valid for any
c1 >= c2; the rank-level functions refuse parameters outside the theorem.

Also here: the c-nilpotent multiplier of a finitely generated abelian group
and the polynilpotent multiplier rank of G.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from baerinv.commutators import Commutator, bracket
from baerinv.errors import HypothesisViolation, InvalidInput
from baerinv.hall import basis_of_weight, witt, witt_sum

SET_KINDS = ("A", "B", "C", "A&C", "A-C", "A1", "A2", "A3")


def _positive(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidInput(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class VParams:
    """Parameters (m, n, c1, c2) of VM for the free class-n nilpotent group of rank m."""

    m: int
    n: int
    c1: int
    c2: int

    def __post_init__(self):
        for name in ("m", "n", "c1", "c2"):
            _positive(name, getattr(self, name))

    @property
    def h1(self) -> bool:
        return self.c1 >= self.c2

    @property
    def h2(self) -> bool:
        return 2 * self.c2 - self.c1 > 2 * self.n - 2

    @property
    def disjoint(self) -> bool:
        """True when the weight bands of beta and alpha in A do not meet."""
        return self.c2 + self.n < self.c1 + 1

    @property
    def weight_cap(self) -> int:
        return 2 * self.n + self.c1 + self.c2 + 1


@dataclass(frozen=True)
class HypothesisReport:
    h1: bool
    h2: bool
    case: str
    violations: tuple[str, ...] = ()
    derived: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.h1 and self.h2

    def as_dict(self) -> dict:
        return {
            "h1": self.h1,
            "h2": self.h2,
            "case": self.case,
            "violations": list(self.violations),
            "derived": dict(self.derived),
        }


def _violations(p: VParams) -> list[str]:
    out = []
    if not p.h1:
        out.append(f"c1 >= c2 violated: {p.c1} < {p.c2}")
    if not p.h2:
        out.append(f"2c2-c1 > 2n-2 violated: {2 * p.c2 - p.c1} <= {2 * p.n - 2}")
    return out


def check_hypotheses(p: VParams) -> HypothesisReport:
    derived = {}
    if p.h1 and p.h2:
        n, c1, c2 = p.n, p.c1, p.c2
        derived = {
            "c1+c2+1 >= n": c1 + c2 + 1 >= n,
            "c2 >= n-1": c2 >= n - 1,
            "2c2-c1 >= n-1": 2 * c2 - c1 >= n - 1,
            "2c1-c2 > 2n-2": 2 * c1 - c2 > 2 * n - 2,
        }
    return HypothesisReport(
        h1=p.h1,
        h2=p.h2,
        case="disjoint" if p.disjoint else "overlapping",
        violations=tuple(_violations(p)),
        derived=derived,
    )


def _require_h1(p):
    if not p.h1:
        raise HypothesisViolation([f"c1 >= c2 violated: {p.c1} < {p.c2}"])


def _require_theorem(p):
    v = _violations(p)
    if v:
        raise HypothesisViolation(v)


# -- set enumeration -------------------------------------------------------


def _pairs(m, beta_weights, alpha_weights, cap=None):
    out = []
    for wb in beta_weights:
        if wb < 1:
            continue
        betas = basis_of_weight(m, wb)
        for wa in alpha_weights:
            if wa < 1 or wa > wb or (cap is not None and wb + wa > cap):
                continue
            alphas = basis_of_weight(m, wa)
            for beta in betas:
                for alpha in alphas:
                    if not alpha < beta:
                        break
                    out.append((beta, alpha))
    return out


def _raw_set(p: VParams, kind: str):
    m, n, c1, c2 = p.m, p.n, p.c1, p.c2
    cap = p.weight_cap
    if kind == "A":
        return _pairs(m, range(c1 + 1, c1 + n + 1), range(c2 + 1, c2 + n + 1))
    if kind == "B":
        return _pairs(m, range(c1 + n + 1, cap - c2), range(c2 + 1, cap - (c1 + n)), cap)
    if kind == "C":
        return _pairs(m, range(c2 + n + 1, cap - c1), range(c1 + 1, cap - (c2 + n)), cap)
    # Pieces of A in the overlapping case.
    if kind == "A1":
        return _pairs(m, range(c1 + 1, c1 + n + 1), range(c2 + 1, c1 + 1))
    if kind == "A2":
        return _pairs(m, range(c1 + 1, c2 + n + 1), range(c1 + 1, c2 + n + 1))
    if kind == "A3":
        return _pairs(m, range(c2 + n + 1, c1 + n + 1), range(c1 + 1, c2 + n + 1))
    raise InvalidInput(f"unknown set kind {kind!r}; expected one of {', '.join(SET_KINDS)}")


def _pair_key(pair):
    beta, alpha = pair
    return (beta.weight + alpha.weight, beta.sort_key(), alpha.sort_key())


@dataclass(frozen=True)
class PairSet:
    kind: str
    params: VParams
    pairs: tuple[tuple[Commutator, Commutator], ...]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def commutators(self) -> list[Commutator]:
        """Each pair read as the commutator [beta, alpha]."""
        return [bracket(b, a) for b, a in self.pairs]

    def as_set(self) -> frozenset:
        return frozenset(self.pairs)


def enumerate_set(p: VParams, kind: str) -> PairSet:
    """Explicit members of A, B, C, A&C, A-C (or the pieces A1, A2, A3 of A)."""
    if kind == "A&C":
        c = set(_raw_set(p, "C"))
        pairs = [x for x in _raw_set(p, "A") if x in c]
    elif kind == "A-C":
        c = set(_raw_set(p, "C"))
        pairs = [x for x in _raw_set(p, "A") if x not in c]
    else:
        pairs = _raw_set(p, kind)
    pairs.sort(key=_pair_key)
    return PairSet(kind, p, tuple(pairs))


# -- closed forms ----------------------------------------------------------


def _pairs_in_band(count: int) -> int:
    # Unordered pairs beta > alpha inside one band of `count` basic commutators.
    return witt(2, count)


def card_A(p: VParams) -> int:
    _require_h1(p)
    m, n, c1, c2 = p.m, p.n, p.c1, p.c2
    top = witt_sum(c1 + 1, c1 + n, m)
    if p.disjoint:
        return top * witt_sum(c2 + 1, c2 + n, m)
    return (
        top * witt_sum(c2 + 1, c1, m)
        + witt_sum(c2 + n + 1, c1 + n, m) * witt_sum(c1 + 1, c2 + n, m)
        + _pairs_in_band(witt_sum(c1 + 1, c2 + n, m))
    )


def card_A_cap_C(p: VParams) -> int:
    _require_h1(p)
    m, n, c1, c2 = p.m, p.n, p.c1, p.c2
    if p.disjoint:
        return 0
    return witt_sum(c2 + n + 1, c1 + n, m) * witt_sum(c1 + 1, c2 + n, m)


def card_A_minus_C(p: VParams) -> int:
    _require_h1(p)
    m, n, c1, c2 = p.m, p.n, p.c1, p.c2
    top = witt_sum(c1 + 1, c1 + n, m)
    if p.disjoint:
        return top * witt_sum(c2 + 1, c2 + n, m)
    return top * witt_sum(c2 + 1, c1, m) + _pairs_in_band(witt_sum(c1 + 1, c2 + n, m))


def basis_D(p: VParams) -> PairSet:
    """Free basis of VM(G): the pairs of A - C (needs c1 >= c2 and 2c2-c1 > 2n-2)."""
    _require_theorem(p)
    return enumerate_set(p, "A-C")


def v_multiplier_rank(p: VParams) -> int:
    """Rank of the free abelian group VM(G)."""
    _require_theorem(p)
    return card_A_minus_C(p)


# -- abelian and polynilpotent multipliers ---------------------------------


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Z^free_rank + Z_{n1} + ... + Z_{nk} with n_{i+1} | n_i."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.free_rank, bool) or not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise InvalidInput(f"free rank must be a nonnegative integer, got {self.free_rank!r}")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for t in self.torsion:
            if isinstance(t, bool) or not isinstance(t, int) or t < 2:
                raise InvalidInput(f"torsion moduli must be integers >= 2, got {t!r}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if a % b:
                raise InvalidInput(f"divisibility chain broken: {b} does not divide {a}")


@dataclass(frozen=True)
class AbelianDecomposition:
    free_rank: int
    cyclic_factors: tuple[tuple[int, int], ...]

    def torsion_moduli(self) -> list[int]:
        """Cyclic factor moduli with multiplicity, zero-multiplicity factors dropped."""
        return [mod for mod, mult in self.cyclic_factors for _ in range(mult)]

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z_{mod}^{mult}" for mod, mult in self.cyclic_factors if mult]
        return " + ".join(parts) or "0"


def abelian_multiplier(g: AbelianGroupSpec, c: int) -> AbelianDecomposition:
    """The c-nilpotent multiplier of a finitely generated abelian group.

    With b_i = witt(c+1, i): Z^{b_m} + sum_j Z_{n_j}^{b_{m+j} - b_{m+j-1}}.
    """
    _positive("class c", c)
    m = g.free_rank
    b = [witt(c + 1, m + j) for j in range(len(g.torsion) + 1)]
    factors = tuple((mod, b[j] - b[j - 1]) for j, mod in enumerate(g.torsion, start=1))
    return AbelianDecomposition(b[0], factors)


@dataclass(frozen=True)
class PolyParams:
    m: int
    n: int
    class_row: tuple[int, ...]

    def __post_init__(self):
        _positive("m", self.m)
        _positive("n", self.n)
        object.__setattr__(self, "class_row", tuple(self.class_row))
        if not self.class_row:
            raise InvalidInput("class row must be nonempty")
        for c in self.class_row:
            _positive("class", c)

    def violations(self) -> list[str]:
        c1 = self.class_row[0]
        return [] if c1 >= self.n else [f"c1 >= n violated: {c1} < {self.n}"]


def polynilpotent_rank(p: PolyParams) -> int:
    """Rank of the polynilpotent multiplier of class row (c1, ..., ct); needs c1 >= n."""
    v = p.violations()
    if v:
        raise HypothesisViolation(v)
    c1 = p.class_row[0]
    r = witt_sum(c1 + 1, c1 + p.n, p.m)
    for c in p.class_row[1:]:
        r = witt(c + 1, r)
    return r
