"""Free Lie ring over Z in the Hall basis.

Elements are finite integer combinations of basic commutators. The bracket of
two basis elements is rewritten back into the basis with antisymmetry and the
Jacobi identity; this is the graded model of the lower central quotients, and
serves as an algebraic oracle independent of the counting formulas.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping

from baerinv.commutators import Commutator, bracket as formal_bracket, is_basic
from baerinv.errors import InvalidInput
from baerinv.linalg import integer_rank, sparse_integer_rank


class LieElement:
    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[Commutator, int] | None = None):
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise InvalidInput(f"alphabet size must be a positive integer, got {m!r}")
        self.m = m
        clean = {}
        for c, k in (terms or {}).items():
            if not is_basic(c):
                raise InvalidInput(f"{c} is not a basic commutator")
            if c.max_index() > m:
                raise InvalidInput(f"{c} uses a generator outside x1..x{m}")
            if k:
                clean[c] = int(k)
        self._terms = clean

    @property
    def terms(self) -> dict[Commutator, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, c: Commutator) -> int:
        return self._terms.get(c, 0)

    def weights(self) -> set[int]:
        return {c.weight for c in self._terms}

    def homogeneous_part(self, w: int) -> LieElement:
        return LieElement(self.m, {c: k for c, k in self._terms.items() if c.weight == w})

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self):
        return hash((self.m, frozenset(self._terms.items())))

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __rmul__(self, k):
        if isinstance(k, int):
            return scale(k, self)
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{c}: {k}" for c, k in self.items())
        return f"LieElement(m={self.m}, {{{body}}})"


def _same_alphabet(u, v):
    if u.m != v.m:
        raise InvalidInput(f"alphabet mismatch: {u.m} vs {v.m} generators")


def _from_counts(m, counts):
    return LieElement(m, {c: k for c, k in counts.items() if k})


def inject(c: Commutator, m: int | None = None) -> LieElement:
    """The basis vector of a basic commutator (alphabet defaults to its largest generator)."""
    if not is_basic(c):
        raise InvalidInput(f"{c} is not a basic commutator")
    return LieElement(m if m is not None else c.max_index(), {c: 1})


def add(u: LieElement, v: LieElement) -> LieElement:
    _same_alphabet(u, v)
    out = defaultdict(int, u._terms)
    for c, k in v._terms.items():
        out[c] += k
    return _from_counts(u.m, out)


def scale(k: int, u: LieElement) -> LieElement:
    if not k:
        return LieElement(u.m)
    return LieElement(u.m, {c: k * a for c, a in u._terms.items()})


@lru_cache(maxsize=None)
def _basic_bracket(h1: Commutator, h2: Commutator) -> tuple[tuple[Commutator, int], ...]:
    """[h1, h2] for basic h1, h2 rewritten in the Hall basis."""
    if h1 == h2:
        return ()
    if h1 < h2:
        return tuple((c, -k) for c, k in _basic_bracket(h2, h1))
    if h1.is_generator or not h2 < h1.right:
        return ((formal_bracket(h1, h2), 1),)
    # h1 = [p, q] with q > h2: [[p,q],r] = [[p,r],q] + [p,[q,r]]
    p, q = h1.left, h1.right
    out = defaultdict(int)
    for t, a in _basic_bracket(p, h2):
        for s, b in _basic_bracket(t, q):
            out[s] += a * b
    for t, a in _basic_bracket(q, h2):
        for s, b in _basic_bracket(p, t):
            out[s] += a * b
    return tuple(sorted(((c, k) for c, k in out.items() if k), key=lambda kv: kv[0].sort_key()))


def bracket(u: LieElement, v: LieElement) -> LieElement:
    """Bilinear Lie bracket of two ring elements."""
    _same_alphabet(u, v)
    out = defaultdict(int)
    for h1, a in u._terms.items():
        for h2, b in v._terms.items():
            for c, k in _basic_bracket(h1, h2):
                out[c] += a * b * k
    return _from_counts(u.m, out)


def coefficient_matrix(elements: Iterable[LieElement]) -> tuple[list[Commutator], list[list[int]]]:
    elements = list(elements)
    keys = sorted({c for e in elements for c in e._terms}, key=Commutator.sort_key)
    return keys, [[e._terms.get(c, 0) for c in keys] for e in elements]


def _common_alphabet(elements):
    if elements and len({e.m for e in elements}) != 1:
        raise InvalidInput("elements live on different alphabets")


def rank(elements: Iterable[LieElement]) -> int:
    """Rank over Q of the coefficient vectors (sparse fraction-free elimination)."""
    elements = list(elements)
    _common_alphabet(elements)
    return sparse_integer_rank({c.sort_key(): k for c, k in e._terms.items()} for e in elements)


def dense_rank(elements: Iterable[LieElement]) -> int:
    """Same as :func:`rank`, by Bareiss elimination on the dense matrix."""
    elements = list(elements)
    _common_alphabet(elements)
    _, rows = coefficient_matrix(elements)
    return integer_rank(rows) if rows and rows[0] else 0


def independent(elements: Iterable[LieElement]) -> bool:
    """Linear independence over Q, decided exactly."""
    elements = list(elements)
    return rank(elements) == len(elements)
