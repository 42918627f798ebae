"""Hall-basis enumeration and the Witt count of basic commutators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from baerinv.commutators import Commutator, bracket, generator
from baerinv.errors import InvalidInput


def _check_positive(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidInput(f"{name} must be a positive integer, got {value!r}")


def mobius(k: int) -> int:
    _check_positive("k", k)
    sign = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            sign = -sign
        p += 1
    if k > 1:
        sign = -sign
    return sign


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def witt(n: int, d: int) -> int:
    """Number of basic commutators of weight ``n`` on ``d`` generators.

    ``(1/n) * sum_{k | n} mobius(k) * d**(n/k)``, in exact integers. ``d`` may
    be arbitrarily large (nested multiplier ranks feed it back in).
    """
    _check_positive("weight n", n)
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise InvalidInput(f"generator count d must be a nonnegative integer, got {d!r}")
    total = sum(mobius(k) * d ** (n // k) for k in _divisors(n))
    q, r = divmod(total, n)
    assert r == 0, (n, d, total)
    return q


def witt_sum(lo: int, hi: int, d: int) -> int:
    """``sum_{i=lo}^{hi} witt(i, d)``; an empty range (lo > hi) sums to 0."""
    return sum(witt(i, d) for i in range(max(lo, 1), hi + 1))


@lru_cache(maxsize=None)
def basis_of_weight(m: int, w: int) -> tuple[Commutator, ...]:
    """All basic commutators of weight ``w`` on x1..xm, ascending.

    Built from the memoized lower-weight slices: [b,a] with wt(a) <= wt(b),
    a < b, and b a generator or b = [b1,b2] with b2 <= a.
    """
    _check_positive("number of generators m", m)
    _check_positive("weight", w)
    if w == 1:
        return tuple(generator(i) for i in range(1, m + 1))
    out = []
    for wa in range(1, w // 2 + 1):
        lower = basis_of_weight(m, wa)
        upper = basis_of_weight(m, w - wa)
        for b in upper:
            # b_right <= a, and a < b
            floor = None if b.is_generator else b.right
            for a in lower:
                if not a < b:
                    break
                if floor is not None and a < floor:
                    continue
                out.append(bracket(b, a))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class BasisSlice:
    num_generators: int
    min_weight: int
    max_weight: int
    elements: tuple[Commutator, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def of_weight(self, w: int) -> tuple[Commutator, ...]:
        return tuple(c for c in self.elements if c.weight == w)


def generate_basis(m: int, min_weight: int, max_weight: int) -> BasisSlice:
    _check_positive("number of generators m", m)
    _check_positive("min_weight", min_weight)
    _check_positive("max_weight", max_weight)
    if min_weight > max_weight:
        raise InvalidInput(f"min_weight {min_weight} exceeds max_weight {max_weight}")
    elements = []
    for w in range(min_weight, max_weight + 1):
        elements.extend(basis_of_weight(m, w))
    return BasisSlice(m, min_weight, max_weight, tuple(elements))
