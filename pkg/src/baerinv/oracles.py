"""Brute-force and classical oracles that share no code path with the closed forms."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from math import gcd

from baerinv.commutators import Commutator, bracket, generator, is_basic


@lru_cache(maxsize=None)
def all_trees(m: int, w: int) -> tuple[Commutator, ...]:
    """Every bracketing of weight w over x1..xm (Catalan * m**w trees)."""
    if w == 1:
        return tuple(generator(i) for i in range(1, m + 1))
    return tuple(
        bracket(left, right)
        for wl in range(1, w)
        for left in all_trees(m, wl)
        for right in all_trees(m, w - wl)
    )


def basic_by_filtering(m: int, w: int) -> list[Commutator]:
    """Basic commutators of weight w found by testing every tree."""
    return sorted(c for c in all_trees(m, w) if is_basic(c))


def necklace_count(n: int, d: int) -> int:
    """Aperiodic necklaces (Lyndon words) of length n over d letters, by enumeration."""
    count = 0
    for word in product(range(d), repeat=n):
        rotations = [word[i:] + word[:i] for i in range(n)]
        if all(word < r for r in rotations[1:]):
            count += 1
    return count


def _prime_powers(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            q = 1
            while k % p == 0:
                k //= p
                q *= p
            out.append(q)
        p += 1
    if k > 1:
        out.append(k)
    return out


def elementary_divisors(moduli) -> Counter:
    """Canonical form of a finite abelian group given by cyclic factor orders."""
    c = Counter()
    for k in moduli:
        c.update(_prime_powers(k))
    return c


def schur_multiplier(free_rank: int, torsion) -> tuple[int, Counter]:
    """M(Z^r + Z_{n1} + ... + Z_{nk}) via M(A+B) = M(A) + M(B) + A (x) B.

    Cyclic groups have trivial multiplier, so only the pairwise tensor
    products survive: Z (x) Z = Z, Z (x) Z_n = Z_n, Z_a (x) Z_b = Z_gcd(a,b).
    Returns (free rank, elementary divisors).
    """
    free = free_rank * (free_rank - 1) // 2
    moduli = []
    for t in torsion:
        moduli += [t] * free_rank
    for a, b in combinations(torsion, 2):
        g = gcd(a, b)
        if g > 1:
            moduli.append(g)
    return free, elementary_divisors(moduli)


def expand_words(c: Commutator) -> dict[tuple[int, ...], int]:
    """Image of a commutator in the free associative ring: [a,b] -> ab - ba."""
    if c.is_generator:
        return {(c.index,): 1}
    left, right = expand_words(c.left), expand_words(c.right)
    out = Counter()
    for u, a in left.items():
        for v, b in right.items():
            out[u + v] += a * b
            out[v + u] -= a * b
    return {w: k for w, k in out.items() if k}


def expand_combination(terms) -> dict[tuple[int, ...], int]:
    """Expansion of an integer combination ``{commutator: coefficient}``."""
    out = Counter()
    for c, k in terms.items():
        for w, a in expand_words(c).items():
            out[w] += k * a
    return {w: k for w, k in out.items() if k}
