"""Formal commutators on an ordered alphabet x1 < x2 < ... and basic commutators.

A commutator is a binary tree: either a generator leaf ``x<i>`` or a pair
``[left,right]``. Commutators are immutable and hashable; structural equality
is the identity used everywhere (sets, dict keys, pair enumeration).

Ordering: lower weight first. Within a weight, leaves compare by index and
pairs compare lexicographically on (left, right), recursively. This fixes one
concrete choice among the admissible orders, so basis listings are
reproducible. Counts and ranks do not depend on it.
"""

from __future__ import annotations

from functools import lru_cache, total_ordering
import re

from baerinv.errors import InvalidInput


@total_ordering
class Commutator:
    __slots__ = ("index", "left", "right", "weight", "_key", "_hash")

    def __init__(self, index=None, left=None, right=None):
        if index is not None:
            if left is not None or right is not None:
                raise InvalidInput("a generator has no children")
            if not isinstance(index, int) or index < 1:
                raise InvalidInput(f"generator index must be a positive integer, got {index!r}")
            self.index = index
            self.left = self.right = None
            self.weight = 1
            self._key = (1, index)
        else:
            if not isinstance(left, Commutator) or not isinstance(right, Commutator):
                raise InvalidInput("a bracket needs two commutators")
            self.index = None
            self.left = left
            self.right = right
            self.weight = left.weight + right.weight
            # Equal weights imply equal shapes at the top level (both leaves or
            # both pairs), so these nested tuples never compare int to tuple.
            self._key = (self.weight, left._key, right._key)
        self._hash = hash(self._key)

    @property
    def is_generator(self) -> bool:
        return self.index is not None

    def sort_key(self):
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Commutator):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __lt__(self, other):
        if not isinstance(other, Commutator):
            return NotImplemented
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self.index is not None:
            return f"x{self.index}"
        return f"[{self.left},{self.right}]"

    def __repr__(self):
        return f"Commutator({self})"

    def max_index(self) -> int:
        """Largest generator index occurring in the tree."""
        if self.index is not None:
            return self.index
        return max(self.left.max_index(), self.right.max_index())


def generator(index: int) -> Commutator:
    return Commutator(index=index)


def bracket(left: Commutator, right: Commutator) -> Commutator:
    """The formal commutator ``[left, right]``."""
    return Commutator(left=left, right=right)


def weight(c: Commutator) -> int:
    return c.weight


def compare(a: Commutator, b: Commutator) -> int:
    """Three-way comparison: -1 if a < b, 0 if structurally equal, 1 if a > b."""
    ka, kb = a.sort_key(), b.sort_key()
    if ka == kb:
        return 0
    return -1 if ka < kb else 1


@lru_cache(maxsize=None)
def is_basic(c: Commutator) -> bool:
    """Hall's basic-commutator test.

    ``[b,a]`` is basic iff b and a are basic, a < b, and either b is a
    generator or b = [b1,b2] with b2 <= a.
    """
    if c.is_generator:
        return True
    b, a = c.left, c.right
    if not a < b:
        return False
    if not b.is_generator and a < b.right:
        return False
    return is_basic(b) and is_basic(a)


_TOKEN = re.compile(r"\[|\]|,|x[1-9][0-9]*")


def parse(text: str) -> Commutator:
    """Inverse of ``str``: parses ``x3`` or ``[[x2,x1],x1]`` (whitespace ignored)."""
    compact = "".join(text.split())
    tokens = _TOKEN.findall(compact)
    if "".join(tokens) != compact or not tokens:
        raise InvalidInput(f"cannot parse commutator {text!r}")
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            raise InvalidInput(f"cannot parse commutator {text!r}: expected {tok!r}")
        pos += 1

    def term():
        nonlocal pos
        if pos >= len(tokens):
            raise InvalidInput(f"cannot parse commutator {text!r}: unexpected end")
        tok = tokens[pos]
        if tok == "[":
            pos += 1
            left = term()
            expect(",")
            right = term()
            expect("]")
            return bracket(left, right)
        if tok.startswith("x"):
            pos += 1
            return generator(int(tok[1:]))
        raise InvalidInput(f"cannot parse commutator {text!r}: unexpected {tok!r}")

    result = term()
    if pos != len(tokens):
        raise InvalidInput(f"cannot parse commutator {text!r}: trailing input")
    return result
