"""Iteration of f_c(x) = x^2 + c, rational pre-image trees, arrangement
signatures, and the critical-parameter polynomials.

A value x is an N-th pre-image of a under f_c when f_c^N(x) = a.  Rational
pre-images of y under one step are the rational square roots of y - c, so a
pre-image tree is built level by level with exact square testing only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactmath import (
    BiPoly,
    QPoly,
    RatLike,
    eliminate_c,
    format_rat,
    parse_rat,
    rat_sqrt,
)


def iterate(c: RatLike, x: RatLike, n: int) -> Fraction:
    """f_c^n(x); n = 0 returns x."""
    if n < 0:
        raise ValueError("iteration count must be nonnegative")
    c = Fraction(c)
    x = Fraction(x)
    for _ in range(n):
        x = x * x + c
    return x


def preimages(c: RatLike, y: RatLike) -> tuple[Fraction, ...]:
    """All rational x with x^2 + c = y, sorted descending.

    The result is empty, {0} (the degenerate critical point, its own
    negation), or a pair {r, -r}.
    """
    r = rat_sqrt(Fraction(y) - Fraction(c))
    if r is None:
        return ()
    if r == 0:
        return (Fraction(0),)
    return (r, -r)


@dataclass(frozen=True)
class TreeNode:
    value: Fraction
    parent: int          # index into the previous level (0 for level-1 nodes)
    degenerate: bool     # value == 0

    def as_json(self) -> dict:
        return {"value": format_rat(self.value), "parent": self.parent,
                "degenerate": self.degenerate}


@dataclass(frozen=True)
class PreimageTree:
    """Complete rational pre-image tree of a under f_c to a fixed depth.

    levels[k] holds the (k+1)-st pre-images, canonically sorted by value
    descending.  Values are deduplicated within a level only; the same value
    reappearing at several depths (periodic points) is kept per level, and
    union_count reports the number of distinct values across all levels.
    """

    c: Fraction
    a: Fraction
    levels: tuple[tuple[TreeNode, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.levels)

    def signature(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def union_count(self) -> int:
        return len({node.value for level in self.levels for node in level})

    def level_values(self, k: int) -> tuple[Fraction, ...]:
        return tuple(node.value for node in self.levels[k])

    def as_json(self) -> dict:
        return {
            "c": format_rat(self.c),
            "a": format_rat(self.a),
            "depth": self.depth,
            "levels": [[format_rat(n.value) for n in level] for level in self.levels],
            "parents": [[n.parent for n in level] for level in self.levels],
            "signature": list(self.signature()),
            "union": self.union_count(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PreimageTree":
        c = parse_rat(data["c"])
        a = parse_rat(data["a"])
        levels = []
        for values, parents in zip(data["levels"], data["parents"]):
            level = tuple(TreeNode(parse_rat(v), p, parse_rat(v) == 0)
                          for v, p in zip(values, parents))
            levels.append(level)
        return cls(c=c, a=a, levels=tuple(levels))


def preimage_tree(c: RatLike, a: RatLike, depth: int) -> PreimageTree:
    """The full rational pre-image tree of a under f_c to the given depth."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    c = Fraction(c)
    a = Fraction(a)
    levels: list[tuple[TreeNode, ...]] = []
    previous: Sequence[Fraction] = (a,)
    for _ in range(depth):
        found: dict[Fraction, int] = {}
        for idx, y in enumerate(previous):
            for v in preimages(c, y):
                if v not in found:
                    found[v] = idx
        nodes = tuple(TreeNode(v, found[v], v == 0)
                      for v in sorted(found, reverse=True))
        levels.append(nodes)
        previous = tuple(n.value for n in nodes)
    return PreimageTree(c=c, a=a, levels=tuple(levels))


def signature(tree: PreimageTree) -> tuple[int, ...]:
    """Per-level rational pre-image counts (the arrangement signature)."""
    return tree.signature()


# ---------------------------------------------------------------------------
# critical parameters and critical values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalData:
    """Level-N critical data: the derivative polynomial in c whose roots are
    the critical parameters, and the minimal polynomial (in a) of the
    corresponding critical values."""

    n: int
    crit_poly_c: QPoly
    avalue_minpoly: QPoly


@lru_cache(maxsize=None)
def _orbit_poly(n: int) -> QPoly:
    """f_c^n(0) as a polynomial in c (degree 2^(n-1))."""
    g = QPoly.x()                      # f_c(0) = c
    for _ in range(n - 1):
        g = g * g + QPoly.x()
    return g


def critical_poly(n: int) -> QPoly:
    """d(f_c^n(0))/dc as a polynomial in c; degree 2^(n-1) - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return _orbit_poly(n).derivative()


@lru_cache(maxsize=None)
def critical_avalues(n: int) -> CriticalData:
    """Critical values at level n, represented by the elimination of c from
    the critical-parameter equation and a = f_c^n(0).

    The output polynomial is normalized to integer coefficients, content 1,
    positive leading coefficient.  For n >= 3 the roots are irrational and
    are never floated; the minimal polynomial is the representation.
    """
    if n < 2:
        raise ValueError("critical a-values start at n = 2")
    crit = BiPoly.from_qpoly_c(critical_poly(n))
    orbit = BiPoly.from_qpoly_c(_orbit_poly(n))
    minpoly = eliminate_c(crit, BiPoly.a_var() - orbit)
    return CriticalData(n=n, crit_poly_c=critical_poly(n), avalue_minpoly=minpoly)


def is_critical_value(a: RatLike, n: int) -> bool:
    """Whether a is a critical value at any level j with 2 <= j <= n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    a = Fraction(a)
    return any(critical_avalues(j).avalue_minpoly.eval(a) == 0
               for j in range(2, n + 1))
