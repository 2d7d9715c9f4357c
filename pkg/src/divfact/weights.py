"""Weight vectors and GIT linearizations.

Two kinds of weight data appear throughout: integer weights modulo a
cyclic order r (attached to marked points), and exact rational GIT
linearizations living in a hypersimplex.  This module houses both, plus
the weight transformations used when a pointed curve degenerates along a
boundary divisor: splitting a linearization across two linear subspaces,
and the pair of mod-r rules that push weights to the two sides of a
boundary cut.

All arithmetic is exact; rationals are `fractions.Fraction` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rational = Fraction | int


@dataclass(frozen=True)
class WeightVector:
    """Integer weights mod r attached to an ordered tuple of points.

    Entries live in {0, ..., r}; canonical form keeps them in
    {0, ..., r-1}.  The value r is permitted because one of the two
    restriction rules represents the residue 0 by r on its attaching
    point.
    """

    r: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"cyclic order must be positive, got r={self.r}")
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        for e in entries:
            if not 0 <= e <= self.r:
                raise ValueError(
                    f"weight {e} outside {{0, ..., {self.r}}} for r={self.r}"
                )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def total(self) -> int:
        return sum(self.entries)

    def canonical(self) -> "WeightVector":
        """Reduce every entry into {0, ..., r-1}."""
        return WeightVector(self.r, tuple(e % self.r for e in self.entries))


@dataclass(frozen=True)
class Linearization:
    """A rational weight vector in the hypersimplex of GIT linearizations.

    The entries lie in [0, 1] and sum to d+1, where d is the dimension of
    the ambient projective space for the point configuration.
    """

    entries: tuple[Fraction, ...]
    d: int

    def __post_init__(self) -> None:
        entries = tuple(Fraction(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not in_hypersimplex(entries, self.d):
            raise ValueError(
                f"{entries} is not in the hypersimplex Delta({self.d + 1}, {len(entries)})"
            )

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]


def in_hypersimplex(entries: Sequence[Rational], d: int) -> bool:
    """Exact membership test for the hypersimplex Delta(d+1, n).

    True iff every entry lies in [0, 1] and the entries sum to d+1.
    """
    if not entries:
        raise ValueError("empty weight vector")
    if d < 1:
        raise ValueError(f"ambient dimension must be >= 1, got d={d}")
    vals = [Fraction(e) for e in entries]
    if any(v < 0 or v > 1 for v in vals):
        return False
    return sum(vals) == d + 1


class RangeConditionError(ValueError):
    """A linearization cannot be split: a side sum leaves its allowed window."""


def split_linearization(
    c: Linearization, n1: int, d1: int
) -> tuple[Linearization, Linearization]:
    """Split a linearization across two linear subspaces of dimensions d1, d2.

    The first n1 weights stay on the d1-dimensional side and the rest on
    the d2 = d - d1 side; each side gains an attaching point whose weight
    makes the side sum equal d_i + 1 exactly.  Requires the side sums to
    satisfy d1 <= sum(first n1) <= d1 + 1 and d2 <= sum(rest) <= d2 + 1,
    which is exactly what membership of both outputs in their smaller
    hypersimplices needs.
    """
    n, d = c.n, c.d
    if not 2 <= n1 <= n - 2:
        raise ValueError(f"n1={n1} must satisfy 2 <= n1 <= n-2 = {n - 2}")
    if not 1 <= d1 <= d - 1:
        raise ValueError(f"d1={d1} must satisfy 1 <= d1 <= d-1 = {d - 1}")
    d2 = d - d1
    left = sum(c.entries[:n1], Fraction(0))
    right = sum(c.entries[n1:], Fraction(0))
    if left < d1:
        raise RangeConditionError(
            f"sum of first {n1} weights is {left} < d1 = {d1}"
        )
    if left > d1 + 1:
        raise RangeConditionError(
            f"sum of first {n1} weights is {left} > d1 + 1 = {d1 + 1}"
        )
    if right < d2:
        raise RangeConditionError(
            f"sum of last {n - n1} weights is {right} < d2 = {d2}"
        )
    if right > d2 + 1:
        raise RangeConditionError(
            f"sum of last {n - n1} weights is {right} > d2 + 1 = {d2 + 1}"
        )
    c_prime = Linearization(c.entries[:n1] + (right - d2,), d1)
    c_double = Linearization(c.entries[n1:] + (left - d1,), d2)
    return c_prime, c_double


def _relabel(c: WeightVector, members: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split entries of c into (those indexed by members, the rest), 1-based.

    Relative order is preserved on both sides, so a general index set is
    reduced to the initial-segment case.
    """
    mem = sorted(set(int(i) for i in members))
    n = len(c)
    if any(i < 1 or i > n for i in mem):
        raise ValueError(f"index set {mem} not within {{1, ..., {n}}}")
    if not 2 <= len(mem) <= n - 2:
        raise ValueError(
            f"index set must have size between 2 and n-2 = {n - 2}, got {len(mem)}"
        )
    inside = tuple(c[i - 1] for i in mem)
    outside = tuple(c[i - 1] for i in range(1, n + 1) if i not in set(mem))
    return inside, outside


def phi_rule(c: WeightVector, members: Iterable[int]) -> WeightVector:
    """Weights restricted to the side carrying the index set.

    Keeps the entries indexed by `members` and appends an attaching
    weight congruent to the complementary sum mod r, represented in
    {1, ..., r}.
    """
    inside, outside = _relabel(c, members)
    rho = sum(outside) % c.r
    if rho == 0:
        rho = c.r
    return WeightVector(c.r, inside + (rho,))


def psi_rule(c: WeightVector, members: Iterable[int]) -> WeightVector:
    """Weights restricted to the complementary side of the index set.

    Keeps the entries outside `members` and appends an attaching weight
    congruent to the inside sum mod r, represented in {0, ..., r-1}.
    """
    inside, outside = _relabel(c, members)
    sigma = sum(inside) % c.r
    return WeightVector(c.r, outside + (sigma,))
