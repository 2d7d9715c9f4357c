"""Numerics of cyclic covers of the line: genus, degeneration, Hodge ranks.

A degree-r cyclic cover branched over weighted points p_i with weights
c_i (r dividing the total weight) has genus determined by
Riemann-Hurwitz:

    g = (2 - 2r + sum_i (r - gcd(c_i, r))) / 2.

When the base line degenerates into two lines glued at a node, the
admissible-covers limit glues two cyclic covers whose branch weights are
the original ones plus an attaching weight equal to the opposite side's
sum, at s = gcd(side sum, r) points over the node.  Only the numerical
bookkeeping of this picture is implemented: weight labels, genera, the
point count s, and the rank split of the pulled-back Hodge bundle.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd
from typing import Sequence


class DisconnectedCoverWarning(UserWarning):
    """The branch data allows a disconnected cover; formulas applied verbatim."""


@dataclass(frozen=True)
class CoverSpec:
    """Branch data of a degree-r cyclic cover of the line.

    Weights are nonnegative integers whose sum is divisible by r; a
    weight divisible by r is an unramified (forgettable) point since
    gcd(c_i, r) = r there.
    """

    r: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"cover degree must be >= 2, got r={self.r}")
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("at least one branch point required")
        if any(e < 0 for e in entries):
            raise ValueError(f"branch weights must be nonnegative, got {entries}")
        if sum(entries) % self.r != 0:
            raise ValueError(
                f"r={self.r} must divide the total branch weight {sum(entries)}"
            )

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class DegenerationData:
    """Numerical data of the admissible-covers limit over a one-node base."""

    c_prime: tuple[int, ...]
    c_double_prime: tuple[int, ...]
    s: int
    g: int
    g1: int
    g2: int


def _genus_value(r: int, entries: Sequence[int]) -> tuple[int, int]:
    """Riemann-Hurwitz value and the gcd of all branch weights with r.

    The second component exceeding 1 means the cover may be disconnected.
    Raises when the formula does not give an integer, which only happens
    when r does not divide the total weight.
    """
    ramification = 0
    connectivity = r
    for e in entries:
        h = gcd(e, r)
        ramification += r - h
        connectivity = gcd(connectivity, h)
    twice = 2 - 2 * r + ramification
    if twice % 2 != 0:
        raise ValueError(
            f"Riemann-Hurwitz gives the non-integer {twice}/2 for r={r}, weights {tuple(entries)}"
        )
    return twice // 2, connectivity


def genus(spec: CoverSpec) -> int:
    """Genus of the cyclic cover via Riemann-Hurwitz.

    For branch data that only supports a disconnected cover (the weights
    and r share a common factor) the formula is still evaluated, a
    warning is emitted, and the result may be negative; it is then the
    arithmetic Euler-characteristic genus of the disjoint union.
    """
    g, connectivity = _genus_value(spec.r, spec.entries)
    if connectivity > 1:
        warnings.warn(
            f"gcd of branch weights and r={spec.r} is {connectivity} > 1; "
            "the cover may be disconnected",
            DisconnectedCoverWarning,
            stacklevel=2,
        )
    if g < 0 and connectivity == 1:
        raise ValueError(
            f"negative genus {g} for connected branch data {spec.entries}; "
            "input is invalid (too few branch points)"
        )
    return g


def degenerate(spec: CoverSpec, n1: int) -> DegenerationData:
    """Numerical degeneration data when the first n1 branch points split off.

    Produces the two side weight vectors (attaching weights reduced into
    {0, ..., r-1}), the number s of points over the node, and the three
    genera, asserting both the gcd symmetry defining s and the additivity
    g = g1 + g2 + s - 1.
    """
    r, entries = spec.r, spec.entries
    n = spec.n
    if not 2 <= n1 <= n - 2:
        raise ValueError(f"n1={n1} must satisfy 2 <= n1 <= n-2 = {n - 2}")
    left = sum(entries[:n1])
    right = sum(entries[n1:])
    s_left = gcd(left, r)
    s_right = gcd(right, r)
    if s_left != s_right:
        raise ValueError(
            f"gcd symmetry failed: gcd({left}, {r}) = {s_left} != gcd({right}, {r}) = {s_right}"
        )
    s = s_left
    c_prime = entries[:n1] + (right % r,)
    c_double_prime = entries[n1:] + (left % r,)
    g, _ = _genus_value(r, entries)
    g1, _ = _genus_value(r, c_prime)
    g2, _ = _genus_value(r, c_double_prime)
    if g != g1 + g2 + s - 1:
        raise ValueError(
            f"genus additivity failed: g={g}, g1={g1}, g2={g2}, s={s}"
        )
    return DegenerationData(
        c_prime=c_prime, c_double_prime=c_double_prime, s=s, g=g, g1=g1, g2=g2
    )


def hodge_rank_split(g1: int, g2: int, s: int) -> tuple[int, int, int]:
    """Rank decomposition of the Hodge bundle pulled back to the glued locus.

    Gluing genus-g1 and genus-g2 curves at s points gives genus
    g = g1 + g2 + s - 1, and the rank-g Hodge bundle pulls back to the
    two sides' Hodge bundles plus s - 1 trivial summands.
    """
    if g1 < 0 or g2 < 0:
        raise ValueError(f"genera must be nonnegative, got g1={g1}, g2={g2}")
    if s < 1:
        raise ValueError(f"need at least one gluing point, got s={s}")
    return (g1, g2, s - 1)
