"""Boundary combinatorics of the moduli space of stable pointed rational curves.

A boundary divisor is recorded by the subset of marked points on one side
of the node; an F-curve by a partition of the marked points into four
nonempty blocks.  Restricting any weighted bundle to an F-curve reduces
its degree computation to a four-point weight vector obtained by summing
weights over blocks mod r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .weights import WeightVector


@dataclass(frozen=True)
class BoundaryCut:
    """One side of a boundary divisor of the n-pointed moduli space.

    Canonical representative: the stored side contains the marked point 1,
    which identifies a subset with its complement.
    """

    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError(f"need n >= 4, got n={self.n}")
        members = frozenset(int(i) for i in self.members)
        if any(i < 1 or i > self.n for i in members):
            raise ValueError(f"cut {sorted(members)} not within {{1, ..., {self.n}}}")
        if not 2 <= len(members) <= self.n - 2:
            raise ValueError(
                f"cut size must lie between 2 and n-2 = {self.n - 2}, got {len(members)}"
            )
        if 1 not in members:
            members = frozenset(range(1, self.n + 1)) - members
        object.__setattr__(self, "members", members)

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.members


@dataclass(frozen=True)
class SetPartition4:
    """A partition of {1, ..., n} into four nonempty blocks (an F-curve).

    Blocks are stored sorted by their minimum element.
    """

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError(f"need n >= 4, got n={self.n}")
        blocks = tuple(frozenset(int(i) for i in b) for b in self.blocks)
        if len(blocks) != 4 or any(not b for b in blocks):
            raise ValueError("exactly four nonempty blocks required")
        union: set[int] = set()
        total = 0
        for b in blocks:
            union |= b
            total += len(b)
        if total != self.n or union != set(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition {{1, ..., {self.n}}}")
        blocks = tuple(sorted(blocks, key=min))
        object.__setattr__(self, "blocks", blocks)

    def label(self) -> str:
        """Slash-joined comma-lists of sorted block elements, e.g. '1,2/3/4/5,6'."""
        return "/".join(",".join(str(i) for i in sorted(b)) for b in self.blocks)


def enumerate_boundary_cuts(n: int) -> list[BoundaryCut]:
    """All canonical boundary cuts of the n-pointed space.

    Each subset/complement pair appears exactly once (the representative
    contains 1); there are 2^(n-1) - n - 1 of them.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got n={n}")
    cuts = []
    rest = range(2, n + 1)
    for size in range(2, n - 1):
        for extra in combinations(rest, size - 1):
            cuts.append(BoundaryCut(n, frozenset((1,) + extra)))
    return cuts


def enumerate_fcurves(n: int) -> list[SetPartition4]:
    """All partitions of {1, ..., n} into four nonempty blocks.

    Generated via restricted growth strings, so blocks come out sorted by
    minimum element and the overall order is deterministic.  The count is
    the Stirling number S(n, 4).
    """
    return list(_fcurves_cached(n))


@lru_cache(maxsize=None)
def _fcurves_cached(n: int) -> tuple[SetPartition4, ...]:
    if n < 4:
        raise ValueError(f"need n >= 4, got n={n}")
    results: list[SetPartition4] = []
    assignment = [0] * n

    def extend(i: int, used: int) -> None:
        if i == n:
            if used == 4:
                blocks: list[list[int]] = [[], [], [], []]
                for point, b in enumerate(assignment, start=1):
                    blocks[b].append(point)
                results.append(SetPartition4(n, tuple(frozenset(b) for b in blocks)))
            return
        # every unused block label must still be reachable
        if 4 - used > n - i:
            return
        for b in range(min(used + 1, 4)):
            assignment[i] = b
            extend(i + 1, max(used, b + 1))

    extend(0, 0)
    return tuple(results)


def induce_four_weights(c: WeightVector, partition: SetPartition4) -> WeightVector:
    """Sum the weights over each block of an F-curve partition, mod r.

    This is the four-point weight vector governing the restriction of any
    of the weighted bundles to the F-curve; entries are represented in
    {0, ..., r-1}.
    """
    if len(c) != partition.n:
        raise ValueError(
            f"weight vector length {len(c)} does not match partition on {partition.n} points"
        )
    if c.total() % c.r != 0:
        raise ValueError("weight sum must be divisible by r")
    sums = tuple(
        sum(c[i - 1] for i in block) % c.r for block in partition.blocks
    )
    return WeightVector(c.r, sums)
