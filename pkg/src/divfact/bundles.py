"""Degrees of the three weighted bundle families on F-curves.

Three constructions attach a line bundle to a mod-r weight vector on the
marked points: level-one type A conformal blocks, GIT polarizations
pulled back from quotients of point configurations, and (tensor powers
of) Hodge eigenbundle determinants on cyclic-cover loci.  Each family
obeys the same boundary restriction rule, so its degree on an F-curve
only depends on the four block sums of the weights.  This module holds
the three four-point degree formulas, the resulting degree vectors, and
exhaustive checkers for their coincidence and for the factorization rule
itself.

GIT degrees are stored at the scale of the quotient's hyperplane class
times r (equivalently, the r-th tensor power convention used for the
cyclic family), so all three families take integer values on the same
scale.  A weight vector whose sum is not divisible by r names the
trivial bundle, hence degree zero everywhere.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .strata import SetPartition4, enumerate_fcurves
from .weights import WeightVector, phi_rule, psi_rule


class BundleFamily(Enum):
    CB = "cb"
    GIT = "git"
    CYC = "cyc"

    def degree4(self, r: int, c: Sequence[int]) -> int:
        return _BASE_FORMULAS[self](r, c)


def _check_base_input(r: int, c: Sequence[int]) -> list[int]:
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    vals = sorted(int(x) for x in c)
    if len(vals) != 4:
        raise ValueError(f"need exactly 4 weights, got {len(vals)}")
    if vals[0] < 0 or vals[-1] > r:
        raise ValueError(f"weights {vals} outside {{0, ..., {r}}}")
    return vals


def deg4_cb(r: int, c: Sequence[int]) -> int:
    """Degree of the four-point level-one conformal block bundle.

    With c sorted ascending: c1 if |c| = 2r and c2 + c3 >= c1 + c4,
    r - c4 if |c| = 2r and c2 + c3 <= c1 + c4, and 0 otherwise.  The two
    branches agree when both inequalities hold.
    """
    c1, c2, c3, c4 = _check_base_input(r, c)
    if c1 + c2 + c3 + c4 != 2 * r:
        return 0
    if c2 + c3 >= c1 + c4:
        return c1
    return r - c4


def deg4_git(r: int, c: Sequence[int]) -> int:
    """Degree of the four-point GIT bundle, at r times the quotient scale.

    min(c1, r - c4) when |c| = 2r (weights sorted ascending), else 0.
    """
    c1, c2, c3, c4 = _check_base_input(r, c)
    if c1 + c2 + c3 + c4 != 2 * r:
        return 0
    return min(c1, r - c4)


def deg4_cyc(r: int, c: Sequence[int]) -> int:
    """Degree of the r-th power of the four-point cyclic eigenbundle determinant.

    min(c1, r - c4) when |c| = 2r (weights sorted ascending), else 0.
    """
    c1, c2, c3, c4 = _check_base_input(r, c)
    if c1 + c2 + c3 + c4 != 2 * r:
        return 0
    return min(c1, r - c4)


_BASE_FORMULAS = {
    BundleFamily.CB: deg4_cb,
    BundleFamily.GIT: deg4_git,
    BundleFamily.CYC: deg4_cyc,
}


def fcurve_degree(
    family: BundleFamily, r: int, c: Sequence[int], partition: SetPartition4
) -> int:
    """Degree of the family's bundle for weights c on one F-curve.

    Reduces to the four-point base formula applied to the block sums of c
    mod r.  Returns 0 when r does not divide the total weight (trivial
    bundle convention).
    """
    entries = tuple(int(x) for x in c)
    if len(entries) != partition.n:
        raise ValueError(
            f"weight vector length {len(entries)} does not match partition on {partition.n} points"
        )
    if sum(entries) % r != 0:
        return 0
    induced = [sum(entries[i - 1] for i in block) % r for block in partition.blocks]
    return family.degree4(r, induced)


@dataclass(frozen=True)
class DegreeVector:
    """Degrees of a line bundle on every F-curve of the n-pointed space.

    By numerical equivalence on this moduli space, two bundles are
    isomorphic exactly when their degree vectors agree.
    """

    n: int
    r: int
    degrees: dict[SetPartition4, int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreeVector):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and self.degrees == other.degrees

    def items(self) -> Iterable[tuple[SetPartition4, int]]:
        return self.degrees.items()


def degree_vector(family: BundleFamily, r: int, c: Sequence[int]) -> DegreeVector:
    """Evaluate the family's degree on every F-curve, in canonical order."""
    entries = tuple(int(x) for x in c)
    n = len(entries)
    degrees = {
        p: fcurve_degree(family, r, entries, p) for p in enumerate_fcurves(n)
    }
    return DegreeVector(n=n, r=r, degrees=degrees)


@dataclass
class Mismatch:
    c: tuple[int, ...]
    partition: SetPartition4
    cb: int
    git: int
    cyc: int


@dataclass
class MainTheoremReport:
    r: int
    n: int
    vectors_checked: int
    fcurves_per_vector: int
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _admissible_vectors(r: int, n: int) -> list[tuple[int, ...]]:
    return [c for c in product(range(r), repeat=n) if sum(c) % r == 0]


def _sweep_chunk(args: tuple[int, list[tuple[frozenset[int], ...]], list[tuple[int, ...]]]):
    """Check the three-family coincidence over a chunk of weight vectors."""
    r, block_lists, vectors = args
    mismatches = []
    for c in vectors:
        for blocks in block_lists:
            u = sorted(sum(c[i - 1] for i in block) % r for block in blocks)
            total = u[0] + u[1] + u[2] + u[3]
            if total != 2 * r:
                cb = git = cyc = 0
            else:
                cb = u[0] if u[1] + u[2] >= u[0] + u[3] else r - u[3]
                git = min(u[0], r - u[3])
                cyc = git
            if not cb == git == cyc:
                mismatches.append((c, blocks, cb, git, cyc))
    return len(vectors), mismatches


def verify_main_theorem(r: int, n: int, jobs: int | None = None) -> MainTheoremReport:
    """Exhaustively compare the three degree vectors over all admissible weights.

    Iterates over every c in {0, ..., r-1}^n with r dividing the sum and
    asserts that the conformal block, GIT, and cyclic degree vectors agree
    on every F-curve.  Any mismatch signals an implementation bug; the
    report carries them sorted for reproducibility.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    start = time.perf_counter()
    fcurves = enumerate_fcurves(n)
    block_lists = [p.blocks for p in fcurves]
    vectors = _admissible_vectors(r, n)

    workers = jobs if jobs is not None else 1
    if workers > 1 and len(vectors) >= 4 * workers:
        chunk = (len(vectors) + workers - 1) // workers
        parts = [vectors[i : i + chunk] for i in range(0, len(vectors), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(_sweep_chunk, [(r, block_lists, p) for p in parts]))
    else:
        outputs = [_sweep_chunk((r, block_lists, vectors))]

    checked = sum(count for count, _ in outputs)
    raw = [m for _, ms in outputs for m in ms]
    raw.sort(key=lambda m: (m[0], tuple(sorted(tuple(sorted(b)) for b in m[1]))))
    mismatches = [
        Mismatch(c, SetPartition4(n, blocks), cb, git, cyc)
        for c, blocks, cb, git, cyc in raw
    ]
    return MainTheoremReport(
        r=r,
        n=n,
        vectors_checked=checked,
        fcurves_per_vector=len(fcurves),
        mismatches=mismatches,
        elapsed=time.perf_counter() - start,
    )


def default_worker_count() -> int:
    """Worker count from the DIVFACT_WORKERS environment variable, else CPU count."""
    env = os.environ.get("DIVFACT_WORKERS")
    if env is not None:
        workers = int(env)
        if workers < 1:
            raise ValueError(f"DIVFACT_WORKERS must be positive, got {env}")
        return workers
    return os.cpu_count() or 1


@lru_cache(maxsize=None)
def _cut_restriction_pairs(
    n: int, inside: tuple[int, ...]
) -> tuple[tuple[bool, tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]], ...]:
    """F-curves of the two sides of a cut, paired with their ambient images.

    An F-curve of a side becomes an ambient F-curve by merging the
    opposite side of the cut into the block that carries the attaching
    point.  The boolean marks the side containing the cut's index set;
    blocks are stored as sorted index tuples (1-based).
    """
    outside = tuple(i for i in range(1, n + 1) if i not in set(inside))
    pairs = []
    for on_inside, side_points, other_points in (
        (True, inside, outside),
        (False, outside, inside),
    ):
        m = len(side_points)
        if m + 1 < 4:
            continue
        attach = m + 1
        for q in enumerate_fcurves(m + 1):
            side_blocks = tuple(tuple(sorted(block)) for block in q.blocks)
            ambient_blocks = []
            for block in q.blocks:
                mapped = {side_points[i - 1] for i in block if i != attach}
                if attach in block:
                    mapped |= set(other_points)
                ambient_blocks.append(tuple(sorted(mapped)))
            pairs.append((on_inside, side_blocks, tuple(ambient_blocks)))
    return tuple(pairs)


def check_git_factorization(r: int, c: Sequence[int], members: Iterable[int]) -> bool:
    """Numerically verify the GIT boundary factorization along one cut.

    For every F-curve of either side of the cut, the degree computed from
    the restricted weights (via the side's own block sums) must equal the
    ambient degree on the corresponding ambient F-curve, obtained by
    merging the opposite side into the block carrying the attaching point.
    """
    entries = tuple(int(x) for x in c)
    n = len(entries)
    wv = WeightVector(r, tuple(e % r for e in entries))
    inside = tuple(sorted(set(int(i) for i in members)))

    c_phi = tuple(phi_rule(wv, inside))
    c_psi = tuple(psi_rule(wv, inside))
    ambient_trivial = sum(entries) % r != 0
    phi_trivial = sum(c_phi) % r != 0
    psi_trivial = sum(c_psi) % r != 0

    for on_inside, side_blocks, ambient_blocks in _cut_restriction_pairs(n, inside):
        side_weights, side_trivial = (
            (c_phi, phi_trivial) if on_inside else (c_psi, psi_trivial)
        )
        if side_trivial:
            side_deg = 0
        else:
            side_deg = deg4_git(
                r, [sum(side_weights[i - 1] for i in block) % r for block in side_blocks]
            )
        if ambient_trivial:
            ambient_deg = 0
        else:
            ambient_deg = deg4_git(
                r, [sum(entries[i - 1] for i in block) % r for block in ambient_blocks]
            )
        if side_deg != ambient_deg:
            return False
    return True
