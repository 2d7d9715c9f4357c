"""Tableau invariants of point configurations and their boundary restriction.

The multihomogeneous invariants of n ordered points in projective d-space
are spanned by semistandard tableau functions: products of maximal minors
of the coordinate matrix, one minor per tableau column.  When the
configuration space is restricted to two linear subspaces glued at a
point (the block coordinate matrix produced by `attach_block_matrix`),
each tableau function either dies or splits as a signed product of two
smaller tableau functions.  This module enumerates the tableau bases,
evaluates them symbolically, performs the combinatorial splitting, and
cross-checks the two against each other.

Everything here is exact: polynomial identities over the integers and
rational point coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .polynomials import Poly, determinant
from .weights import Linearization, split_linearization

Column = tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    """A rectangular semistandard filling with d+1 rows and k columns.

    Entries weakly increase along rows and strictly increase down
    columns; each column is stored as a strictly increasing tuple.
    """

    d: int
    k: int
    columns: tuple[Column, ...]

    def __post_init__(self) -> None:
        columns = tuple(tuple(int(v) for v in col) for col in self.columns)
        object.__setattr__(self, "columns", columns)
        if len(columns) != self.k:
            raise ValueError(f"expected {self.k} columns, got {len(columns)}")
        for col in columns:
            if len(col) != self.d + 1:
                raise ValueError(f"column {col} does not have height {self.d + 1}")
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                raise ValueError(f"column {col} is not strictly increasing")
            if col[0] < 1:
                raise ValueError(f"entries must be positive, got column {col}")
        for left, right in zip(columns, columns[1:]):
            if any(a > b for a, b in zip(left, right)):
                raise ValueError(
                    f"rows not weakly increasing between columns {left} and {right}"
                )

    def content(self, n: int) -> tuple[int, ...]:
        """Occurrence count of each entry 1..n."""
        counts = [0] * n
        for col in self.columns:
            for v in col:
                counts[v - 1] += 1
        return tuple(counts)


def enumerate_tableaux(d: int, k: int, content: Sequence[int]) -> list[Tableau]:
    """All semistandard (d+1) x k fillings where entry i appears content[i-1] times.

    Returns the empty list when none exist.  Enumeration is by
    lexicographic backtracking over cells, so the order is deterministic.
    """
    n = len(content)
    remaining = [int(x) for x in content]
    if any(x < 0 for x in remaining):
        raise ValueError(f"content must be nonnegative, got {content}")
    if sum(remaining) != k * (d + 1):
        raise ValueError(
            f"content sums to {sum(remaining)}, expected k*(d+1) = {k * (d + 1)}"
        )
    height = d + 1
    results: list[Tableau] = []
    current: list[int] = []
    finished: list[Column] = []

    def fill(col_index: int, row: int) -> None:
        if col_index == k:
            results.append(Tableau(d, k, tuple(finished)))
            return
        if row == height:
            finished.append(tuple(current))
            current.clear()
            fill(col_index + 1, 0)
            current.extend(finished.pop())
            return
        lowest = current[row - 1] + 1 if row > 0 else 1
        if col_index > 0:
            lowest = max(lowest, finished[col_index - 1][row])
        # the column still needs height - row - 1 strictly larger entries
        highest = n - (height - row - 1)
        for v in range(lowest, highest + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            current.append(v)
            fill(col_index, row + 1)
            current.pop()
            remaining[v - 1] += 1

    fill(0, 0)
    return results


# ---------------------------------------------------------------------------
# symbolic coordinate matrices


def generic_matrix(d: int, n: int) -> list[list[Poly]]:
    """The (d+1) x n matrix of independent coordinate variables x(i, j)."""
    return [[Poly.variable((i, j)) for j in range(1, n + 1)] for i in range(d + 1)]


def side_matrices(
    d1: int, n1: int, d2: int, n2: int
) -> tuple[list[list[Poly]], list[list[Poly]]]:
    """Coordinate matrices of the two glued configuration spaces.

    The first has n1 generic points in d1-space plus a final point fixed
    at the last basis vector; the second has n2 generic points in
    d2-space plus a final point fixed at the first basis vector.  Second
    block variables are indexed by columns n1+1..n1+n2 so they coincide
    with the variables of `attach_block_matrix`.
    """
    a1 = [
        [Poly.variable((i, j)) for j in range(1, n1 + 1)]
        + [Poly.const(1 if i == d1 else 0)]
        for i in range(d1 + 1)
    ]
    a2 = [
        [Poly.variable((i, n1 + j)) for j in range(1, n2 + 1)]
        + [Poly.const(1 if i == 0 else 0)]
        for i in range(d2 + 1)
    ]
    return a1, a2


def attach_block_matrix(d1: int, d2: int, n1: int, n2: int) -> list[list[Poly]]:
    """The glued (d+1) x n coordinate matrix, d = d1 + d2, n = n1 + n2.

    Columns 1..n1 occupy rows 0..d1 and columns n1+1..n occupy rows
    d1..d; the shared row d1 carries the last coordinate row of the first
    block and the first coordinate row of the second.  The attaching
    point itself is not a column.
    """
    d = d1 + d2
    rows: list[list[Poly]] = []
    for i in range(d + 1):
        row: list[Poly] = []
        for j in range(1, n1 + 1):
            row.append(Poly.variable((i, j)) if i <= d1 else Poly.const(0))
        for j in range(n1 + 1, n1 + n2 + 1):
            row.append(Poly.variable((i - d1, j)) if i >= d1 else Poly.const(0))
        rows.append(row)
    return rows


def tableau_polynomial(columns: Sequence[Column], matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Product over tableau columns of the corresponding maximal minors.

    A column (a_1 < ... < a_h) selects matrix columns a_1, ..., a_h (the
    matrix must have exactly h rows); juxtaposition multiplies minors.
    """
    height = len(matrix)
    width = len(matrix[0])
    result = Poly.const(1)
    for col in columns:
        if len(col) != height:
            raise ValueError(f"column {col} does not match matrix height {height}")
        if col[-1] > width:
            raise ValueError(f"column {col} selects beyond matrix width {width}")
        sub = [[matrix[i][a - 1] for a in col] for i in range(height)]
        result = result * determinant(sub)
    return result


def evaluate_tableau(t: Tableau, n: int) -> Poly:
    """The tableau function on the generic coordinate matrix of n points."""
    for col in t.columns:
        if col[-1] > n:
            raise ValueError(f"column {col} has entries beyond n={n}")
    return tableau_polynomial(t.columns, generic_matrix(t.d, n))


def coordinate_assignment(cfg: "PointConfiguration") -> dict[tuple[int, int], Fraction]:
    """Variable assignment x(i, j) -> j-th point's i-th coordinate."""
    return {
        (i, j): cfg.points[j - 1][i]
        for j in range(1, len(cfg.points) + 1)
        for i in range(cfg.d + 1)
    }


# ---------------------------------------------------------------------------
# point configurations and semistability


@dataclass(frozen=True)
class PointConfiguration:
    """An ordered tuple of points in projective d-space, exact rational.

    Each point is stored as a homogeneous coordinate column normalized so
    that its first nonzero coordinate equals 1.
    """

    d: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        normalized = []
        for p in self.points:
            coords = tuple(Fraction(x) for x in p)
            if len(coords) != self.d + 1:
                raise ValueError(
                    f"point {coords} does not have {self.d + 1} homogeneous coordinates"
                )
            pivot = next((x for x in coords if x != 0), None)
            if pivot is None:
                raise ValueError("zero column is not a projective point")
            normalized.append(tuple(x / pivot for x in coords))
        object.__setattr__(self, "points", tuple(normalized))

    @property
    def n(self) -> int:
        return len(self.points)


class Stability(Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    UNSTABLE = "unstable"


def _echelon_basis(vectors: list[tuple[Fraction, ...]]) -> list[list[Fraction]]:
    basis: list[list[Fraction]] = []
    for vec in vectors:
        row = list(vec)
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x != 0)
            if row[lead] != 0:
                factor = row[lead] / b[lead]
                row = [x - factor * y for x, y in zip(row, b)]
        if any(x != 0 for x in row):
            basis.append(row)
    return basis


def _in_span(basis: list[list[Fraction]], vec: tuple[Fraction, ...]) -> bool:
    row = list(vec)
    for b in basis:
        lead = next(i for i, x in enumerate(b) if x != 0)
        if row[lead] != 0:
            factor = row[lead] / b[lead]
            row = [x - factor * y for x, y in zip(row, b)]
    return all(x == 0 for x in row)


def is_semistable(cfg: PointConfiguration, c: Linearization) -> Stability:
    """Classify a weighted configuration as stable, strictly semistable, or unstable.

    The configuration is semistable iff every proper linear subspace W
    carries total weight at most dim W + 1, and stable iff strictly less.
    It suffices to test subspaces spanned by subsets of the points, since
    replacing W by the span of the points it contains keeps the weight
    while possibly lowering the dimension.  Spans of at most d points
    exhaust these (they are automatically proper).
    """
    if cfg.n != c.n:
        raise ValueError(f"{cfg.n} points but {c.n} weights")
    if cfg.d != c.d:
        raise ValueError(f"configuration in dimension {cfg.d} but linearization for {c.d}")
    worst = None
    for size in range(1, cfg.d + 1):
        for subset in combinations(range(cfg.n), size):
            basis = _echelon_basis([cfg.points[i] for i in subset])
            if len(basis) < size:
                continue  # dependent subset; its span already appeared
            dim = len(basis) - 1
            weight = sum(
                (c[i] for i in range(cfg.n) if _in_span(basis, cfg.points[i])),
                Fraction(0),
            )
            slack = weight - (dim + 1)
            if worst is None or slack > worst:
                worst = slack
    if worst is None or worst < 0:
        return Stability.STABLE
    if worst == 0:
        return Stability.STRICTLY_SEMISTABLE
    return Stability.UNSTABLE


def attach_configuration(
    a1: PointConfiguration, a2: PointConfiguration
) -> PointConfiguration:
    """Glue two normalized configurations into one in the joined space.

    The first configuration must end with the last basis vector of its
    space and the second with the first basis vector of its own; those
    two final points become the attaching point and are dropped.  The
    remaining points embed block-wise: first-block points keep their
    coordinates in rows 0..d1, second-block points occupy rows d1..d.
    """
    d1, d2 = a1.d, a2.d
    last1 = tuple(Fraction(1 if i == d1 else 0) for i in range(d1 + 1))
    first2 = tuple(Fraction(1 if i == 0 else 0) for i in range(d2 + 1))
    if a1.points[-1] != last1:
        raise ValueError(
            f"final point of the first configuration must be {last1}, got {a1.points[-1]}"
        )
    if a2.points[-1] != first2:
        raise ValueError(
            f"final point of the second configuration must be {first2}, got {a2.points[-1]}"
        )
    d = d1 + d2
    zero = Fraction(0)
    ambient: list[tuple[Fraction, ...]] = []
    for p in a1.points[:-1]:
        ambient.append(tuple(p) + (zero,) * d2)
    for p in a2.points[:-1]:
        ambient.append((zero,) * d1 + tuple(p))
    return PointConfiguration(d, tuple(ambient))


# ---------------------------------------------------------------------------
# the restriction map on tableau functions


class RestrictionNotSemistandardError(ValueError):
    """The restricted column pair admits no semistandard arrangement.

    The restriction is then a nonzero invariant outside the product
    basis (it straightens into a combination of basis pairs), which
    happens only when a side has more free points than its minor height.
    """


@dataclass(frozen=True)
class MuDecomposition:
    sign: int
    left: Tableau
    right: Tableau


@lru_cache(maxsize=None)
def _column_sign(d1: int, d2: int, wide_first: bool) -> int:
    """Sign relating a restricted column minor to its two-factor product.

    Determined once per column pattern by direct symbolic evaluation on
    the smallest instance (n1 = d1 + 1, n2 = d2 + 1); `wide_first` marks
    the pattern with d1 + 1 entries in the first block.
    """
    n1, n2 = d1 + 1, d2 + 1
    b = attach_block_matrix(d1, d2, n1, n2)
    a1, a2 = side_matrices(d1, n1, d2, n2)
    if wide_first:
        ambient = tuple(range(1, d1 + 2)) + tuple(range(n1 + 1, n1 + d2 + 1))
        left = tuple(range(1, d1 + 2))
        right = tuple(range(1, d2 + 1)) + (n2 + 1,)
    else:
        ambient = tuple(range(1, d1 + 1)) + tuple(range(n1 + 1, n1 + d2 + 2))
        left = tuple(range(1, d1 + 1)) + (n1 + 1,)
        right = tuple(range(1, d2 + 2))
    lhs = tableau_polynomial([ambient], b)
    rhs = tableau_polynomial([left], a1) * tableau_polynomial([right], a2)
    if lhs == rhs:
        return 1
    if lhs == -rhs:
        return -1
    raise AssertionError(
        f"restricted minor is not proportional to its factors for d1={d1}, d2={d2}"
    )


def _mu_columns(
    t: Tableau, n1: int, n2: int, d1: int, d2: int
) -> tuple[int, list[Column], list[Column]] | None:
    """Raw column data of the restriction, or None when it vanishes.

    Column order on the left is inherited from t; on the right, columns
    coming from the narrow pattern are placed before those from the wide
    pattern, which is the only order that can be semistandard.
    """
    if t.d != d1 + d2:
        raise ValueError(f"tableau height {t.d + 1} does not match d1+d2+1 = {d1 + d2 + 1}")
    for col in t.columns:
        if col[-1] > n1 + n2:
            raise ValueError(f"column {col} has entries beyond n = {n1 + n2}")
    sign = 1
    left: list[Column] = []
    right_narrow: list[Column] = []
    right_wide: list[Column] = []
    for col in t.columns:
        first = tuple(v for v in col if v <= n1)
        second = tuple(v - n1 for v in col if v > n1)
        if len(first) == d1 + 1:
            left.append(first)
            right_wide.append(second + (n2 + 1,))
            sign *= _column_sign(d1, d2, True)
        elif len(first) == d1:
            left.append(first + (n1 + 1,))
            right_narrow.append(second)
            sign *= _column_sign(d1, d2, False)
        else:
            return None
    return sign, left, right_narrow + right_wide


def mu_decompose(
    t: Tableau, n1: int, n2: int, d1: int, d2: int
) -> MuDecomposition | None:
    """Split a tableau function across the glued configuration space.

    Returns None when the restriction vanishes (some column does not meet
    the two blocks in sizes d1+1/d2 or d1/d2+1).  Otherwise returns the
    two factor tableaux, with entries n1+1 and n2+1 marking the attaching
    point, and the sign making

        restriction of t  =  sign * (left tableau) * (right tableau)

    an exact polynomial identity on the block coordinate matrix.  Raises
    RestrictionNotSemistandardError in the exceptional case where the
    factor columns admit no semistandard arrangement.
    """
    raw = _mu_columns(t, n1, n2, d1, d2)
    if raw is None:
        return None
    sign, left_cols, right_cols = raw
    try:
        left = Tableau(d1, t.k, tuple(left_cols))
        right = Tableau(d2, t.k, tuple(right_cols))
    except ValueError as exc:
        raise RestrictionNotSemistandardError(
            f"restriction of {t.columns} gives factor columns {left_cols} and "
            f"{right_cols}, which are not semistandard: {exc}"
        ) from None
    return MuDecomposition(sign=sign, left=left, right=right)


@dataclass
class RestrictionReport:
    """Outcome of the exhaustive symbolic check of the restriction map."""

    d1: int
    d2: int
    n1: int
    n2: int
    k: int
    alpha: int
    beta: int
    dim_ambient: int
    dim_left: int
    dim_right: int
    decomposable: int
    zero_restrictions: int
    nonbasis_images: int
    distinct_images: int
    surjective: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def injective_on_basis(self) -> bool:
        """Observed statistic: no two basis tableaux share a factor pair."""
        return self.distinct_images == self.decomposable - self.nonbasis_images


def verify_restriction_theorem(
    d1: int, d2: int, n1: int, n2: int, c: Linearization, k: int
) -> RestrictionReport:
    """Check the tableau restriction against the symbolic oracle, exhaustively.

    For every basis tableau of the ambient invariant space: substitute the
    block coordinate matrix and compare with the signed product of the
    combinatorial factors (zero when absent); verify the multiplicity
    bookkeeping (the attaching indices appear alpha resp. beta times with
    alpha + beta = k and side contents matching the split weights); and
    check the factor pairs cover the whole product basis.
    """
    d = d1 + d2
    n = n1 + n2
    if c.d != d or c.n != n:
        raise ValueError(f"linearization must live in Delta({d + 1}, {n})")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    scaled = [k * x for x in c.entries]
    if any(x.denominator != 1 for x in scaled):
        raise ValueError(f"k = {k} does not clear the denominators of {c.entries}")
    content = tuple(int(x) for x in scaled)

    c_prime, c_double = split_linearization(c, n1, d1)
    left_content = tuple(int(k * x) for x in c_prime.entries)
    right_content = tuple(int(k * x) for x in c_double.entries)
    beta = left_content[-1]
    alpha = right_content[-1]

    b = attach_block_matrix(d1, d2, n1, n2)
    a1, a2 = side_matrices(d1, n1, d2, n2)

    ambient_basis = enumerate_tableaux(d, k, content)
    left_basis = enumerate_tableaux(d1, k, left_content)
    right_basis = enumerate_tableaux(d2, k, right_content)

    failures: list[str] = []
    hits: set[tuple[tuple[Column, ...], tuple[Column, ...]]] = set()
    decomposable = 0
    zero_restrictions = 0
    nonbasis = 0

    if alpha + beta != k:
        failures.append(f"alpha + beta = {alpha + beta} differs from k = {k}")

    for t in ambient_basis:
        lhs = tableau_polynomial(t.columns, b)
        raw = _mu_columns(t, n1, n2, d1, d2)
        if raw is None:
            zero_restrictions += 1
            if not lhs.is_zero():
                failures.append(
                    f"tableau {t.columns} should restrict to zero but gives {lhs!r}"
                )
            continue
        decomposable += 1
        sign, left_cols, right_cols = raw
        rhs = sign * tableau_polynomial(left_cols, a1) * tableau_polynomial(right_cols, a2)
        if lhs != rhs:
            failures.append(
                f"tableau {t.columns}: restriction {lhs!r} differs from "
                f"signed product {rhs!r}"
            )
            continue
        counts_left = [0] * (n1 + 1)
        for col in left_cols:
            for v in col:
                counts_left[v - 1] += 1
        counts_right = [0] * (n2 + 1)
        for col in right_cols:
            for v in col:
                counts_right[v - 1] += 1
        if tuple(counts_left) != left_content or tuple(counts_right) != right_content:
            failures.append(
                f"tableau {t.columns}: factor contents {counts_left}, {counts_right} "
                f"differ from split weights {left_content}, {right_content}"
            )
            continue
        try:
            left_t = Tableau(d1, k, tuple(left_cols))
            right_t = Tableau(d2, k, tuple(right_cols))
        except ValueError:
            nonbasis += 1
            continue
        hits.add((left_t.columns, right_t.columns))

    wanted = {
        (u1.columns, u2.columns) for u1 in left_basis for u2 in right_basis
    }
    surjective = hits >= wanted

    return RestrictionReport(
        d1=d1,
        d2=d2,
        n1=n1,
        n2=n2,
        k=k,
        alpha=alpha,
        beta=beta,
        dim_ambient=len(ambient_basis),
        dim_left=len(left_basis),
        dim_right=len(right_basis),
        decomposable=decomposable,
        zero_restrictions=zero_restrictions,
        nonbasis_images=nonbasis,
        distinct_images=len(hits),
        surjective=surjective,
        failures=failures,
    )
