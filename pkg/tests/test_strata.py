from itertools import combinations, product

import pytest

from divfact.strata import (
    BoundaryCut,
    SetPartition4,
    enumerate_boundary_cuts,
    enumerate_fcurves,
    induce_four_weights,
)
from divfact.weights import WeightVector, psi_rule


def brute_force_cut_count(n):
    """Count subset/complement pairs by enumerating all subsets directly."""
    seen = set()
    points = range(1, n + 1)
    for size in range(2, n - 1):
        for sub in combinations(points, size):
            key = frozenset(sub)
            seen.add(min(key, frozenset(points) - key, key=sorted))
    return len(seen)


def brute_force_partition_count(n):
    """Count 4-block partitions by filtering all block assignments."""
    count = 0
    for labels in product(range(4), repeat=n):
        if len(set(labels)) != 4:
            continue
        # count each partition once: labels must appear in first-use order
        seen = []
        for lab in labels:
            if lab not in seen:
                seen.append(lab)
        if seen == sorted(seen):
            count += 1
    return count


def stirling4(n):
    """S(n, 4) via the standard recurrence, independent of any enumeration."""
    table = {(0, 0): 1}
    for m in range(1, n + 1):
        for k in range(0, 5):
            table[(m, k)] = k * table.get((m - 1, k), 0) + table.get((m - 1, k - 1), 0)
    return table[(n, 4)]


class TestBoundaryCuts:
    def test_counts_match_formula(self):
        for n in range(4, 11):
            assert len(enumerate_boundary_cuts(n)) == 2 ** (n - 1) - n - 1

    def test_counts_match_brute_force(self):
        for n in range(4, 9):
            assert len(enumerate_boundary_cuts(n)) == brute_force_cut_count(n)

    def test_n4(self):
        cuts = enumerate_boundary_cuts(4)
        assert sorted(sorted(c.members) for c in cuts) == [[1, 2], [1, 3], [1, 4]]

    def test_each_pair_once(self):
        cuts = enumerate_boundary_cuts(6)
        keys = {frozenset((c.members, c.complement)) for c in cuts}
        assert len(keys) == len(cuts)

    def test_canonical_side_contains_one(self):
        cut = BoundaryCut(5, frozenset({3, 4}))
        assert cut.members == frozenset({1, 2, 5})
        assert cut.complement == frozenset({3, 4})

    def test_size_bounds(self):
        with pytest.raises(ValueError):
            BoundaryCut(4, frozenset({2}))
        with pytest.raises(ValueError):
            BoundaryCut(4, frozenset({2, 3, 4}))


class TestFCurves:
    def test_n4_single_partition(self):
        parts = enumerate_fcurves(4)
        assert len(parts) == 1
        assert parts[0].blocks == tuple(frozenset({i}) for i in range(1, 5))

    def test_counts(self):
        assert len(enumerate_fcurves(5)) == 10
        assert len(enumerate_fcurves(6)) == 65

    def test_counts_match_brute_force(self):
        for n in range(4, 9):
            assert len(enumerate_fcurves(n)) == brute_force_partition_count(n)

    def test_counts_match_stirling(self):
        for n in range(4, 11):
            assert len(enumerate_fcurves(n)) == stirling4(n)

    def test_blocks_sorted_by_minimum(self):
        for p in enumerate_fcurves(6):
            mins = [min(b) for b in p.blocks]
            assert mins == sorted(mins)
            assert mins[0] == 1

    def test_block_order_is_normalized(self):
        a = SetPartition4(5, (frozenset({4, 5}), frozenset({2}), frozenset({1}), frozenset({3})))
        b = SetPartition4(5, (frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4, 5})))
        assert a == b

    def test_label(self):
        p = SetPartition4(6, (frozenset({5, 6}), frozenset({1, 2}), frozenset({3}), frozenset({4})))
        assert p.label() == "1,2/3/4/5,6"

    def test_invalid_partitions_rejected(self):
        with pytest.raises(ValueError):
            SetPartition4(5, (frozenset({1, 2}), frozenset({2, 3}), frozenset({4}), frozenset({5})))
        with pytest.raises(ValueError):
            SetPartition4(5, (frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4})))


class TestInduceFourWeights:
    def test_examples(self):
        w = WeightVector(2, (1, 1, 1, 1, 0))
        p1 = SetPartition4(5, (frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4, 5})))
        assert tuple(induce_four_weights(w, p1)) == (1, 1, 1, 1)
        p2 = SetPartition4(5, (frozenset({1, 2}), frozenset({3}), frozenset({4}), frozenset({5})))
        assert tuple(induce_four_weights(w, p2)) == (0, 1, 1, 0)
        w4 = WeightVector(4, (2, 1, 3, 3, 1, 2))
        p3 = SetPartition4(6, (frozenset({1, 2}), frozenset({3, 4}), frozenset({5}), frozenset({6})))
        assert tuple(induce_four_weights(w4, p3)) == (3, 2, 1, 2)

    def test_output_sum_divisible(self):
        w = WeightVector(3, (1, 2, 0, 1, 2, 0))
        for p in enumerate_fcurves(6):
            assert induce_four_weights(w, p).total() % 3 == 0

    def test_requires_divisible_sum(self):
        w = WeightVector(3, (1, 1, 0, 0))
        with pytest.raises(ValueError):
            induce_four_weights(w, enumerate_fcurves(4)[0])

    def test_block_permutation_gives_same_multiset(self):
        w = WeightVector(5, (1, 2, 3, 4, 2, 3))
        for p in enumerate_fcurves(6):
            induced = sorted(induce_four_weights(w, p))
            resorted = SetPartition4(6, tuple(reversed(p.blocks)))
            assert sorted(induce_four_weights(w, resorted)) == induced


def collapse_chain(w, partition, order):
    """Collapse the partition's blocks one at a time via the complement rule.

    Returns the final weight per block; any collapse order must agree with
    the direct block sums mod r.
    """
    entries = list(w.entries)
    owners = []
    for point in range(1, partition.n + 1):
        owners.append(next(j for j, b in enumerate(partition.blocks) if point in b))
    for target in order:
        positions = [i + 1 for i, owner in enumerate(owners) if owner == target]
        if len(positions) < 2:
            continue
        current = WeightVector(w.r, tuple(entries))
        collapsed = psi_rule(current, positions)
        keep = [i for i in range(len(entries)) if (i + 1) not in positions]
        entries = [entries[i] for i in keep] + [collapsed[-1]]
        owners = [owners[i] for i in keep] + [target]
    result = {}
    for value, owner in zip(entries, owners):
        result[owner] = (result.get(owner, 0) + value) % w.r
    return tuple(result[j] for j in range(4))


class TestRestrictionChains:
    def test_chains_agree_with_block_sums(self):
        # two distinct collapse orders against the direct block sums, n <= 7
        for r, entries in [
            (2, (1, 1, 1, 1, 0, 1, 1)),
            (3, (1, 2, 0, 2, 1, 0, 0)),
            (4, (2, 1, 3, 3, 1, 2)),
            (5, (1, 2, 3, 4, 0, 1, 4)),
        ]:
            w = WeightVector(r, entries)
            if w.total() % r != 0:
                continue
            for p in enumerate_fcurves(len(entries)):
                direct = tuple(induce_four_weights(w, p))
                assert collapse_chain(w, p, (0, 1, 2, 3)) == direct
                assert collapse_chain(w, p, (3, 2, 1, 0)) == direct
