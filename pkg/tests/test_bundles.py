from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from divfact.bundles import (
    BundleFamily,
    check_git_factorization,
    deg4_cb,
    deg4_cyc,
    deg4_git,
    degree_vector,
    fcurve_degree,
    verify_main_theorem,
)
from divfact.strata import SetPartition4, enumerate_fcurves


class TestBaseFormulas:
    def test_cb_examples(self):
        assert deg4_cb(2, (1, 1, 1, 1)) == 1
        assert deg4_cb(3, (1, 1, 1, 3)) == 0
        assert deg4_cb(3, (0, 0, 1, 2)) == 0

    def test_git_examples(self):
        assert deg4_git(2, (1, 1, 1, 1)) == 1
        assert deg4_git(4, (1, 2, 2, 3)) == 1
        assert deg4_git(4, (0, 1, 3, 4)) == 0

    def test_cyc_examples(self):
        assert deg4_cyc(2, (1, 1, 1, 1)) == 1
        assert deg4_cyc(5, (2, 2, 3, 3)) == 2
        assert deg4_cyc(2, (0, 0, 0, 0)) == 0

    def test_cb_branch_agreement_at_equality(self):
        # c2 + c3 == c1 + c4 makes both branches equal
        for r in range(2, 7):
            for c in product(range(r + 1), repeat=4):
                ordered = sorted(c)
                if sum(ordered) == 2 * r and ordered[1] + ordered[2] == ordered[0] + ordered[3]:
                    assert ordered[0] == r - ordered[3]

    def test_input_sorted_internally(self):
        assert deg4_cb(4, (3, 1, 2, 2)) == deg4_cb(4, (1, 2, 2, 3))

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            deg4_cb(3, (0, 0, 4, 2))
        with pytest.raises(ValueError):
            deg4_cb(3, (1, 1, 1))

    @given(st.integers(2, 8), st.data())
    def test_three_formulas_coincide(self, r, data):
        c = data.draw(st.tuples(*[st.integers(0, r)] * 4))
        assert deg4_cb(r, c) == deg4_git(r, c) == deg4_cyc(r, c)

    @given(st.integers(2, 8), st.data())
    def test_permutation_invariance(self, r, data):
        c = data.draw(st.tuples(*[st.integers(0, r)] * 4))
        base = deg4_cb(r, c)
        for perm in permutations(c):
            assert deg4_cb(r, perm) == base

    def test_degree_bounds(self):
        for r in range(2, 7):
            for c in product(range(r + 1), repeat=4):
                assert 0 <= deg4_cb(r, c) <= r // 2


class TestFCurveDegree:
    def test_examples(self):
        p1 = SetPartition4(5, (frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4, 5})))
        assert fcurve_degree(BundleFamily.CB, 2, (1, 1, 1, 1, 0), p1) == 1
        p2 = SetPartition4(5, (frozenset({1, 2}), frozenset({3}), frozenset({4}), frozenset({5})))
        assert fcurve_degree(BundleFamily.GIT, 2, (1, 1, 1, 1, 0), p2) == 0

    def test_indivisible_sum_is_trivial(self):
        p = enumerate_fcurves(4)[0]
        for fam in BundleFamily:
            assert fcurve_degree(fam, 3, (1, 1, 1, 1), p) == 0


class TestDegreeVector:
    def test_single_fcurve(self):
        vec = degree_vector(BundleFamily.CB, 2, (1, 1, 1, 1))
        assert list(vec.degrees.values()) == [1]

    def test_zero_weights(self):
        vec = degree_vector(BundleFamily.GIT, 3, (0, 0, 0, 0, 0))
        assert all(d == 0 for d in vec.degrees.values())

    def test_cyc_six_points(self):
        # r=2, all weights 1: degree 1 exactly on partitions with all odd
        # block sums, which are those of block sizes (3,1,1,1)
        vec = degree_vector(BundleFamily.CYC, 2, (1, 1, 1, 1, 1, 1))
        for p, deg in vec.items():
            sizes = sorted(len(b) for b in p.blocks)
            assert deg == (1 if sizes == [1, 1, 1, 3] else 0)

    def test_point_relabeling_symmetry(self):
        # permuting marked points permutes the degree vector accordingly
        c = (1, 2, 0, 3, 2)
        r = 4
        relabel = {1: 3, 2: 5, 3: 1, 4: 2, 5: 4}
        c_moved = [0] * 5
        for old, new in relabel.items():
            c_moved[new - 1] = c[old - 1]
        vec = degree_vector(BundleFamily.CB, r, c)
        moved = degree_vector(BundleFamily.CB, r, c_moved)
        for p, deg in vec.items():
            image = SetPartition4(
                5, tuple(frozenset(relabel[i] for i in b) for b in p.blocks)
            )
            assert moved.degrees[image] == deg

    def test_equality_semantics(self):
        a = degree_vector(BundleFamily.CB, 2, (1, 1, 1, 1, 0, 0))
        b = degree_vector(BundleFamily.GIT, 2, (1, 1, 1, 1, 0, 0))
        assert a == b


class TestVerifyMainTheorem:
    def test_counts_small(self):
        report = verify_main_theorem(2, 4)
        assert report.vectors_checked == 8
        assert report.fcurves_per_vector == 1
        assert report.ok

        report = verify_main_theorem(2, 5)
        assert report.vectors_checked == 16
        assert report.fcurves_per_vector == 10
        assert report.ok

        report = verify_main_theorem(5, 4)
        assert report.vectors_checked == 125
        assert report.ok

    def test_parallel_matches_serial(self):
        serial = verify_main_theorem(3, 5, jobs=1)
        parallel = verify_main_theorem(3, 5, jobs=2)
        assert serial.vectors_checked == parallel.vectors_checked
        assert serial.mismatches == parallel.mismatches == []

    def test_domain_guards(self):
        with pytest.raises(ValueError):
            verify_main_theorem(1, 5)
        with pytest.raises(ValueError):
            verify_main_theorem(2, 3)


class TestGitFactorization:
    def test_examples(self):
        assert check_git_factorization(2, (1, 1, 1, 1), [1, 2])
        assert check_git_factorization(4, (2, 1, 3, 3, 1, 2), [1, 2, 3])

    def test_indivisible_sum_trivial_on_both_sides(self):
        assert check_git_factorization(3, (1, 1, 1, 1), [1, 2])

    def test_general_cut(self):
        assert check_git_factorization(4, (2, 1, 3, 3, 1, 2), [2, 5, 6])

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 4), st.data())
    def test_random_cuts_consistent(self, r, data):
        n = data.draw(st.integers(5, 7))
        c = data.draw(st.tuples(*[st.integers(0, r - 1)] * n))
        size = data.draw(st.integers(2, n - 2))
        members = data.draw(st.permutations(range(1, n + 1)))[:size]
        assert check_git_factorization(r, c, members)
