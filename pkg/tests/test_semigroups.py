"""Tests for numerical semigroups, value sets, and the genus enumeration.

The enumeration is cross-checked against a brute-force oracle that tries
every candidate gap subset directly, and the named invariants are frozen
from hand computations.
"""

from itertools import combinations

import pytest

from scrollcurves.errors import (
    BoundExceeded,
    EmptyGenerators,
    GcdNotOne,
    NotAValidKappaStar,
)
from scrollcurves.semigroups import (
    BlockDecomposition,
    ValueSet,
    block_decomposition,
    enumerate_genus,
    eta_local,
    is_symmetric,
    kappa_sets,
    make_semigroup,
    mu_local,
    recover_from_kappa_star,
    semigroup_from_gaps,
    stable_minkowski_power,
    stabilizer,
)


def brute_force_genus(genus: int) -> set[tuple[int, ...]]:
    """All gap sets of the given genus, by exhaustive subset search.

    Any semigroup of genus g has its Frobenius number at most 2g - 1, so
    searching subsets of [1, 2g - 1] is exhaustive.
    """
    if genus == 0:
        return {()}
    found = set()
    window = range(1, 2 * genus)
    for gaps in combinations(window, genus):
        gap_set = set(gaps)
        top = gaps[-1]
        members = [x for x in range(1, top + 1) if x not in gap_set]
        ok = True
        for i, a in enumerate(members):
            for b in members[i:]:
                if a + b > top:
                    break
                if a + b in gap_set:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(gaps)
    return found


class TestValueSet:
    def test_canonical_form_absorbs_into_tail(self):
        v = ValueSet((3, 5, 6, 7, 9), 8)
        assert v.finite_part == (3,)
        assert v.tail_start == 5
        assert v == ValueSet((3,), 5)

    def test_membership_and_min(self):
        v = ValueSet((-2, 1), 4)
        assert -2 in v and 1 in v and 4 in v and 100 in v
        assert -3 not in v and 0 not in v and 3 not in v
        assert v.min_element == -2

    def test_shift(self):
        assert ValueSet((0, 2), 5).shift(-3) == ValueSet((-3, -1), 2)

    def test_union(self):
        a = ValueSet((0, 4), 7)
        b = ValueSet((2,), 5)
        assert a.union(b) == ValueSet((0, 2, 4), 5)

    def test_minkowski_golden(self):
        k = ValueSet((0, 3, 4, 5), 7)
        square = k.minkowski(k)
        assert square == ValueSet((0,), 3)

    def test_minkowski_tail_from_finite_plus_tail(self):
        a = ValueSet((2,), 10)
        b = ValueSet((0,), 4)
        out = a.minkowski(b)
        assert out.tail_start == 6
        assert out.finite_part == (2,)

    def test_elements_up_to(self):
        v = ValueSet((1, 4), 6)
        assert v.elements_up_to(8) == [1, 4, 6, 7, 8]
        assert v.elements_up_to(0) == []

    def test_count_difference(self):
        t = ValueSet((0,), 3)
        k = ValueSet((0, 3, 4, 5), 7)
        assert t.count_difference(k) == 1
        assert k.count_difference(t) == 0
        assert t.count_difference(t) == 0


class TestConstruction:
    def test_basic_invariants(self):
        s = make_semigroup((4, 5, 7))
        assert s.gaps == (1, 2, 3, 6)
        assert s.alpha == 4
        assert s.gamma == 6
        assert s.beta == 7
        assert s.delta == 4
        assert s.elements_below_conductor == (0, 4, 5, 7)
        assert 12 in s and 6 not in s and -1 not in s

    def test_whole_numbers(self):
        s = make_semigroup((1,))
        assert s.gaps == ()
        assert s.gamma == -1 and s.beta == 0 and s.delta == 0
        assert s.alpha == 1
        assert s.minimal_generators == (1,)

    def test_generator_validation(self):
        with pytest.raises(EmptyGenerators):
            make_semigroup(())
        with pytest.raises(GcdNotOne):
            make_semigroup((4, 6))
        with pytest.raises(ValueError):
            make_semigroup((0, 5))
        with pytest.raises(ValueError):
            make_semigroup((-3, 5))

    def test_minimal_generators(self):
        assert make_semigroup((2, 3, 4)).minimal_generators == (2, 3)
        assert make_semigroup((4, 5, 6, 7, 8, 9)).minimal_generators == (4, 5, 6, 7)
        assert make_semigroup((5, 6, 7, 8, 9)).minimal_generators == (5, 6, 7, 8, 9)
        assert make_semigroup((6, 10, 15)).minimal_generators == (6, 10, 15)

    def test_equality_is_by_gap_set(self):
        assert make_semigroup((2, 3)) == make_semigroup((2, 3, 4))
        assert make_semigroup((2, 3)) != make_semigroup((2, 5))
        assert hash(make_semigroup((2, 3))) == hash(make_semigroup((2, 3, 4)))

    def test_from_gaps_roundtrip(self):
        s = semigroup_from_gaps((1, 2, 3, 6))
        assert s == make_semigroup((4, 5, 7))
        assert s.generators == (4, 5, 7)

    def test_from_gaps_rejects_nonclosed(self):
        with pytest.raises(ValueError):
            semigroup_from_gaps((2, 3))
        with pytest.raises(ValueError):
            semigroup_from_gaps((1, 2, 6))

    def test_value_set(self):
        s = make_semigroup((4, 5, 7))
        assert s.value_set() == ValueSet((0, 4, 5), 7)


class TestKappa:
    def test_known_kappa_stars(self):
        assert kappa_sets(make_semigroup((5, 6, 7, 8, 9))).k_star == (0, 1, 2, 3)
        assert kappa_sets(make_semigroup((4, 5, 7))).k_star == (0, 3, 4, 5)
        assert kappa_sets(make_semigroup((1,))).k_star == ()

    def test_kappa_of_whole_numbers_is_everything(self):
        assert kappa_sets(make_semigroup((1,))).k == ValueSet((), 0)

    def test_kappa_size_and_extremes(self):
        for genus in range(7):
            for s in enumerate_genus(genus):
                ks = kappa_sets(s)
                assert len(ks.k_star) == s.delta
                if s.delta > 0:
                    assert ks.k_star[0] == 0
                    assert ks.k_star[-1] == s.gamma - 1
                for a in ks.s_star:
                    assert a in ks.k

    def test_symmetry_matches_eta(self):
        assert is_symmetric(make_semigroup((2, 3)))
        assert is_symmetric(make_semigroup((3, 4)))
        assert not is_symmetric(make_semigroup((4, 5, 7)))
        for genus in range(7):
            for s in enumerate_genus(genus):
                assert is_symmetric(s) == (eta_local(s) == 0)
                assert is_symmetric(s) == (2 * s.delta == s.beta)

    def test_eta_examples(self):
        assert eta_local(make_semigroup((4, 5, 7))) == 1
        assert eta_local(make_semigroup((3, 7, 8))) == 2
        assert eta_local(make_semigroup((5, 6, 7, 8, 9))) == 3


class TestMu:
    def test_blowup_chain_golden(self):
        s = make_semigroup((4, 5, 7))
        data = mu_local(s)
        assert data.stable_power == ValueSet((0,), 3)
        assert data.stabilizer == ValueSet((0,), 3)
        assert data.mu == 1

    def test_square_fills_everything(self):
        s = make_semigroup((3, 7, 8))
        k = kappa_sets(s).k
        assert k == ValueSet((0, 1, 3, 4), 6)
        assert stable_minkowski_power(k) == ValueSet((), 0)
        assert mu_local(s).mu == 2

    def test_mu_frozen_examples(self):
        cases = {
            (4, 5, 7): 1,
            (3, 7, 8): 2,
            (4, 6, 7, 9): 1,
            (5, 6, 8, 9): 1,
            (4, 5, 11): 3,
            (3, 8, 10): 2,
            (4, 6, 11, 13): 1,
            (5, 8, 9, 11, 12): 2,
            (5, 6, 9, 13): 3,
            (5, 6, 7): 4,
            (4, 9, 10, 11): 2,
            (3, 10, 11): 3,
        }
        for gens, expected in cases.items():
            assert mu_local(make_semigroup(gens)).mu == expected, gens

    def test_mu_vanishes_exactly_for_symmetric(self):
        for genus in range(7):
            for s in enumerate_genus(genus):
                mu = mu_local(s).mu
                assert (mu == 0) == is_symmetric(s)

    def test_semigroup_sits_inside_stabilizer(self):
        for genus in range(6):
            for s in enumerate_genus(genus):
                t = mu_local(s).stabilizer
                for a in s.elements_below_conductor:
                    assert a in t

    def test_eta_one_forces_mu_one(self):
        for genus in range(8):
            for s in enumerate_genus(genus):
                if eta_local(s) == 1:
                    assert mu_local(s).mu == 1

    def test_stabilizer_of_everything(self):
        assert stabilizer(ValueSet((), 0)) == ValueSet((), 0)


class TestRecovery:
    def test_roundtrip_over_sweep(self):
        for genus in range(7):
            for s in enumerate_genus(genus):
                assert recover_from_kappa_star(kappa_sets(s).k_star) == s

    def test_named_example(self):
        assert recover_from_kappa_star((0, 3, 4, 5)) == make_semigroup((4, 5, 7))

    def test_empty_recovers_whole_numbers(self):
        assert recover_from_kappa_star(()) == make_semigroup((1,))

    def test_rejects_sets_without_zero(self):
        with pytest.raises(NotAValidKappaStar):
            recover_from_kappa_star((1, 2))

    def test_rejects_nonrealizable_sets(self):
        with pytest.raises(NotAValidKappaStar):
            recover_from_kappa_star((0, 1, 5))


class TestBlocks:
    def test_examples(self):
        assert block_decomposition(make_semigroup((4, 5, 7))) == BlockDecomposition(
            ((4, 5),), 1
        )
        assert block_decomposition(make_semigroup((5, 6, 8))) == BlockDecomposition(
            ((5, 6), (8,)), 2
        )
        assert block_decomposition(make_semigroup((5, 6, 7, 8, 9))).b == 0
        assert block_decomposition(make_semigroup((1,))).b == 0


class TestEnumeration:
    def test_counts(self):
        expected = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]
        for genus, count in enumerate(expected):
            assert len(enumerate_genus(genus)) == count, genus

    def test_genus_three_listing(self):
        gaps = [s.gaps for s in enumerate_genus(3)]
        assert gaps == [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 5)]

    def test_matches_brute_force(self):
        for genus in range(8):
            ours = {s.gaps for s in enumerate_genus(genus)}
            assert ours == brute_force_genus(genus), genus

    def test_levels_are_sorted_and_distinct(self):
        for genus in range(9):
            gaps = [s.gaps for s in enumerate_genus(genus)]
            assert gaps == sorted(gaps)
            assert len(set(gaps)) == len(gaps)

    def test_bound_guard(self):
        with pytest.raises(BoundExceeded):
            enumerate_genus(17)
        with pytest.raises(BoundExceeded):
            enumerate_genus(5, bound=4)
        with pytest.raises(ValueError):
            enumerate_genus(-1)
