"""Difference-set verification, development, and regular-subgroup search."""

import random
from pathlib import Path

import pytest

from symdesign.design import DesignError, IncidenceStructure, develop, \
    induced_block_action, verify_design
from symdesign.diffset import BudgetExhausted, RegularAction, \
    develop_difference_set, find_regular_subgroups, is_difference_set
from symdesign.iso import automorphism_group
from symdesign.perm import Perm, PermGroup, parse_generator_file

DATA = Path(__file__).resolve().parent.parent / "src" / "symdesign" / "data"

B1 = [9, 11, 13, 15, 17, 20, 22, 23, 25, 26, 31, 32, 33, 35, 38, 40, 41, 42,
      43, 44, 49, 50, 53, 54, 57, 58, 61, 62]


def translation_group() -> PermGroup:
    gens = [Perm(tuple(x ^ (1 << i) for x in range(64))) for i in range(6)]
    return PermGroup(gens, 64)


def quadric_zero_set() -> list[int]:
    # x1*x2 + x3*x4 + x5^2 + x5*x6 + x6^2 over F_2, bit i = coordinate i+1
    pts = []
    for x in range(64):
        b = [(x >> i) & 1 for i in range(6)]
        if ((b[0] & b[1]) ^ (b[2] & b[3]) ^ b[4] ^ (b[4] & b[5]) ^ b[5]) == 0:
            pts.append(x)
    return pts


@pytest.fixture(scope="module")
def translations() -> RegularAction:
    return RegularAction.from_group(translation_group())


class TestRegularAction:
    def test_from_group_bijection(self, translations):
        assert len(translations.element_of) == 64
        for point, g in translations.element_of.items():
            assert g[0] == point

    def test_rejects_nonregular(self):
        s4 = PermGroup([Perm((1, 0, 2, 3)), Perm((1, 2, 3, 0))], 4)
        with pytest.raises(ValueError):
            RegularAction.from_group(s4)


class TestIsDifferenceSet:
    def test_quadric_set_has_lambda_12(self, translations):
        d = quadric_zero_set()
        assert len(d) == 28 and 0 in d
        ok, report = is_difference_set(translations, d, 12)
        assert ok and report == []

    def test_quadric_matches_xor_count(self):
        # translations compose by xor, so the quotient counts are
        # independently the multiset of pairwise xors
        d = quadric_zero_set()
        for c in range(1, 64):
            count = sum(1 for p in d for q in d if p != q and p ^ q == c)
            assert count == 12

    def test_whole_group_gives_k_everywhere(self, translations):
        ok, report = is_difference_set(translations, range(64), 64)
        assert ok and report == []

    def test_random_subset_rejected_with_witness(self, translations):
        d = random.Random(7).sample(range(64), 28)
        ok, report = is_difference_set(translations, d, 12)
        assert not ok and report
        witness, count = report[0]
        c = witness[0]  # the translation amount
        assert count == sum(1 for p in d for q in d if p != q and p ^ q == c)
        assert count != 12

    def test_points_outside_action_rejected(self, translations):
        with pytest.raises(ValueError):
            is_difference_set(translations, {0, 70}, 1)


class TestDevelopment:
    def test_quadric_development_is_symmetric_design(self, translations):
        dev = develop_difference_set(translations, quadric_zero_set())
        assert verify_design(dev) == (64, 64, 28, 28, 12)

    def test_development_invariant_under_translation(self, translations):
        d = quadric_zero_set()
        base = develop_difference_set(translations, d)
        for g in translations.group.generators:
            shifted = develop_difference_set(translations, g.apply_to_set(d))
            assert base.block_multiset() == shifted.block_multiset()

    def test_group_acts_on_development(self, translations):
        dev = develop_difference_set(translations, quadric_zero_set())
        for g in translations.group.generators:
            induced_block_action(dev, g)

    def test_empty_subset_rejected(self, translations):
        with pytest.raises(ValueError):
            develop_difference_set(translations, ())

    def test_singleton_development_is_not_a_design(self, translations):
        dev = develop_difference_set(translations, {0})
        assert dev.v == 64 and len(dev.blocks) == 64
        with pytest.raises(DesignError):
            verify_design(dev)


class TestFindRegularSubgroups:
    def test_regular_group_finds_itself(self):
        g = translation_group()
        actions = find_regular_subgroups(g, limit=2)
        assert len(actions) == 1
        assert set(actions[0].group.iter_elements()) == set(g.iter_elements())

    def test_s3_yields_the_rotation_subgroup(self):
        s3 = PermGroup([Perm((1, 0, 2)), Perm((1, 2, 0))], 3)
        actions = find_regular_subgroups(s3, limit=5)
        assert len(actions) == 1
        assert actions[0].group.order() == 3
        assert all(p.is_identity() or len(p.cycles()) == 1
                   for p in actions[0].group.iter_elements())

    def test_s4_has_four_regular_subgroups(self):
        s4 = PermGroup([Perm((1, 0, 2, 3)), Perm((1, 2, 3, 0))], 4)
        actions = find_regular_subgroups(s4, limit=10)
        # three cyclic groups on a 4-cycle and the fixed-point-free fours group
        assert len(actions) == 4
        orders = sorted(max(p.order() for p in a.group.iter_elements())
                        for a in actions)
        assert orders.count(4) == 3 and orders.count(2) == 1

    def test_projective_line_group_has_none(self):
        # order-6 subgroups all contain an involution, and involutions fix
        # two points of the projective line over F_5
        cycle = Perm((1, 2, 3, 4, 0, 5))
        inversion = Perm.from_cycles([(0, 5), (1, 4)], 6)
        psl = PermGroup([cycle, inversion], 6)
        assert psl.order() == 60
        assert find_regular_subgroups(psl, limit=1) == []

    def test_budget_zero_raises(self):
        with pytest.raises(BudgetExhausted):
            find_regular_subgroups(translation_group(), limit=1, budget=0)

    def test_intransitive_rejected(self):
        g = PermGroup([Perm((1, 0, 2, 3))], 4)
        with pytest.raises(ValueError):
            find_regular_subgroups(g)


@pytest.fixture(scope="module")
def d64() -> IncidenceStructure:
    degree, gens = parse_generator_file(
        (DATA / "d64_generators.txt").read_text())
    return develop(gens, [p - 1 for p in B1])


class TestMainDesign:
    def test_regular_subgroup_recovers_the_design(self, d64):
        aut = automorphism_group(d64)
        actions = find_regular_subgroups(aut, limit=1)
        assert len(actions) == 1
        action = actions[0]
        assert action.group.order() == 64
        # a regular 2-subgroup: every element order is a power of two
        assert all(p.order() & (p.order() - 1) == 0
                   for p in action.group.iter_elements())
        d = [p - 1 for p in B1]
        ok, report = is_difference_set(action, d, 12)
        assert ok and report == []
        dev = develop_difference_set(action, d)
        assert dev.block_multiset() == d64.block_multiset()
