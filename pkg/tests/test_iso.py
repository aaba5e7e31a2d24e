"""Tests for isomorphism testing and automorphism groups of structures."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from symdesign.design import IncidenceStructure, complement, develop, induced_block_action
from symdesign.geometry import build_affine_design, build_projective_design
from symdesign.iso import are_isomorphic, automorphism_group
from symdesign.perm import Perm, PermGroup, parse_generator_file


def fano():
    return develop([Perm.from_cycles([(0, 1, 2, 3, 4, 5, 6)], 7)], (0, 1, 3))


def d64_pair():
    degree, gens = parse_generator_file(
        open("src/symdesign/data/d64_generators.txt").read())
    b1 = [x - 1 for x in (9, 11, 13, 15, 17, 20, 22, 23, 25, 26, 31, 32, 33,
                          35, 38, 40, 41, 42, 43, 44, 49, 50, 53, 54, 57, 58,
                          61, 62)]
    b2 = [x - 1 for x in (10, 12, 14, 16, 18, 19, 21, 24, 27, 28, 29, 30, 34,
                          36, 37, 39, 45, 46, 47, 48, 51, 52, 55, 56, 59, 60,
                          63, 64)]
    return develop(gens, b1), develop(gens, b2), PermGroup(gens, degree)


def relabel(s: IncidenceStructure, p: Perm) -> IncidenceStructure:
    return IncidenceStructure(
        s.v, sorted(tuple(sorted(p[x] for x in b)) for b in s.blocks))


def assert_witness(s1: IncidenceStructure, s2: IncidenceStructure, w: Perm):
    mapped = sorted(tuple(sorted(w[x] for x in b)) for b in s1.blocks)
    assert mapped == list(s2.blocks)


class TestAutomorphismGroups:
    def test_fano(self):
        a = automorphism_group(fano())
        assert a.order() == 168

    def test_fano_matches_brute_force(self):
        s = fano()
        brute = oracles.isomorphisms(7, list(s.blocks), list(s.blocks))
        a = automorphism_group(s)
        assert a.order() == len(brute)
        assert all(a.contains(Perm(p)) for p in brute)

    def test_generators_are_automorphisms(self):
        s = fano()
        for g in automorphism_group(s).generators:
            induced_block_action(s, g)  # raises if not block-preserving

    def test_affine_planes(self):
        ag = build_affine_design(3, 2, 2)
        assert automorphism_group(ag.structure).order() == 1344

    def test_known_subgroup_is_kept(self):
        ag = build_affine_design(2, 3, 1)
        a = automorphism_group(ag.structure, known=ag.group)
        assert all(a.contains(g) for g in ag.group.generators)
        assert a.order() % ag.group.order() == 0

    def test_complement_has_same_group(self):
        s = fano()
        a1 = automorphism_group(s)
        a2 = automorphism_group(complement(s))
        assert a1.order() == a2.order()
        assert all(a2.contains(g) for g in a1.generators)

    def test_trivial_group(self):
        # an asymmetric structure: no nontrivial degree-preserving map survives
        s = IncidenceStructure(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 1, 2)])
        assert automorphism_group(s).order() == len(
            oracles.isomorphisms(5, list(s.blocks), list(s.blocks))) == 1

    def test_complete_design_gives_symmetric_group(self):
        import itertools
        s = IncidenceStructure(6, list(itertools.combinations(range(6), 3)))
        assert automorphism_group(s).order() == 720

    def test_degree_cap(self):
        s = IncidenceStructure(101, [tuple(range(101))])
        with pytest.raises(ValueError, match="100"):
            automorphism_group(s)

    def test_d64_order_and_containment(self):
        d1, _, g = d64_pair()
        a = automorphism_group(d1, known=g)
        assert a.order() == 43008
        cold = automorphism_group(d1)
        assert cold.order() == 43008
        assert all(cold.contains(x) for x in g.generators)


class TestIsomorphism:
    def test_reflexive(self):
        s = fano()
        w = are_isomorphic(s, s)
        assert w is not None
        assert_witness(s, s, w)

    def test_relabeled_fano(self):
        s = fano()
        rng = random.Random(11)
        for _ in range(5):
            img = list(range(7))
            rng.shuffle(img)
            s2 = relabel(s, Perm(img))
            w = are_isomorphic(s, s2)
            assert w is not None
            assert_witness(s, s2, w)

    def test_symmetric_and_composition(self):
        s = fano()
        s2 = relabel(s, Perm((3, 0, 6, 2, 5, 1, 4)))
        s3 = relabel(s2, Perm((1, 2, 0, 5, 6, 3, 4)))
        w12 = are_isomorphic(s, s2)
        w21 = are_isomorphic(s2, s)
        w23 = are_isomorphic(s2, s3)
        assert w12 is not None and w21 is not None and w23 is not None
        assert_witness(s2, s, w21)
        assert_witness(s, s3, w12 * w23)

    def test_parameter_mismatch(self):
        s = fano()
        bigger = IncidenceStructure(8, [b for b in s.blocks])
        assert are_isomorphic(s, bigger) is None
        assert are_isomorphic(s, complement(s)) is None

    def test_same_parameters_non_isomorphic(self):
        # both are 2-(7,3,2): one with repeated blocks, one without
        s = fano()
        other = relabel(s, Perm((0, 1, 2, 4, 5, 6, 3)))
        doubled = IncidenceStructure(7, sorted(s.blocks + s.blocks))
        union = IncidenceStructure(7, sorted(s.blocks + other.blocks))
        assert sorted(union.block_multiset().values()) == [1] * 14
        assert are_isomorphic(doubled, union) is None
        assert oracles.first_isomorphism(
            7, list(doubled.blocks), list(union.blocks)) is None

    def test_matches_brute_force_on_random_structures(self):
        rng = random.Random(23)
        for trial in range(20):
            v = rng.randint(3, 7)
            nblocks = rng.randint(1, 6)
            blocks = []
            for _ in range(nblocks):
                size = rng.randint(1, v)
                blocks.append(tuple(sorted(rng.sample(range(v), size))))
            s1 = IncidenceStructure(v, sorted(blocks))
            if trial % 2:
                img = list(range(v))
                rng.shuffle(img)
                s2 = relabel(s1, Perm(img))
            else:
                other = [tuple(sorted(rng.sample(range(v), len(b))))
                         for b in blocks]
                s2 = IncidenceStructure(v, sorted(other))
            got = are_isomorphic(s1, s2)
            want = oracles.first_isomorphism(v, list(s1.blocks),
                                             list(s2.blocks))
            assert (got is None) == (want is None)
            if got is not None:
                assert_witness(s1, s2, got)

    def test_affine_planes_built_twice(self):
        a = build_affine_design(3, 2, 2).structure
        b = relabel(a, Perm((5, 2, 7, 0, 3, 6, 1, 4)))
        w = are_isomorphic(a, b)
        assert w is not None
        assert_witness(a, b, w)

    def test_d64_designs_not_isomorphic(self):
        d1, d2, _ = d64_pair()
        assert are_isomorphic(d1, d2) is None


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_random_relabeling_always_found(data):
    v = data.draw(st.integers(min_value=3, max_value=8))
    nblocks = data.draw(st.integers(min_value=1, max_value=7))
    blocks = [
        tuple(sorted(data.draw(
            st.sets(st.integers(0, v - 1), min_size=1, max_size=v))))
        for _ in range(nblocks)
    ]
    s1 = IncidenceStructure(v, sorted(blocks))
    img = data.draw(st.permutations(list(range(v))))
    s2 = relabel(s1, Perm(tuple(img)))
    w = are_isomorphic(s1, s2)
    assert w is not None
    assert_witness(s1, s2, w)
