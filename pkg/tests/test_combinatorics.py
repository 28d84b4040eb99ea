"""Index-set arithmetic, the counting screen, and the majorization screen."""

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tpratio.combinatorics import (
    Arc,
    ExponentVector,
    IndexSet,
    MinorSpec,
    RatioExpr,
    all_index_sets,
    all_minor_specs,
    arcs_up_to_half,
    base_set,
    check_condition_m,
    check_st0,
    conjugate,
    cyclic_shift,
    cyclic_shift_ratio,
    m_vector,
    majorization_defect,
    majorizes,
    minor_to_plucker,
    plucker_to_minor,
    reversal,
    reversal_ratio,
)


def iset(n, *elems):
    return IndexSet.of(n, elems)


def ratio(n, num, den):
    return RatioExpr.of(
        n, [IndexSet.of(n, s) for s in num], [IndexSet.of(n, s) for s in den]
    )


UNBOUNDED_3OVER3 = ratio(
    4,
    [(1, 2, 3, 8), (2, 3, 4, 5), (4, 6, 7, 8)],
    [(1, 4, 6, 8), (2, 3, 4, 8), (2, 3, 5, 7)],
)


class TestIndexSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            IndexSet(2, (1, 1))
        with pytest.raises(ValueError):
            IndexSet(2, (1, 5))
        with pytest.raises(ValueError):
            IndexSet(2, (1, 2, 3))

    def test_ordering_and_hash(self):
        a, b = iset(2, 1, 3), iset(2, 1, 3)
        assert a == b and hash(a) == hash(b)
        assert iset(2, 1, 2) < iset(2, 1, 3) < iset(2, 2, 3)

    def test_base_set(self):
        assert base_set(3).elements == (4, 5, 6)


class TestMinorBridge:
    def test_minor_to_plucker_examples(self):
        assert minor_to_plucker(MinorSpec.of(2, [1], [1])) == iset(2, 1, 3)
        assert minor_to_plucker(MinorSpec.of(3, [1, 2, 3], [1, 2, 3])) == iset(3, 1, 2, 3)
        assert minor_to_plucker(MinorSpec.of(2, [], [])) == iset(2, 3, 4)

    def test_plucker_to_minor_examples(self):
        assert plucker_to_minor(iset(2, 1, 3)) == MinorSpec.of(2, [1], [1])
        assert plucker_to_minor(iset(2, 3, 4)) == MinorSpec.of(2, [], [])
        spec = plucker_to_minor(iset(4, 1, 2, 3, 8))
        assert spec == MinorSpec.of(4, [1, 2, 3], [2, 3, 4])
        assert minor_to_plucker(spec) == iset(4, 1, 2, 3, 8)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_round_trip_exhaustive(self, n):
        for spec in all_minor_specs(n):
            assert plucker_to_minor(minor_to_plucker(spec)) == spec
        for alpha in all_index_sets(n):
            assert minor_to_plucker(plucker_to_minor(alpha)) == alpha


class TestShiftAndReversal:
    def test_examples(self):
        assert cyclic_shift(iset(2, 1, 4)) == iset(2, 1, 2)
        assert cyclic_shift(iset(2, 3, 4)) == iset(2, 1, 4)
        assert reversal(iset(2, 1, 3)) == iset(2, 2, 4)
        assert reversal(iset(3, 1, 2, 3)) == iset(3, 4, 5, 6)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_bijections_exhaustive(self, n):
        sets = all_index_sets(n)
        assert sorted(cyclic_shift(a) for a in sets) == sets
        assert sorted(reversal(a) for a in sets) == sets
        for a in sets:
            out = a
            for _ in range(2 * n):
                out = cyclic_shift(out)
            assert out == a
            assert reversal(reversal(a)) == a


class TestSt0:
    def test_holds(self):
        assert check_st0(ratio(2, [(1, 2), (3, 4)], [(1, 3), (2, 4)])).holds
        assert check_st0(UNBOUNDED_3OVER3).holds

    def test_fails_with_witness(self):
        verdict = check_st0(ratio(2, [(1, 2), (1, 2)], [(1, 2), (3, 4)]))
        assert not verdict.holds
        assert verdict.witness == 1
        assert (verdict.numerator_count, verdict.denominator_count) == (2, 1)


class TestMajorization:
    def test_examples(self):
        assert majorizes((2, 0), (1, 1))
        assert not majorizes((1, 1), (2, 0))
        assert majorizes((2, 1), (2, 1))

    def test_defect_flags(self):
        assert majorization_defect((1, 1), (2, 0)) == "prefix"
        assert majorization_defect((2, 1), (1, 1)) == "total"
        assert majorization_defect((3,), (1, 1, 1)) is None

    def test_conjugate_examples(self):
        assert conjugate((2, 1)) == (2, 1)
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate((0, 0)) == ()

    @given(st.lists(st.integers(min_value=0, max_value=6), max_size=6))
    def test_conjugate_involution(self, parts):
        x = tuple(sorted(parts, reverse=True))
        assert conjugate(conjugate(x)) == tuple(p for p in x if p)

    @given(
        st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=5),
        st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=5),
    )
    def test_conjugation_duality(self, xs, ys):
        x = tuple(sorted(xs, reverse=True))
        y = tuple(sorted(ys, reverse=True))
        assert majorizes(x, y) == majorizes(conjugate(y), conjugate(x))


class TestArcs:
    def test_members_wrap(self):
        assert Arc(2, 4, 2).members == (1, 4)
        assert Arc(2, 2, 2).members == (2, 3)

    @pytest.mark.parametrize("n, count", [(2, 8), (3, 18), (4, 32)])
    def test_counts(self, n, count):
        arcs = arcs_up_to_half(n)
        assert len(arcs) == count == 2 * n * n

    def test_complements_are_arcs(self):
        for arc in arcs_up_to_half(3):
            comp = arc.complement()
            assert comp.length >= 3
            assert set(comp.members) == set(range(1, 7)) - set(arc.members)

    def test_m_vector_examples(self):
        sets = [iset(4, 1, 2, 3, 8), iset(4, 2, 3, 4, 5), iset(4, 4, 6, 7, 8)]
        assert m_vector(sets, Arc(4, 2, 2)) == (2, 2, 0)
        assert m_vector(sets, Arc(4, 1, 1)) == (1, 0, 0)
        assert m_vector([iset(2, 1, 2)], Arc(2, 1, 2)) == (2,)


class TestConditionM:
    def test_known_unbounded_ratio_passes_screen(self):
        assert check_condition_m(UNBOUNDED_3OVER3).holds

    def test_failure_witness_is_first(self):
        verdict = check_condition_m(ratio(2, [(1, 3), (2, 4)], [(1, 4), (2, 3)]))
        assert not verdict.holds
        assert (verdict.witness.start, verdict.witness.length) == (2, 2)
        assert verdict.m_numerator == (1, 1)
        assert verdict.m_denominator == (2, 0)

    def test_basic_ratios_pass(self):
        from tpratio.factorizer import basic_ratios_all

        for b in basic_ratios_all(3):
            assert check_condition_m(b.expr()).holds

    def test_condition_m_implies_st0(self):
        rng = random.Random(7)
        checked = 0
        while checked < 60:
            n = rng.choice([2, 3])
            sets = [
                IndexSet.of(n, rng.sample(range(1, 2 * n + 1), n)) for _ in range(4)
            ]
            r = RatioExpr.of(n, sets[:2], sets[2:])
            if check_condition_m(r).holds:
                assert check_st0(r).holds
            checked += 1

    def test_complement_transfer(self):
        # majorization on an arc forces it on the complement when totals agree
        rng = random.Random(3)
        for _ in range(60):
            n = 3
            sets = [
                IndexSet.of(n, rng.sample(range(1, 2 * n + 1), n)) for _ in range(4)
            ]
            num, den = sets[:2], sets[2:]
            for arc in arcs_up_to_half(n):
                mn, md = m_vector(num, arc), m_vector(den, arc)
                if sum(mn) != sum(md) or not majorizes(mn, md):
                    continue
                comp = arc.complement()
                assert majorizes(m_vector(num, comp), m_vector(den, comp))

    def test_invariance_under_shift_and_reversal_exhaustive_n3(self):
        # verdicts computed from precomputed intersection tables for speed
        sets = all_index_sets(3)
        arcs = arcs_up_to_half(3)
        table = {
            (s, arc): (s.mask & arc.mask).bit_count() for s in sets for arc in arcs
        }
        pairs = list(itertools.combinations_with_replacement(sets, 2))

        def verdict(num, den):
            for arc in arcs:
                a = sorted((table[num[0], arc], table[num[1], arc]), reverse=True)
                b = sorted((table[den[0], arc], table[den[1], arc]), reverse=True)
                if a[0] < b[0] or a[0] + a[1] != b[0] + b[1]:
                    return False
            return True

        for num in pairs:
            for den in pairs:
                r = RatioExpr.of(3, num, den)
                v = verdict(num, den)
                assert check_condition_m(cyclic_shift_ratio(r)).holds == v
                assert check_condition_m(reversal_ratio(r)).holds == v


class TestRatioExpr:
    def test_padding(self):
        r = RatioExpr.of(2, [iset(2, 1, 2)], [])
        assert r.denominator == (base_set(2),)
        r2 = RatioExpr.of(2, [iset(2, 1, 2), iset(2, 1, 3)], [iset(2, 1, 4)])
        assert r2.denominator == (iset(2, 1, 4), base_set(2))

    def test_exponent_vector_cancellation(self):
        r = ratio(2, [(1, 2), (1, 2)], [(1, 2), (3, 4)])
        vec = ExponentVector.of_ratio(r)
        assert vec.as_dict() == {iset(2, 1, 2): 1, iset(2, 3, 4): -1}
        trivial = ratio(2, [(1, 2), (3, 4)], [(3, 4), (1, 2)])
        assert ExponentVector.of_ratio(trivial).is_zero

    def test_vector_arithmetic(self):
        r = ratio(2, [(1, 4), (2, 3)], [(1, 3), (2, 4)])
        vec = ExponentVector.of_ratio(r)
        assert (vec - vec).is_zero
        assert (vec + (-vec)).is_zero
