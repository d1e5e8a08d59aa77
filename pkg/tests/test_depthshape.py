"""Fundamental sequences, core signatures, and realizability checks."""

from __future__ import annotations

import pytest
from hypothesis import given

from conftest import limit_ordinals, ordinals
from rfdepth import (
    OMEGA,
    ZERO,
    CoreClass,
    FundSeq,
    InvalidDepthShape,
    NotLimit,
    Ordinal,
    OrdinalKind,
    analyze,
    classify_realizable,
    depth_to_core_signature,
    div_omega,
)

w = OMEGA


class TestFundSeq:
    def test_rejects_non_limit(self):
        with pytest.raises(NotLimit):
            FundSeq(w + 1)
        with pytest.raises(NotLimit):
            FundSeq(ZERO)

    def test_omega(self):
        seq = FundSeq(w)
        assert seq.elements(4) == [Ordinal.from_int(n) for n in (1, 2, 3, 4)]

    def test_omega_times_two(self):
        seq = FundSeq(w * 2)
        assert seq.elements(3) == [w + 1, w + 2, w + 3]

    def test_omega_squared(self):
        seq = FundSeq(w * w)
        assert seq.elements(3) == [w, w * 2, w * 3]

    def test_omega_to_omega(self):
        seq = FundSeq(Ordinal.omega_power(w))
        assert seq.element(2) == Ordinal.omega_power(Ordinal.from_int(2))
        assert seq.element(3) == Ordinal.omega_power(Ordinal.from_int(3))

    def test_composite_target(self):
        # w^2*2 + w*3 peels its least term
        target = w * w * 2 + w * 3
        seq = FundSeq(target)
        assert seq.element(2) == w * w * 2 + w * 2 + 2

    def test_element_index_positive(self):
        with pytest.raises(ValueError):
            FundSeq(w).element(0)

    @given(limit_ordinals())
    def test_strictly_increasing_below_target(self, target):
        seq = FundSeq(target)
        elems = seq.elements(6)
        for earlier, later in zip(elems, elems[1:]):
            assert earlier < later
        assert all(e < target for e in elems)

    def test_cofinal_in_omega_squared(self):
        # every ordinal below w^2 is eventually dominated
        seq = FundSeq(w * w)
        for p in range(9):
            for q in range(9):
                below = w * p + q
                assert any(seq.element(n) > below for n in range(1, 11))

    def test_supremum_brute_force_below_omega_squared(self):
        # below w^2 the sequence w*(k+1) -> sup must exceed w*k + m for all m
        seq = FundSeq(w * 4)
        for m in range(1, 100):
            below = w * 3 + m
            assert any(seq.element(n) > below for n in range(1, m + 2))

    @given(limit_ordinals())
    def test_least_exponent_two_gives_limit_elements(self, target):
        if target.least_exponent() >= Ordinal.from_int(2):
            seq = FundSeq(target)
            for n in range(1, 5):
                assert analyze(seq.element(n)) is OrdinalKind.LIMIT


class TestDivOmega:
    def test_examples(self):
        assert div_omega(w) == Ordinal.from_int(1)
        assert div_omega(w * 5) == Ordinal.from_int(5)
        assert div_omega(w * w) == w
        assert div_omega(w * w * 3 + w * 2) == w * 3 + 2

    def test_rejects_non_limit(self):
        with pytest.raises(NotLimit):
            div_omega(w + 1)

    @given(limit_ordinals())
    def test_left_multiplication_roundtrip(self, a):
        assert w * div_omega(a) == a


class TestCoreSignature:
    def test_fiat_zero(self):
        sig = depth_to_core_signature(ZERO)
        assert sig.core_index == ZERO
        assert sig.core_class is CoreClass.TRIVIAL

    def test_fiat_one(self):
        sig = depth_to_core_signature(Ordinal.from_int(1))
        assert sig.core_index == ZERO
        assert sig.core_class is CoreClass.FINITE_NONTRIVIAL

    def test_limit_case(self):
        sig = depth_to_core_signature(w * 3)
        assert sig.core_index == Ordinal.from_int(3)
        assert sig.core_class is CoreClass.TRIVIAL

    def test_successor_of_limit(self):
        sig = depth_to_core_signature(w * w + 1)
        assert sig.core_index == w
        assert sig.core_class is CoreClass.FINITE_NONTRIVIAL

    def test_rejects_deep_successors(self):
        for bad in (Ordinal.from_int(2), Ordinal.from_int(7), w + 2, w * w + 5):
            with pytest.raises(InvalidDepthShape):
                depth_to_core_signature(bad)

    @given(ordinals())
    def test_roundtrip_when_defined(self, a):
        try:
            sig = depth_to_core_signature(a)
        except InvalidDepthShape:
            assert not classify_realizable(a)
        else:
            assert sig.depth() == a
            assert classify_realizable(a)


class TestClassifyRealizable:
    def test_accepts_depth_shaped(self):
        for good in (ZERO, Ordinal.from_int(1), w, w * 9, w * w, w * w + 1):
            verdict = classify_realizable(good)
            assert verdict and verdict.realizable
            assert verdict.reason is None

    def test_finite_above_one(self):
        verdict = classify_realizable(Ordinal.from_int(2))
        assert not verdict
        assert verdict.reason == "finite > 1"

    def test_double_successor(self):
        verdict = classify_realizable(w + 2)
        assert not verdict
        assert verdict.reason == "successor of a successor ordinal"

    @given(ordinals())
    def test_matches_natural_part_rule(self, a):
        assert bool(classify_realizable(a)) == (a.natural_part() <= 1)
