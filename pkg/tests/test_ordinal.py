"""Arithmetic on Cantor normal forms, pinned against independent oracles."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from conftest import ordinals
from trioracle import OutOfRange, tri_add, tri_mul
from rfdepth import (
    OMEGA,
    ONE,
    ZERO,
    Comparison,
    Ordinal,
    OrdinalKind,
    absorbs,
    add,
    analyze,
    compare,
    multiply,
)
from rfdepth.oracle import pair_add, pair_compare

w = OMEGA


def nat(n: int) -> Ordinal:
    return Ordinal.from_int(n)


def from_pair(p: int, q: int) -> Ordinal:
    return w * p + q


def from_triple(t: tuple[int, int, int]) -> Ordinal:
    a, b, c = t
    return w * w * a + w * b + c


class TestCompare:
    def test_zero_equal(self):
        assert compare(ZERO, ZERO) is Comparison.EQUAL

    def test_omega_beats_any_natural(self):
        assert compare(w, nat(1000)) is Comparison.GREATER

    def test_pair_oracle_example(self):
        # (3, 2) vs (3, 1) under the pair encoding
        assert pair_compare((3, 2), (3, 1)) == 1
        assert compare(from_pair(3, 2), from_pair(3, 1)) is Comparison.GREATER

    def test_exhaustive_against_pairs(self):
        rng = range(13)
        for p, q, r, s in itertools.product(rng, repeat=4):
            got = compare(from_pair(p, q), from_pair(r, s))
            want = pair_compare((p, q), (r, s))
            assert {-1: Comparison.LESS, 0: Comparison.EQUAL,
                    1: Comparison.GREATER}[want] is got


class TestAdd:
    def test_one_plus_omega_absorbed(self):
        assert add(ONE, w) == w

    def test_omega_plus_omega_squared_absorbed(self):
        assert add(w, w * w) == w * w

    def test_pair_oracle_example(self):
        assert pair_add((3, 2), (5, 1)) == (8, 1)
        assert add(from_pair(3, 2), from_pair(5, 1)) == from_pair(8, 1)

    def test_exhaustive_against_triples(self):
        small = range(4)
        triples = [(a, b, c) for a in small for b in small for c in small]
        for x in triples:
            for y in triples:
                want = tri_add(x, y)
                assert add(from_triple(x), from_triple(y)) == from_triple(want)

    @given(ordinals(), ordinals(), ordinals())
    def test_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(ordinals(), ordinals(), ordinals())
    def test_strictly_monotone_right(self, a, b, c):
        if b < c:
            assert a + b < a + c

    def test_left_subtraction_witnesses_order(self):
        # a < b iff some positive c has a + c == b; exhaustive below w^2
        rng = range(7)
        values = [from_pair(p, q) for p in rng for q in rng]
        for a in values:
            for b in values:
                witnesses = [c for c in values if not c.is_zero and a + c == b]
                assert bool(witnesses) == (a < b)


class TestMultiply:
    def test_omega_times_three(self):
        assert multiply(w, nat(3)) == w * 3

    def test_triple_oracle_left_natural(self):
        assert tri_mul((0, 0, 2), (0, 1, 0)) == (0, 1, 0)
        assert multiply(nat(2), w) == w

    def test_triple_oracle_omega_coefficient(self):
        assert tri_mul((0, 2, 0), (0, 1, 0)) == (1, 0, 0)
        assert multiply(w * 2, w) == w * w

    def test_exhaustive_against_triples(self):
        small = range(4)
        triples = [(a, b, c) for a in small for b in small for c in small]
        for x in triples:
            for y in triples:
                try:
                    want = tri_mul(x, y)
                except OutOfRange:
                    continue  # product reaches w^3, outside the oracle's range
                assert multiply(from_triple(x), from_triple(y)) == from_triple(want)

    @given(ordinals(), ordinals(), ordinals())
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(ordinals(), ordinals(), ordinals())
    def test_left_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c


class TestAnalyze:
    def test_zero(self):
        assert analyze(ZERO) is OrdinalKind.ZERO

    def test_successor_with_predecessor(self):
        a = w + 1
        assert analyze(a) is OrdinalKind.SUCCESSOR
        assert a.predecessor() == w

    def test_limit(self):
        assert analyze(w * 2) is OrdinalKind.LIMIT

    @given(ordinals())
    def test_trichotomy(self, a):
        kind = analyze(a)
        assert kind in (OrdinalKind.ZERO, OrdinalKind.SUCCESSOR, OrdinalKind.LIMIT)
        if kind is OrdinalKind.SUCCESSOR:
            assert a.predecessor() + 1 == a
        else:
            with pytest.raises(ValueError):
                a.predecessor()


class TestAbsorbs:
    def test_omega_into_omega_squared(self):
        assert absorbs(w, w * w)

    def test_omega_not_into_omega_times_five(self):
        # pair oracle: (1, 0) + (5, 0) == (6, 0)
        assert pair_add((1, 0), (5, 0)) == (6, 0)
        assert not absorbs(w, w * 5)

    @given(ordinals(), ordinals())
    def test_equivalent_to_omega_multiple_bound(self, a, b):
        if not b.is_zero:
            assert absorbs(b, a) == (a >= b * w)


class TestCanonicity:
    @given(ordinals(), ordinals())
    def test_add_output_canonical(self, a, b):
        result = a + b
        Ordinal(result.terms)  # revalidates the invariants

    @given(ordinals(), ordinals())
    def test_multiply_output_canonical(self, a, b):
        result = a * b
        Ordinal(result.terms)

    def test_rejects_noncanonical(self):
        with pytest.raises(ValueError):
            Ordinal(((ZERO, 1), (ONE, 1)))  # increasing exponents
        with pytest.raises(ValueError):
            Ordinal(((ONE, 0),))  # zero coefficient

    @given(ordinals())
    def test_equality_is_structural(self, a):
        assert Ordinal(a.terms) == a
