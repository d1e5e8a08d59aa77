"""Shared strategies and deterministic generators for the test suite."""

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rfdepth import (
    A5,
    OMEGA,
    CentralWreathQuotient,
    FiniteCyclic,
    FreeGroup,
    GammaFP,
    Lambda,
    LambdaBar,
    MFP,
    NoFiniteQuotients,
    Ordinal,
    Sp,
    ThreeGenEmbed,
    Trivial,
    Wreath,
    Z,
    DirectSumFamily,
    FreeProductFamily,
    SuccessorWitness,
    direct_sum,
    free_product,
    fundamental_sequence,
)

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def merge_parts(parts) -> Ordinal:
    """Arbitrary (exponent, coefficient) pairs -> a canonical ordinal."""
    seen = {}
    for exponent, coefficient in parts:
        if exponent not in seen:
            seen[exponent] = coefficient
    ordered = sorted(seen.items(), key=lambda kv: kv[0], reverse=True)
    return Ordinal(tuple(ordered))


finite_ordinals = st.integers(0, 6).map(Ordinal.from_int)


@st.composite
def mid_ordinals(draw):
    # hereditary depth 1: finite exponents, a few terms
    parts = draw(st.lists(st.tuples(finite_ordinals, st.integers(1, 9)), max_size=3))
    return merge_parts(parts)


exponents = st.one_of(finite_ordinals, mid_ordinals())


@st.composite
def ordinals(draw):
    # hereditary depth 2, up to 4 terms, coefficients up to 50
    parts = draw(st.lists(st.tuples(exponents, st.integers(1, 50)), max_size=4))
    return merge_parts(parts)


def limit_ordinals():
    return ordinals().map(lambda a: OMEGA * (a + 1))


_ATOMS = [
    Trivial(), FiniteCyclic(2), FiniteCyclic(7), A5(), Z(), FreeGroup(2),
    Sp(2), Sp(3), Lambda(), LambdaBar(3), LambdaBar(5), LambdaBar(3, 4),
    GammaFP(1), GammaFP(4), MFP(1, 3), MFP(3, 5), NoFiniteQuotients(),
]


@st.composite
def group_terms(draw):
    families = st.builds(
        lambda kind, a: kind(fundamental_sequence(a)),
        st.sampled_from([FreeProductFamily, DirectSumFamily, SuccessorWitness]),
        limit_ordinals(),
    )
    leaf = st.one_of(st.sampled_from(_ATOMS), families)

    def extend(kids):
        pair = st.tuples(kids, kids)
        return st.one_of(
            st.lists(kids, min_size=2, max_size=3).map(lambda fs: free_product(*fs)),
            st.lists(kids, min_size=2, max_size=3).map(lambda fs: direct_sum(*fs)),
            pair.map(lambda ab: Wreath(*ab)),
            pair.map(lambda ab: CentralWreathQuotient(*ab)),
            kids.map(ThreeGenEmbed),
        )

    return draw(st.recursive(leaf, extend, max_leaves=6))


# -- seeded generators for high-volume fuzzing -------------------------------


def random_ordinal(rng: random.Random, level: int = 2) -> Ordinal:
    count = rng.randrange(0, 5)
    parts = []
    for _ in range(count):
        if level == 0:
            exponent = Ordinal.from_int(rng.randrange(0, 7))
        else:
            exponent = (Ordinal.from_int(rng.randrange(0, 7))
                        if rng.random() < 0.5 else random_ordinal(rng, level - 1))
        parts.append((exponent, rng.randint(1, 50)))
    return merge_parts(parts)


def random_limit(rng: random.Random) -> Ordinal:
    return OMEGA * (random_ordinal(rng) + 1)


def random_term(rng: random.Random, budget: int = 6):
    if budget <= 1:
        pick = rng.randrange(0, len(_ATOMS) + 3)
        if pick < len(_ATOMS):
            return _ATOMS[pick]
        kind = (FreeProductFamily, DirectSumFamily, SuccessorWitness)[pick - len(_ATOMS)]
        return kind(fundamental_sequence(random_limit(rng)))
    kind = rng.randrange(0, 5)
    if kind in (0, 1):
        count = rng.randint(2, 3)
        parts = [random_term(rng, budget // count) for _ in range(count)]
        build = free_product if kind == 0 else direct_sum
        return build(*parts)
    if kind in (2, 3):
        a = random_term(rng, budget // 2)
        b = random_term(rng, budget // 2)
        return Wreath(a, b) if kind == 2 else CentralWreathQuotient(a, b)
    return ThreeGenEmbed(random_term(rng, budget - 1))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xD1CE)
