"""End-to-end acceptance gate.

Each check prints one PASS/FAIL line with its runtime against the stated
budget; the assertions make any regression fail the suite as well.
"""

from __future__ import annotations

import itertools
import time

from conftest import random_ordinal, random_term
from rfdepth import (
    A5,
    MFP,
    OMEGA,
    ONE,
    CentralWreathQuotient,
    FiniteCyclic,
    GammaFP,
    Lambda,
    LambdaBar,
    Ordinal,
    OrdinalKind,
    Trivial,
    Wreath,
    Z,
    analyze,
    classify_realizable,
    depth,
    exhaustive_compare_suite,
    parse_ordinal,
    parse_term,
    print_ordinal,
    print_term,
    synthesize,
    term_enumeration_suite,
    validate_certificate,
)

w = OMEGA


def report(capsys, index: int, label: str, ok: bool,
           elapsed: float, budget: float) -> None:
    timely = elapsed < budget
    status = "PASS" if ok and timely else "FAIL"
    with capsys.disabled():
        print(f"[{status}] criterion {index}: {label} "
              f"({elapsed:.2f}s, budget {budget:g}s)")
    assert ok, f"criterion {index} failed: {label}"
    assert timely, f"criterion {index} took {elapsed:.2f}s (budget {budget:g}s)"


def small_cnf(exponent_cap: int, coefficient_cap: int):
    """Every CNF whose exponents are <= exponent_cap naturals and whose
    coefficients are <= coefficient_cap (0 meaning the term is absent)."""
    exponents = [Ordinal.from_int(k) for k in range(exponent_cap, -1, -1)]
    for combo in itertools.product(range(coefficient_cap + 1),
                                   repeat=exponent_cap + 1):
        yield Ordinal(tuple(
            (e, c) for e, c in zip(exponents, combo) if c
        ))


def test_criterion_1_classification(capsys):
    def definitional(a: Ordinal) -> bool:
        kind = analyze(a)
        if kind is OrdinalKind.ZERO or a == ONE:
            return True
        if kind is OrdinalKind.LIMIT:
            return True
        return analyze(a.predecessor()) is OrdinalKind.LIMIT

    start = time.perf_counter()
    checked = 0
    ok = True
    for a in small_cnf(4, 4):
        ok = ok and bool(classify_realizable(a)) == definitional(a)
        checked += 1
    elapsed = time.perf_counter() - start
    ok = ok and checked == 5 ** 5
    report(capsys, 1, f"classification agrees on {checked} ordinals",
           ok, elapsed, 1.0)


def test_criterion_2_presented_families(capsys):
    start = time.perf_counter()
    ok = True
    for n in range(1, 11):
        ok = ok and depth(GammaFP(n))[0].value == w * n
        ok = ok and depth(MFP(n, 3))[0].value == w * n + 1
    elapsed = time.perf_counter() - start
    report(capsys, 2, "finitely presented families hit w*n and w*n + 1",
           ok, elapsed, 1.0)


def test_criterion_3_wreath_tower(capsys):
    start = time.perf_counter()
    ok = True
    tower = Z()
    for n in range(1, 9):
        ok = ok and depth(tower)[0].value == w * n
        tower = Wreath(A5(), tower)
    elapsed = time.perf_counter() - start
    report(capsys, 3, "iterated wreath tower climbs w*n for n = 1..8",
           ok, elapsed, 1.0)


def test_criterion_4_successor_ladder(capsys):
    start = time.perf_counter()
    ok = True
    rung = Z()
    for n in range(1, 7):
        rung = CentralWreathQuotient(LambdaBar(3), rung)
        ok = ok and depth(rung)[0].value == w + w * n + 1
    elapsed = time.perf_counter() - start
    report(capsys, 4, "central-quotient ladder yields w + w*n + 1 for n = 1..6",
           ok, elapsed, 1.0)


def test_criterion_5_synthesis_roundtrip(capsys):
    start = time.perf_counter()
    ok = True
    targets = 0
    for a in small_cnf(3, 3):
        if not classify_realizable(a):
            continue
        witness = synthesize(a, fg_required=True)
        result, cert = depth(witness)
        ok = ok and result.value == a
        ok = ok and validate_certificate(witness, cert) is True
        targets += 1
    elapsed = time.perf_counter() - start
    ok = ok and targets == 128
    report(capsys, 5, f"synthesis round trip on {targets} realizable targets",
           ok, elapsed, 10.0)


def test_criterion_6_arithmetic_oracle(capsys):
    start = time.perf_counter()
    outcome = exhaustive_compare_suite(25)
    elapsed = time.perf_counter() - start
    ok = outcome.ok and outcome.case_pairs == 456_976
    report(capsys, 6,
           f"arithmetic oracle, {outcome.case_pairs} case pairs, zero mismatches",
           ok, elapsed, 5.0)


def test_criterion_7_term_enumeration(capsys):
    atoms = (Trivial(), FiniteCyclic(2), A5(), Z(), Lambda(), LambdaBar(3))
    start = time.perf_counter()
    outcome = term_enumeration_suite(3, atoms)
    elapsed = time.perf_counter() - start
    ok = outcome.ok and outcome.terms_checked > 0
    report(capsys, 7,
           f"height-3 enumeration, {outcome.terms_checked} terms, "
           f"{len(outcome.violations)} violations",
           ok, elapsed, 60.0)


def test_criterion_8_grammar_roundtrips(capsys, rng):
    start = time.perf_counter()
    ok = True
    for _ in range(10_000):
        a = random_ordinal(rng)
        ok = ok and parse_ordinal(print_ordinal(a)) == a
    for _ in range(1_000):
        t = random_term(rng)
        ok = ok and parse_term(print_term(t)) == t
    elapsed = time.perf_counter() - start
    report(capsys, 8, "10000 ordinal and 1000 term print/parse round trips",
           ok, elapsed, 10.0)
