"""Independent cross-checks for the arithmetic and the depth calculus.

Two oracles, deliberately sharing no code with the things they check:

  * below w^2 every ordinal is a pair (p, q) standing for w*p + q, and
    addition, comparison, and right multiplication by naturals have
    closed forms on pairs;
  * the depth rules have machine-checkable consequences (shape of the
    output, growth under embeddings, invariance under permutation and
    flattening of factor lists) that can be tested by brute enumeration
    of small terms.

Both suites stop at the first mismatch and report it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .groupterm import (
    Cardinality,
    DirectSum,
    FreeProduct,
    GroupTerm,
    MalformedTerm,
    RuleInapplicable,
    CentralWreathQuotient,
    ThreeGenEmbed,
    Wreath,
    attrs,
    children,
    depth,
)
from .ordinal import OMEGA, ZERO, Ordinal, OrdinalKind, classify_realizable
from .textio import print_ordinal, print_term

Pair = tuple[int, int]


def pair_add(a: Pair, b: Pair) -> Pair:
    """(w*p + q) + (w*r + s) on pair encodings: r > 0 wipes q out."""
    (p, q), (r, s) = a, b
    if r == 0:
        return (p, q + s)
    return (p + r, s)


def pair_compare(a: Pair, b: Pair) -> int:
    if a == b:
        return 0
    return -1 if a < b else 1  # lexicographic order matches the ordinal order


def pair_mul_nat(a: Pair, n: int) -> Pair:
    (p, q) = a
    if n == 0:
        return (0, 0)
    if p == 0:
        return (0, q * n)
    return (p * n, q)  # (w*p + q)*n folds all but the last q into w*p*n


def _pair_to_ordinal(a: Pair) -> Ordinal:
    """Structural lift of a pair; never calls the arithmetic under test."""
    p, q = a
    terms: list[tuple[Ordinal, int]] = []
    if p:
        terms.append((Ordinal.from_int(1), p))
    if q:
        terms.append((ZERO, q))
    return Ordinal(tuple(terms))


@dataclass(frozen=True)
class ArithmeticOracleReport:
    bound: int
    case_pairs: int
    mul_cases: int
    first_mismatch: str | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def exhaustive_compare_suite(bound: int, add_fn=None, compare_fn=None,
                             mul_fn=None) -> ArithmeticOracleReport:
    """Check add/compare/multiply-by-naturals against the pair oracle over
    every pair of pairs with components <= bound ((bound+1)^4 case pairs)."""
    if not isinstance(bound, int) or bound < 0 or bound > 64:
        raise ValueError("bound must be an integer in 0..64")
    from . import ordinal as _ord

    add_fn = add_fn or _ord.add
    compare_fn = compare_fn or (lambda x, y: _cmp_sign(_ord.compare(x, y)))
    mul_fn = mul_fn or _ord.multiply

    rng = range(bound + 1)
    pairs = [(p, q) for p in rng for q in rng]
    lifted: dict[Pair, Ordinal] = {}

    def lift(pq: Pair) -> Ordinal:
        got = lifted.get(pq)
        if got is None:
            got = lifted[pq] = _pair_to_ordinal(pq)
        return got

    case_pairs = 0
    for a in pairs:
        ca = lift(a)
        for b in pairs:
            case_pairs += 1
            cb = lift(b)
            want = lift(pair_add(a, b))
            got = add_fn(ca, cb)
            if got != want:
                return ArithmeticOracleReport(
                    bound, case_pairs, 0,
                    f"add mismatch at {a} + {b}: oracle {print_ordinal(want)}, "
                    f"got {print_ordinal(got)}")
            if compare_fn(ca, cb) != pair_compare(a, b):
                return ArithmeticOracleReport(
                    bound, case_pairs, 0,
                    f"compare mismatch at {a} vs {b}")

    mul_cases = 0
    for a in pairs:
        ca = lift(a)
        for n in rng:
            mul_cases += 1
            want = lift(pair_mul_nat(a, n))
            got = mul_fn(ca, Ordinal.from_int(n))
            if got != want:
                return ArithmeticOracleReport(
                    bound, case_pairs, mul_cases,
                    f"multiply mismatch at {a} * {n}: oracle "
                    f"{print_ordinal(want)}, got {print_ordinal(got)}")

    return ArithmeticOracleReport(bound, case_pairs, mul_cases)


def _cmp_sign(comparison) -> int:
    from .ordinal import Comparison

    if comparison is Comparison.LESS:
        return -1
    return 0 if comparison is Comparison.EQUAL else 1


# --------------------------------------------------------------------------
# term enumeration


@dataclass
class TermEnumerationReport:
    height: int
    atoms: tuple[str, ...]
    terms_checked: int = 0
    defined: int = 0
    undefined: int = 0
    inapplicable: int = 0
    violations: list[str] = field(default_factory=list)
    outcome_histogram: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return (f"height={self.height} terms={self.terms_checked} "
                f"defined={self.defined} undefined={self.undefined} "
                f"inapplicable={self.inapplicable} {status}")


_MAX_VIOLATIONS = 20

_DEFINED = "defined"
_UNDEF = "undefined"
_INAPPL = "inapplicable"


def _outcome(term: GroupTerm, depth_fn) -> tuple[str, Ordinal | None]:
    try:
        result = depth_fn(term)
    except RuleInapplicable:
        return _INAPPL, None
    value = result.value
    return (_DEFINED, value) if value is not None else (_UNDEF, None)


def term_enumeration_suite(height: int, atoms: tuple[GroupTerm, ...],
                           depth_fn=None) -> TermEnumerationReport:
    """Enumerate every term of the given height over the atoms (binary
    fp/ds/wr/E plus embed3) and check, per term:

      * shape: a defined depth is 0, 1, a limit, or a limit plus one;
      * size coherence: trivial terms have depth 0, finite ones 1,
        infinite ones at least w;
      * wreath products have limit depth;
      * monotonicity: parts embed, so a defined whole bounds every
        defined part, and an undefined part poisons the whole;
      * fp/ds are depth-invariant under factor permutation and (checked
        on atom triples) flattening.
    """
    if not isinstance(height, int) or height < 1 or height > 3:
        raise ValueError("height must be 1, 2, or 3")
    if len(atoms) > 6:
        raise ValueError("at most 6 atoms")
    for atom in atoms:
        if children(atom):
            raise ValueError("atoms must be leaf terms")

    depth_fn = depth_fn or (lambda t: depth(t)[0])
    report = TermEnumerationReport(height, tuple(print_term(a) for a in atoms))
    results: dict[GroupTerm, tuple[str, Ordinal | None]] = {}

    def note_violation(text: str) -> None:
        if len(report.violations) < _MAX_VIOLATIONS:
            report.violations.append(text)

    def check(term: GroupTerm) -> None:
        outcome, value = _outcome(term, depth_fn)
        results[term] = (outcome, value)
        report.terms_checked += 1
        if outcome == _DEFINED:
            report.defined += 1
            label = print_ordinal(value)
        elif outcome == _UNDEF:
            report.undefined += 1
            label = _UNDEF
        else:
            report.inapplicable += 1
            label = _INAPPL
        report.outcome_histogram[label] = report.outcome_histogram.get(label, 0) + 1

        if outcome == _DEFINED:
            if not classify_realizable(value):
                note_violation(f"{print_term(term)}: depth {label} has impossible shape")
            card = attrs(term).cardinality
            if card is Cardinality.TRIVIAL and value != ZERO:
                note_violation(f"{print_term(term)}: trivial group with depth {label}")
            elif card is Cardinality.FINITE_NONTRIVIAL and value != Ordinal.from_int(1):
                note_violation(f"{print_term(term)}: finite group with depth {label}")
            elif card is Cardinality.INFINITE and value < OMEGA:
                note_violation(f"{print_term(term)}: infinite group with depth {label}")
            if isinstance(term, Wreath) and value.kind() is not OrdinalKind.LIMIT:
                note_violation(f"{print_term(term)}: wreath depth {label} is not a limit")
        # monotonicity over embedded parts
        for part in _embedded_parts(term):
            part_outcome, part_value = results.get(part) or _outcome(part, depth_fn)
            if part_outcome == _UNDEF and outcome == _DEFINED:
                note_violation(f"{print_term(term)}: defined whole over undefined part "
                               f"{print_term(part)}")
            if part_outcome == _DEFINED and outcome == _DEFINED and value < part_value:
                note_violation(f"{print_term(term)}: depth below its part "
                               f"{print_term(part)}")

    def check_permutation(a: GroupTerm, b: GroupTerm) -> None:
        for build in (FreeProduct, DirectSum):
            try:
                left, right = build((a, b)), build((b, a))
            except MalformedTerm:
                return
            if results[left] != results[right]:
                note_violation(f"{print_term(left)}: depth changes under permutation")

    tiers: list[list[GroupTerm]] = [list(atoms)]
    for atom in atoms:
        check(atom)
    for _ in range(height - 1):
        prev = [t for tier in tiers for t in tier]
        fresh: list[GroupTerm] = []
        for a, b in itertools.product(prev, repeat=2):
            for build in (FreeProduct, DirectSum):
                try:
                    term = build((a, b))
                except MalformedTerm:
                    continue
                if term not in results:
                    check(term)
                    fresh.append(term)
            for build in (Wreath, CentralWreathQuotient):
                term = build(a, b)
                if term not in results:
                    check(term)
                    fresh.append(term)
        for a in prev:
            term = ThreeGenEmbed(a)
            if term not in results:
                check(term)
                fresh.append(term)
        for a, b in itertools.combinations(prev, 2):
            check_permutation(a, b)
        tiers.append(fresh)

    # flattening invariance on atom triples
    for a, b, c in itertools.product(atoms, repeat=3):
        for build in (FreeProduct, DirectSum):
            try:
                nested = build((a, build((b, c))))
                flat = build((a, b, c))
            except MalformedTerm:
                continue
            if _outcome(nested, depth_fn) != _outcome(flat, depth_fn):
                note_violation(f"{print_term(nested)}: depth changes under flattening")

    return report


def _embedded_parts(term: GroupTerm) -> tuple[GroupTerm, ...]:
    # the constructions where the parts are known subgroups of the whole
    if isinstance(term, (FreeProduct, DirectSum)):
        return term.factors
    if isinstance(term, Wreath):
        return (term.base, term.top)
    if isinstance(term, ThreeGenEmbed):
        return (term.inner,)
    return ()
