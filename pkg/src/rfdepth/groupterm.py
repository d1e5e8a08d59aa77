"""A term algebra of group constructions and the certified depth calculus on it.

Terms name groups up to the data the calculus needs: a handful of atoms
(finite groups, infinite residually finite lattices, the central
extensions with known iterated cores, one group with no finite quotients)
and the constructions that move depth in a controlled way (free products,
direct sums, restricted wreath products, central quotients of wreath
products, a three-generator embedding, and countable families indexed by
a fundamental sequence).

Each constructor has exactly one depth rule:

  R1  Trivial                      -> 0
  R2  finite non-trivial atom      -> 1
  R3  infinite residually finite   -> w
  R4  FreeProduct                  -> sup s of factor depths; s limit -> s, s successor -> s + w
  R5  DirectSum                    -> sup s; s + w only if infinitely many factors attain a successor s
  R6  Wreath(base perfect, top infinite) -> depth(top) + depth(base) (+ w if that is a successor)
  R7  CentralWreathQuotient        -> depth(top) + w*gamma + 1, gamma the base's central core index
  R8  Lambda -> w*2, LambdaBar -> w+1, GammaFP(n) -> w*n, MFP(n,d) -> w*n+1,
      NoFiniteQuotients -> Undefined
  R12 ThreeGenEmbed                -> same depth, for limit depths >= w^2
  R13 FreeProductFamily/DirectSumFamily -> the sequence's target
  R14 SuccessorWitness             -> target + 1, for targets with least exponent >= 2

`depth` returns the result together with a replayable certificate;
`validate_certificate` re-runs every rule against the recorded children
and spot-checks family members by synthesizing witnesses for sampled
sequence elements.

Undefined is a result (no depth exists: something with no finite
quotients sits inside), while RuleInapplicable is an error (the calculus
has no rule certifying the term, e.g. a wreath product over a
non-perfect base such as the lamplighter).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    FundSeq,
    Ordinal,
    OrdinalKind,
    classify_realizable,
    div_omega,
)

OMEGA_SQUARED = OMEGA * OMEGA


class MalformedTerm(ValueError):
    """Structural invariant of a constructor violated."""


class RuleInapplicable(Exception):
    """No depth rule certifies this term (which is not a claim that no depth exists)."""

    def __init__(self, term: "GroupTerm", missing: str):
        super().__init__(f"{type(term).__name__}: {missing}")
        self.term = term
        self.missing = missing


class ShapeMismatch(ValueError):
    """Certificate tree does not mirror the term it is checked against."""


class Cardinality(Enum):
    TRIVIAL = "trivial"
    FINITE_NONTRIVIAL = "finite_nontrivial"
    INFINITE = "infinite"


# --------------------------------------------------------------------------
# terms


class GroupTerm:
    __slots__ = ()


def _check_nat(value: object, low: int, what: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < low:
        raise MalformedTerm(f"{what} must be an integer >= {low}")


@dataclass(frozen=True, slots=True)
class Trivial(GroupTerm):
    pass


@dataclass(frozen=True, slots=True)
class FiniteCyclic(GroupTerm):
    order: int

    def __post_init__(self) -> None:
        _check_nat(self.order, 2, "cyclic order")


@dataclass(frozen=True, slots=True)
class A5(GroupTerm):
    """The alternating group on five letters: the stock finite perfect group."""


@dataclass(frozen=True, slots=True)
class Z(GroupTerm):
    pass


@dataclass(frozen=True, slots=True)
class FreeGroup(GroupTerm):
    rank: int

    def __post_init__(self) -> None:
        _check_nat(self.rank, 2, "free rank")


@dataclass(frozen=True, slots=True)
class Sp(GroupTerm):
    """The integral symplectic group of genus g (perfect once g >= 3)."""

    genus: int

    def __post_init__(self) -> None:
        _check_nat(self.genus, 2, "genus")


@dataclass(frozen=True, slots=True)
class Lambda(GroupTerm):
    """Central extension of the integral symplectic group whose iterated
    residual core is infinite cyclic, then trivial: depth w*2."""


@dataclass(frozen=True, slots=True)
class LambdaBar(GroupTerm):
    """Perfect central extension with residual core Z/d: depth w + 1."""

    d: int = 3
    genus: int = 3

    def __post_init__(self) -> None:
        _check_nat(self.d, 3, "core order d")
        if self.d % 2 == 0:
            raise MalformedTerm("core order d must be odd")
        _check_nat(self.genus, 3, "genus")


@dataclass(frozen=True, slots=True)
class GammaFP(GroupTerm):
    """Finitely presented group of depth exactly w*n."""

    n: int

    def __post_init__(self) -> None:
        _check_nat(self.n, 1, "depth index n")


@dataclass(frozen=True, slots=True)
class MFP(GroupTerm):
    """Finitely presented group of depth w*n + 1 with centre Z/d."""

    n: int
    d: int = 3

    def __post_init__(self) -> None:
        _check_nat(self.n, 1, "depth index n")
        _check_nat(self.d, 3, "centre order d")
        if self.d % 2 == 0:
            raise MalformedTerm("centre order d must be odd")


@dataclass(frozen=True, slots=True)
class NoFiniteQuotients(GroupTerm):
    """A finitely generated infinite group with no non-trivial finite quotients."""


def _check_factors(factors: object) -> None:
    if not isinstance(factors, tuple):
        raise MalformedTerm("factors must be a tuple")
    if len(factors) < 2:
        raise MalformedTerm("need at least two factors")
    for f in factors:
        if not isinstance(f, GroupTerm):
            raise MalformedTerm("factors must be group terms")
        if isinstance(f, Trivial):
            raise MalformedTerm("trivial factors are stripped by normalization")


@dataclass(frozen=True, slots=True)
class FreeProduct(GroupTerm):
    factors: tuple[GroupTerm, ...]

    def __post_init__(self) -> None:
        _check_factors(self.factors)


@dataclass(frozen=True, slots=True)
class DirectSum(GroupTerm):
    factors: tuple[GroupTerm, ...]

    def __post_init__(self) -> None:
        _check_factors(self.factors)


def _check_term(value: object, what: str) -> None:
    if not isinstance(value, GroupTerm):
        raise MalformedTerm(f"{what} must be a group term")


def _check_seq(value: object) -> None:
    if not isinstance(value, FundSeq):
        raise MalformedTerm("families are indexed by a fundamental sequence")


@dataclass(frozen=True, slots=True)
class Wreath(GroupTerm):
    """Restricted wreath product base wr top."""

    base: GroupTerm
    top: GroupTerm

    def __post_init__(self) -> None:
        _check_term(self.base, "base")
        _check_term(self.top, "top")


@dataclass(frozen=True, slots=True)
class CentralWreathQuotient(GroupTerm):
    """Quotient of base wr top identifying the central cores of the base copies."""

    base: GroupTerm
    top: GroupTerm

    def __post_init__(self) -> None:
        _check_term(self.base, "base")
        _check_term(self.top, "top")


@dataclass(frozen=True, slots=True)
class ThreeGenEmbed(GroupTerm):
    """A three-generator group the inner term embeds into, with the same depth."""

    inner: GroupTerm

    def __post_init__(self) -> None:
        _check_term(self.inner, "inner term")


@dataclass(frozen=True, slots=True)
class FreeProductFamily(GroupTerm):
    """Free product of countably many witnesses, one per sequence element."""

    seq: FundSeq

    def __post_init__(self) -> None:
        _check_seq(self.seq)


@dataclass(frozen=True, slots=True)
class DirectSumFamily(GroupTerm):
    seq: FundSeq

    def __post_init__(self) -> None:
        _check_seq(self.seq)


@dataclass(frozen=True, slots=True)
class SuccessorWitness(GroupTerm):
    """Amalgam of successor witnesses along a fundamental sequence,
    identifying their finite central cores: depth target + 1."""

    seq: FundSeq

    def __post_init__(self) -> None:
        _check_seq(self.seq)


def free_product(*factors: GroupTerm) -> GroupTerm:
    """Normalizing constructor: strips trivial factors, collapses singletons."""
    kept = tuple(f for f in factors if not isinstance(f, Trivial))
    if not kept:
        return Trivial()
    if len(kept) == 1:
        return kept[0]
    return FreeProduct(kept)


def direct_sum(*factors: GroupTerm) -> GroupTerm:
    kept = tuple(f for f in factors if not isinstance(f, Trivial))
    if not kept:
        return Trivial()
    if len(kept) == 1:
        return kept[0]
    return DirectSum(kept)


def children(term: GroupTerm) -> tuple[GroupTerm, ...]:
    if isinstance(term, (FreeProduct, DirectSum)):
        return term.factors
    if isinstance(term, (Wreath, CentralWreathQuotient)):
        return (term.base, term.top)
    if isinstance(term, ThreeGenEmbed):
        return (term.inner,)
    return ()


# --------------------------------------------------------------------------
# attributes


@dataclass(frozen=True, slots=True)
class GroupAttr:
    """The precondition lattice the depth rules consult."""

    cardinality: Cardinality
    perfect: bool = False
    finitely_generated: bool = False
    finitely_presented: bool = False
    central_core: Ordinal | None = None

    def __post_init__(self) -> None:
        if self.cardinality is Cardinality.TRIVIAL:
            assert self.perfect and self.central_core is None


_FAMILY = (FreeProductFamily, DirectSumFamily)
_FAMILY_LIKE = (FreeProductFamily, DirectSumFamily, SuccessorWitness)


@lru_cache(maxsize=None)
def attrs(term: GroupTerm) -> GroupAttr:
    if isinstance(term, Trivial):
        return GroupAttr(Cardinality.TRIVIAL, perfect=True,
                         finitely_generated=True, finitely_presented=True)
    if isinstance(term, FiniteCyclic):
        return GroupAttr(Cardinality.FINITE_NONTRIVIAL,
                         finitely_generated=True, finitely_presented=True)
    if isinstance(term, A5):
        return GroupAttr(Cardinality.FINITE_NONTRIVIAL, perfect=True,
                         finitely_generated=True, finitely_presented=True)
    if isinstance(term, (Z, FreeGroup)):
        return GroupAttr(Cardinality.INFINITE,
                         finitely_generated=True, finitely_presented=True)
    if isinstance(term, Sp):
        return GroupAttr(Cardinality.INFINITE, perfect=term.genus >= 3,
                         finitely_generated=True, finitely_presented=True)
    if isinstance(term, Lambda):
        return GroupAttr(Cardinality.INFINITE,
                         finitely_generated=True, finitely_presented=True)
    if isinstance(term, LambdaBar):
        return GroupAttr(Cardinality.INFINITE, perfect=True,
                         finitely_generated=True, finitely_presented=True,
                         central_core=ONE)
    if isinstance(term, GammaFP):
        return GroupAttr(Cardinality.INFINITE,
                         finitely_generated=True, finitely_presented=True)
    if isinstance(term, MFP):
        return GroupAttr(Cardinality.INFINITE,
                         finitely_generated=True, finitely_presented=True,
                         central_core=Ordinal.from_int(term.n))
    if isinstance(term, NoFiniteQuotients):
        return GroupAttr(Cardinality.INFINITE, finitely_generated=True)
    if isinstance(term, (FreeProduct, DirectSum)):
        parts = [attrs(f) for f in term.factors]
        if isinstance(term, FreeProduct):
            card = Cardinality.INFINITE
        else:
            infinite = any(p.cardinality is Cardinality.INFINITE for p in parts)
            card = Cardinality.INFINITE if infinite else Cardinality.FINITE_NONTRIVIAL
        return GroupAttr(
            card,
            perfect=all(p.perfect for p in parts),
            finitely_generated=all(p.finitely_generated for p in parts),
            finitely_presented=all(p.finitely_presented for p in parts),
        )
    if isinstance(term, (Wreath, CentralWreathQuotient)):
        pb, pt = attrs(term.base), attrs(term.top)
        if pb.cardinality is Cardinality.TRIVIAL and pt.cardinality is Cardinality.TRIVIAL:
            card = Cardinality.TRIVIAL
        elif Cardinality.INFINITE in (pb.cardinality, pt.cardinality):
            card = Cardinality.INFINITE
        else:
            card = Cardinality.FINITE_NONTRIVIAL
        core = None
        if isinstance(term, CentralWreathQuotient):
            core = _central_quotient_core(term, pb, pt)
        return GroupAttr(
            card,
            # abelianization splits as base_ab x top_ab, so perfection is conjunctive
            perfect=pb.perfect and pt.perfect,
            finitely_generated=pb.finitely_generated and pt.finitely_generated,
            finitely_presented=False,  # conservative: not claimed in this algebra
            central_core=core,
        )
    if isinstance(term, ThreeGenEmbed):
        return GroupAttr(Cardinality.INFINITE, finitely_generated=True)
    if isinstance(term, _FAMILY):
        return GroupAttr(Cardinality.INFINITE, finitely_generated=False)
    if isinstance(term, SuccessorWitness):
        core = None
        least = term.seq.target.least_exponent()
        if not least.is_finite or least.to_int() >= 2:
            core = div_omega(term.seq.target)
        return GroupAttr(Cardinality.INFINITE, finitely_generated=True,
                         central_core=core)
    raise MalformedTerm(f"unknown term {term!r}")


def _central_quotient_core(term: CentralWreathQuotient,
                           pb: GroupAttr, pt: GroupAttr) -> Ordinal | None:
    """gamma' with depth(term) == w*gamma' + 1, when the quotient rule applies."""
    if not (pb.perfect and pb.central_core is not None
            and pt.cardinality is Cardinality.INFINITE):
        return None
    top_depth, _ = depth(term.top)
    if top_depth.value is None:
        return None
    return div_omega(top_depth.value + OMEGA * pb.central_core)


# --------------------------------------------------------------------------
# depth results and certificates


@dataclass(frozen=True, slots=True)
class DepthResult:
    """Defined(ordinal) or Undefined (no depth exists)."""

    value: Ordinal | None = None

    @property
    def defined(self) -> bool:
        return self.value is not None

    @staticmethod
    def of(value: Ordinal) -> "DepthResult":
        return DepthResult(value)


UNDEFINED = DepthResult(None)


@dataclass(frozen=True, slots=True)
class DepthCertificate:
    """A replayable record of one rule application per term node."""

    term: GroupTerm
    constructor: str
    rule_id: str
    citation: str
    result: DepthResult
    facts: tuple[str, ...]
    children: tuple["DepthCertificate", ...]


RULE_ID: dict[type, str] = {
    Trivial: "R1",
    FiniteCyclic: "R2",
    A5: "R2",
    Z: "R3",
    FreeGroup: "R3",
    Sp: "R3",
    FreeProduct: "R4",
    DirectSum: "R5",
    Wreath: "R6",
    CentralWreathQuotient: "R7",
    Lambda: "R8",
    LambdaBar: "R8",
    GammaFP: "R8",
    MFP: "R8",
    NoFiniteQuotients: "R8",
    ThreeGenEmbed: "R12",
    FreeProductFamily: "R13",
    DirectSumFamily: "R13",
    SuccessorWitness: "R14",
}

_CITATIONS: dict[type, str] = {
    Trivial: "the trivial group has depth 0",
    FiniteCyclic: "a non-trivial finite group has depth 1",
    A5: "a non-trivial finite group has depth 1",
    Z: "an infinite residually finite group has depth w",
    FreeGroup: "an infinite residually finite group has depth w",
    Sp: "an infinite residually finite group has depth w",
    FreeProduct: "free product: the sup s of the factor depths; s when s is a limit, s + w when s is a successor",
    DirectSum: "direct sum: the sup s of the factor depths; s + w only when infinitely many factors attain a successor s",
    Wreath: "wreath product with perfect base over an infinite top: depth(top) + depth(base), plus w when depth(base) is a successor",
    CentralWreathQuotient: "central quotient of a wreath product: depth(top) + w*gamma + 1 where gamma is the base's central core index",
    Lambda: "central extension with infinite cyclic residual core, trivial second core: depth w*2",
    LambdaBar: "perfect central extension with residual core Z/d: depth w + 1",
    GammaFP: "finitely presented amalgam witness of depth w*n",
    MFP: "finitely presented central-extension witness of depth w*n + 1",
    NoFiniteQuotients: "no non-trivial finite quotients, so no ordinal depth exists",
    ThreeGenEmbed: "three-generator group receiving the inner group, same depth for limit depths >= w^2",
    FreeProductFamily: "countable free product along a fundamental sequence: depth is the target",
    DirectSumFamily: "countable direct sum along a fundamental sequence: depth is the target",
    SuccessorWitness: "amalgam of successor witnesses over identified finite central cores: depth target + 1",
}


class _Checks:
    """Collects precondition facts; raises RuleInapplicable on the first failure."""

    def __init__(self, term: GroupTerm):
        self.term = term
        self.facts: list[str] = []

    def require(self, ok: bool, fact: str, missing: str) -> None:
        if not ok:
            raise RuleInapplicable(self.term, missing)
        self.facts.append(fact)

    def done(self) -> tuple[str, ...]:
        return tuple(self.facts)


def _least_exponent_at_least_two(a: Ordinal) -> bool:
    least = a.least_exponent()
    return not least.is_finite or least.to_int() >= 2


def _apply_rule(term: GroupTerm,
                child_results: tuple[DepthResult, ...]) -> tuple[DepthResult, tuple[str, ...]]:
    """One rule application from the children's results.  Shared verbatim by
    the evaluator and the certificate replay, so the two cannot drift."""
    if isinstance(term, Trivial):
        return DepthResult.of(ZERO), ()
    if isinstance(term, (FiniteCyclic, A5)):
        return DepthResult.of(ONE), ()
    if isinstance(term, (Z, FreeGroup, Sp)):
        return DepthResult.of(OMEGA), ()
    if isinstance(term, Lambda):
        return DepthResult.of(OMEGA * 2), ()
    if isinstance(term, LambdaBar):
        return DepthResult.of(OMEGA + 1), ()
    if isinstance(term, GammaFP):
        return DepthResult.of(OMEGA * term.n), ()
    if isinstance(term, MFP):
        return DepthResult.of(OMEGA * term.n + 1), ()
    if isinstance(term, NoFiniteQuotients):
        return UNDEFINED, ()

    if isinstance(term, (FreeProduct, DirectSum)):
        if any(not r.defined for r in child_results):
            return UNDEFINED, ()
        sup = max(r.value for r in child_results)  # type: ignore[type-var]
        if sup.kind() is OrdinalKind.SUCCESSOR:
            if isinstance(term, FreeProduct):
                sup = sup + OMEGA
            # a finite direct sum has finitely many factors attaining the sup,
            # so a successor sup stands
        return DepthResult.of(sup), ()

    if isinstance(term, Wreath):
        rb, rt = child_results
        if not (rb.defined and rt.defined):
            return UNDEFINED, ()
        pb, pt = attrs(term.base), attrs(term.top)
        chk = _Checks(term)
        chk.require(pb.cardinality is not Cardinality.TRIVIAL,
                    "base is non-trivial", "base must be non-trivial")
        chk.require(pb.perfect, "base is perfect", "base must be perfect")
        chk.require(pt.cardinality is Cardinality.INFINITE,
                    "top is infinite", "top must be infinite")
        chk.require(rt.defined, "top depth is defined", "top depth must be defined")
        total = rt.value + rb.value
        if rb.value.kind() is OrdinalKind.SUCCESSOR:
            total = total + OMEGA
        return DepthResult.of(total), chk.done()

    if isinstance(term, CentralWreathQuotient):
        rb, rt = child_results
        if not (rb.defined and rt.defined):
            return UNDEFINED, ()
        pb, pt = attrs(term.base), attrs(term.top)
        chk = _Checks(term)
        chk.require(pb.perfect, "base is perfect", "base must be perfect")
        chk.require(pb.central_core is not None,
                    "base has a finite central core", "base must have a finite central core")
        chk.require(pt.cardinality is Cardinality.INFINITE,
                    "top is infinite", "top must be infinite")
        chk.require(rt.defined, "top depth is defined", "top depth must be defined")
        return DepthResult.of(rt.value + OMEGA * pb.central_core + 1), chk.done()

    if isinstance(term, ThreeGenEmbed):
        (ri,) = child_results
        if not ri.defined:
            return UNDEFINED, ()
        chk = _Checks(term)
        chk.require(ri.value.kind() is OrdinalKind.LIMIT,
                    "inner depth is a limit ordinal", "inner depth must be a limit ordinal")
        chk.require(ri.value >= OMEGA_SQUARED,
                    "inner depth is at least w^2", "inner depth must be at least w^2")
        return ri, chk.done()

    if isinstance(term, _FAMILY):
        chk = _Checks(term)
        chk.require(_least_exponent_at_least_two(term.seq.target),
                    "every sequence element is a limit ordinal",
                    "sequence elements must all be limit ordinals "
                    "(target least exponent >= 2)")
        return DepthResult.of(term.seq.target), chk.done()

    if isinstance(term, SuccessorWitness):
        target = term.seq.target
        chk = _Checks(term)
        shaped = _least_exponent_at_least_two(target)
        chk.require(target >= OMEGA_SQUARED, "target is at least w^2",
                    "target must be at least w^2")
        chk.require(shaped, "target is not of the form l + w",
                    "target must not be of the form l + w")
        chk.require(shaped, "every sequence element is realizable",
                    "every sequence element must be realizable")
        return DepthResult.of(target + 1), chk.done()

    raise MalformedTerm(f"unknown term {term!r}")


@lru_cache(maxsize=None)
def depth(term: GroupTerm) -> tuple[DepthResult, DepthCertificate]:
    """Evaluate the depth of a term, producing a certificate for every node.

    Undefined propagates upward (an undefined part embeds in the whole);
    a failed rule precondition raises RuleInapplicable instead.
    Results are cached: terms are immutable and evaluation is pure.
    """
    kids = children(term)
    evaluated = [depth(k) for k in kids]
    results = tuple(r for r, _ in evaluated)
    result, facts = _apply_rule(term, results)
    cert = DepthCertificate(
        term=term,
        constructor=type(term).__name__,
        rule_id=RULE_ID[type(term)],
        citation=_CITATIONS[type(term)],
        result=result,
        facts=facts,
        children=tuple(c for _, c in evaluated),
    )
    return result, cert


def validate_certificate(term: GroupTerm, cert: DepthCertificate,
                         samples: int = 3) -> bool:
    """Replay every node's rule against its recorded children.

    Family nodes additionally get `samples` synthesized members certified
    recursively.  Tampered results, wrong rule ids, or claims whose
    preconditions do not hold all come back False; a certificate whose tree
    does not even mirror the term raises ShapeMismatch.
    """
    if cert.term != term:
        raise ShapeMismatch("certificate was issued for a different term")
    return _validate(cert, samples)


@lru_cache(maxsize=None)
def _validate(cert: DepthCertificate, samples: int) -> bool:
    term = cert.term
    kids = children(term)
    if len(kids) != len(cert.children):
        raise ShapeMismatch("certificate arity does not match the term")
    for kid_term, kid_cert in zip(kids, cert.children):
        if kid_cert.term != kid_term:
            raise ShapeMismatch("certificate child does not match the term's child")
    if cert.constructor != type(term).__name__:
        return False
    if cert.rule_id != RULE_ID.get(type(term)):
        return False
    for kid_cert in cert.children:
        if not _validate(kid_cert, samples):
            return False
    try:
        result, facts = _apply_rule(term, tuple(k.result for k in cert.children))
    except RuleInapplicable:
        return False
    if result != cert.result or facts != cert.facts:
        return False
    if isinstance(term, _FAMILY_LIKE) and result.defined:
        return _certify_family_members(term, samples)
    return True


@lru_cache(maxsize=None)
def _certify_family_members(term: GroupTerm, samples: int) -> bool:
    # local import: synth builds on this module
    from .synth import NotRealizable, synthesize

    seq = term.seq  # type: ignore[attr-defined]
    for n in range(1, samples + 1):
        beta = seq.element(n)
        try:
            if isinstance(term, SuccessorWitness):
                member = synthesize(beta + 1, fg_required=True)
                expected = beta + 1
                if attrs(member).central_core is None:
                    return False
            else:
                member = synthesize(beta, fg_required=False)
                expected = beta
        except NotRealizable:
            return False
        result, cert = depth(member)
        if result.value != expected:
            return False
        if not _validate(cert, samples):
            return False
    return True
