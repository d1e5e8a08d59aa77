"""Witness synthesis: a group term of any prescribed realizable depth.

The dispatch is by the shape of the target ordinal:

    0            -> Trivial
    1            -> FiniteCyclic(2)
    w            -> Z
    l + w        -> Wreath(A5, synthesize(l))          (least exponent 1)
    other limit  -> FreeProductFamily over the standard fundamental
                    sequence, wrapped in ThreeGenEmbed when a finitely
                    generated witness is required (least exponent >= 2)
    l + 1, l = w*n       -> MFP(n, 3)
    l + 1, l = l0 + w    -> CentralWreathQuotient(LambdaBar(3), synthesize(l0))
    l + 1, otherwise     -> SuccessorWitness over l's fundamental sequence

Every branch preserves finite generation when asked to, and
`certify_roundtrip` closes the loop: evaluate the synthesized term and
check the certificate says exactly the requested depth.
"""

from __future__ import annotations

from functools import lru_cache

from .groupterm import (
    A5,
    CentralWreathQuotient,
    DepthCertificate,
    FiniteCyclic,
    FreeProductFamily,
    GroupTerm,
    LambdaBar,
    MFP,
    ThreeGenEmbed,
    Trivial,
    SuccessorWitness,
    Wreath,
    Z,
    attrs,
    depth,
    validate_certificate,
)
from .ordinal import (
    OMEGA,
    ONE,
    Ordinal,
    OrdinalKind,
    classify_realizable,
    fundamental_sequence,
)


class NotRealizable(ValueError):
    """The requested ordinal is not the depth of any group."""

    def __init__(self, ordinal: Ordinal, reason: str):
        super().__init__(f"not a realizable depth: {reason}")
        self.ordinal = ordinal
        self.reason = reason


class CertificationFailure(Exception):
    """Synthesized witness failed its own round trip."""


def _strip_one_omega(a: Ordinal) -> Ordinal:
    """For a with least term w*c: the l with a == l + w."""
    head = a.terms[:-1]
    exponent, coefficient = a.terms[-1]
    if coefficient == 1:
        return Ordinal(head)
    return Ordinal(head + ((exponent, coefficient - 1),))


def synthesize(a: Ordinal, fg_required: bool = False) -> GroupTerm:
    verdict = classify_realizable(a)
    if not verdict:
        raise NotRealizable(a, verdict.reason or "not realizable")
    return _synthesize(a, fg_required)


@lru_cache(maxsize=None)
def _synthesize(a: Ordinal, fg_required: bool) -> GroupTerm:
    if a.is_zero:
        return Trivial()
    if a == ONE:
        return FiniteCyclic(2)
    if a == OMEGA:
        return Z()

    kind = a.kind()
    if kind is OrdinalKind.LIMIT:
        least = a.least_exponent()
        if least == ONE:
            # a == l + w: wreathing a finite perfect group adds exactly one w
            return Wreath(A5(), _synthesize(_strip_one_omega(a), fg_required))
        family = FreeProductFamily(fundamental_sequence(a))
        return ThreeGenEmbed(family) if fg_required else family

    limit = a.predecessor()  # realizable successor: predecessor is 0 or a limit
    if limit.least_exponent() == ONE:
        if len(limit.terms) == 1:
            # limit == w*n: the finitely presented witness family
            return MFP(limit.terms[0][1], 3)
        base = _strip_one_omega(limit)
        return CentralWreathQuotient(LambdaBar(3), _synthesize(base, fg_required))
    return SuccessorWitness(fundamental_sequence(limit))


def certify_roundtrip(a: Ordinal, fg_required: bool = False,
                      samples: int = 3) -> DepthCertificate:
    """Synthesize, evaluate, and insist the certificate lands back on `a`."""
    witness = synthesize(a, fg_required)
    result, cert = depth(witness)
    if result.value != a:
        raise CertificationFailure(
            f"witness depth {result!r} differs from requested {a!r}")
    if fg_required and not attrs(witness).finitely_generated:
        raise CertificationFailure("witness is not finitely generated")
    if not validate_certificate(witness, cert, samples):
        raise CertificationFailure("certificate failed validation")
    return cert
