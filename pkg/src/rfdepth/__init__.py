"""Certified residual-finiteness depth: ordinal arithmetic in Cantor
normal form, a depth calculus on group-construction terms, witness
synthesis for every realizable depth, and self-checking oracles."""

from .groupterm import (
    A5,
    Cardinality,
    CentralWreathQuotient,
    DepthCertificate,
    DepthResult,
    DirectSum,
    DirectSumFamily,
    FiniteCyclic,
    FreeGroup,
    FreeProduct,
    FreeProductFamily,
    GammaFP,
    GroupAttr,
    GroupTerm,
    Lambda,
    LambdaBar,
    MFP,
    MalformedTerm,
    NoFiniteQuotients,
    RuleInapplicable,
    ShapeMismatch,
    Sp,
    SuccessorWitness,
    ThreeGenEmbed,
    Trivial,
    UNDEFINED,
    Wreath,
    Z,
    attrs,
    children,
    depth,
    direct_sum,
    free_product,
    validate_certificate,
)
from .oracle import (
    ArithmeticOracleReport,
    TermEnumerationReport,
    exhaustive_compare_suite,
    pair_add,
    term_enumeration_suite,
)
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Comparison,
    CoreClass,
    CoreSignature,
    FundSeq,
    InvalidDepthShape,
    NotLimit,
    Ordinal,
    OrdinalKind,
    Realizability,
    absorbs,
    add,
    analyze,
    classify_realizable,
    compare,
    depth_to_core_signature,
    div_omega,
    fundamental_sequence,
    multiply,
)
from .synth import CertificationFailure, NotRealizable, certify_roundtrip, synthesize
from .textio import (
    ArityError,
    EpsilonZeroExceeded,
    ParameterRangeError,
    ParseError,
    SourceSpan,
    emit_certificate,
    parse_ordinal,
    parse_term,
    print_ordinal,
    print_term,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
