"""Ordinal arithmetic in hereditary Cantor normal form, below epsilon_0.

An ordinal is a finite sum  w^e1 * c1 + ... + w^ek * ck  with strictly
decreasing ordinal exponents e1 > ... > ek and positive integer
coefficients.  The empty sum is 0.  Every value of this type is kept
canonical, so structural equality coincides with ordinal equality.

Beyond the arithmetic (compare/add/multiply) this module knows the two
facts the depth calculus leans on:

  * the correspondence between depths and iterated residual cores --
    a depth is w*gamma (trivial core after gamma steps) or w*gamma + 1
    (finite non-trivial core), with 0 and 1 as degenerate cases;
  * the standard assignment of fundamental sequences to limit
    ordinals, used to index countable families of witness groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering


class NotLimit(ValueError):
    """Raised when an operation defined only on limit ordinals gets something else."""


class InvalidDepthShape(ValueError):
    """Raised for ordinals that are not of a shape a depth can take."""


class Comparison(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class OrdinalKind(Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


class CoreClass(Enum):
    # class of the iterated core a depth encodes: trivial <-> w*gamma,
    # finite non-trivial <-> w*gamma + 1
    TRIVIAL = "trivial"
    FINITE_NONTRIVIAL = "finite_nontrivial"


def _validate_terms(terms: tuple) -> None:
    prev = None
    for entry in terms:
        if not (isinstance(entry, tuple) and len(entry) == 2):
            raise ValueError("each term must be an (exponent, coefficient) pair")
        exponent, coefficient = entry
        if not isinstance(exponent, Ordinal):
            raise ValueError("exponents must be Ordinal values")
        if not isinstance(coefficient, int) or isinstance(coefficient, bool) or coefficient < 1:
            raise ValueError("coefficients must be integers >= 1")
        if prev is not None and _cmp(prev, exponent) <= 0:
            raise ValueError("exponents must be strictly decreasing")
        prev = exponent


@total_ordering
@dataclass(frozen=True, slots=True, eq=False)
class Ordinal:
    """A canonical Cantor-normal-form ordinal.  Immutable and hashable."""

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        _validate_terms(self.terms)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "Ordinal":
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("from_int expects a non-negative integer")
        return ZERO if n == 0 else Ordinal(((ZERO, n),))

    @staticmethod
    def omega_power(exponent: "Ordinal", coefficient: int = 1) -> "Ordinal":
        return Ordinal(((exponent, coefficient),))

    # -- structural queries --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def to_int(self) -> int:
        if not self.is_finite:
            raise ValueError("not a finite ordinal")
        return self.terms[0][1] if self.terms else 0

    def leading_exponent(self) -> "Ordinal":
        if not self.terms:
            raise ValueError("0 has no leading exponent")
        return self.terms[0][0]

    def least_exponent(self) -> "Ordinal":
        if not self.terms:
            raise ValueError("0 has no least exponent")
        return self.terms[-1][0]

    def natural_part(self) -> int:
        """Coefficient of w^0, i.e. the finite tail."""
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    # -- order ---------------------------------------------------------------

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _cmp(self, other) < 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            if other < 0:
                return False
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Ordinal | int") -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        cut = other.terms[0][0]
        kept = []
        for exponent, coefficient in self.terms:
            rel = _cmp(exponent, cut)
            if rel < 0:
                break
            if rel == 0:
                # absorb: merge equal leading exponents, drop anything smaller
                merged = ((cut, coefficient + other.terms[0][1]),) + other.terms[1:]
                return Ordinal(tuple(kept) + merged)
            kept.append((exponent, coefficient))
        return Ordinal(tuple(kept) + other.terms)

    def __radd__(self, other: int) -> "Ordinal":
        return Ordinal.from_int(other) + self

    def __mul__(self, other: "Ordinal | int") -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        lead_exp, lead_coeff = self.terms[0]
        out: list[tuple[Ordinal, int]] = []
        for exponent, coefficient in other.terms:
            if exponent.is_zero:
                # right factor's natural part: scale the lead, keep the tail
                out.append((lead_exp, lead_coeff * coefficient))
                out.extend(self.terms[1:])
            else:
                out.append((lead_exp + exponent, coefficient))
        return Ordinal(tuple(out))

    def __rmul__(self, other: int) -> "Ordinal":
        return Ordinal.from_int(other) * self

    # -- classification ------------------------------------------------------

    def kind(self) -> OrdinalKind:
        if not self.terms:
            return OrdinalKind.ZERO
        if self.terms[-1][0].is_zero:
            return OrdinalKind.SUCCESSOR
        return OrdinalKind.LIMIT

    def predecessor(self) -> "Ordinal":
        if self.kind() is not OrdinalKind.SUCCESSOR:
            raise ValueError("only successor ordinals have a predecessor")
        exponent, coefficient = self.terms[-1]
        head = self.terms[:-1]
        if coefficient == 1:
            return Ordinal(head)
        return Ordinal(head + ((exponent, coefficient - 1),))

    def __repr__(self) -> str:  # debugging aid; textio owns the real notation
        if self.is_zero:
            return "Ordinal(0)"
        bits = "+".join(
            f"w^{e!r}*{c}" if not e.is_zero else str(c) for e, c in self.terms
        )
        return f"Ordinal<{bits}>"


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal.omega_power(ONE)


def _cmp(a: Ordinal, b: Ordinal) -> int:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        rel = _cmp(ea, eb)
        if rel:
            return rel
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) == len(b.terms):
        return 0
    return -1 if len(a.terms) < len(b.terms) else 1


def compare(a: Ordinal, b: Ordinal) -> Comparison:
    rel = _cmp(a, b)
    if rel < 0:
        return Comparison.LESS
    return Comparison.EQUAL if rel == 0 else Comparison.GREATER


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    return a + b


def multiply(a: Ordinal, b: Ordinal) -> Ordinal:
    return a * b


def analyze(a: Ordinal) -> OrdinalKind:
    """Trichotomy: zero, successor (see Ordinal.predecessor), or limit."""
    return a.kind()


def absorbs(b: Ordinal, a: Ordinal) -> bool:
    """True iff b + a == a, i.e. a swallows b on the left."""
    return b + a == a


def div_omega(a: Ordinal) -> Ordinal:
    """The unique gamma with w * gamma == a.  Defined for limit ordinals only."""
    if a.kind() is not OrdinalKind.LIMIT:
        raise NotLimit("div_omega needs a limit ordinal")
    out = []
    for exponent, coefficient in a.terms:
        if exponent.is_finite:
            # w^(1+e') = w^e with e finite forces e' = e - 1
            out.append((Ordinal.from_int(exponent.to_int() - 1), coefficient))
        else:
            # 1 + e = e for infinite e
            out.append((exponent, coefficient))
    return Ordinal(tuple(out))


@dataclass(frozen=True, slots=True)
class CoreSignature:
    """(gamma, core class): depth w*gamma for a trivial iterated core,
    w*gamma + 1 for a finite non-trivial one."""

    core_index: Ordinal
    core_class: CoreClass

    def depth(self) -> Ordinal:
        base = OMEGA * self.core_index
        if self.core_class is CoreClass.FINITE_NONTRIVIAL:
            return base + ONE
        return base


def depth_to_core_signature(a: Ordinal) -> CoreSignature:
    """Read the core signature off a depth-shaped ordinal.

    Depths 0 and 1 get the degenerate signatures (0, trivial) and
    (0, finite_nontrivial) by fiat; any other non-limit,
    non-successor-of-limit ordinal is rejected.
    """
    if a.is_zero:
        return CoreSignature(ZERO, CoreClass.TRIVIAL)
    if a == ONE:
        return CoreSignature(ZERO, CoreClass.FINITE_NONTRIVIAL)
    kind = a.kind()
    if kind is OrdinalKind.LIMIT:
        return CoreSignature(div_omega(a), CoreClass.TRIVIAL)
    pred = a.predecessor()
    if pred.kind() is OrdinalKind.LIMIT:
        return CoreSignature(div_omega(pred), CoreClass.FINITE_NONTRIVIAL)
    raise InvalidDepthShape(f"{a!r} is not a possible depth")


@dataclass(frozen=True, slots=True)
class Realizability:
    realizable: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.realizable


def classify_realizable(a: Ordinal) -> Realizability:
    """Is `a` the depth of some group?  Exactly the ordinals whose w^0
    coefficient is <= 1 (0, 1, limits, successors of limits) qualify."""
    if a.natural_part() <= 1:
        return Realizability(True)
    if a.is_finite:
        return Realizability(False, "finite > 1")
    return Realizability(False, "successor of a successor ordinal")


@dataclass(frozen=True, slots=True)
class FundSeq:
    """The standard fundamental sequence of a limit ordinal.

    element(n) for n >= 1 climbs strictly to the target: peel the least
    term w^e * c; with c > 1 recurse on the copy left after setting one
    w^e aside; with c == 1 replace w^(e'+1) by w^e' * n, or a limit
    exponent e by w^(e[n]).
    """

    target: Ordinal

    def __post_init__(self) -> None:
        if self.target.kind() is not OrdinalKind.LIMIT:
            raise NotLimit("fundamental sequences index limit ordinals only")

    def element(self, n: int) -> Ordinal:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError("sequence indices start at 1")
        return _fund_element(self.target, n)

    def elements(self, count: int) -> list[Ordinal]:
        return [self.element(n) for n in range(1, count + 1)]


def _fund_element(target: Ordinal, n: int) -> Ordinal:
    head = target.terms[:-1]
    exponent, coefficient = target.terms[-1]
    if coefficient > 1:
        head = head + ((exponent, coefficient - 1),)
    if exponent.kind() is OrdinalKind.SUCCESSOR:
        down = exponent.predecessor()
        return Ordinal(head + ((down, n),))
    # limit exponent: descend along its own sequence
    return Ordinal(head + ((_fund_element(exponent, n), 1),))


def fundamental_sequence(a: Ordinal) -> FundSeq:
    return FundSeq(a)
