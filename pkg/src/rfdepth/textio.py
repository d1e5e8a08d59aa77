"""Concrete syntax: ASCII notation for ordinals and group terms.

Ordinal grammar (`w` denotes the first infinite ordinal):

    ordinal := "0" | sum
    sum     := term { "+" term }
    term    := "w" [ "^" factor ] [ "*" nat ] | nat
    factor  := nat | "w" | "(" ordinal ")"
    nat     := nonzero decimal numeral

Input need not be canonical; sums are normalized by ordinal addition, so
"1 + w" parses to the same value as "w".  The notation reaches every
ordinal below epsilon_0 and nothing above; exponent towers nested past a
fixed bound are rejected with EpsilonZeroExceeded.

Group term grammar:

    1, C(n), A5, Z, F(n), Sp(g), Lam, LamBar(d), Gamma(n), M(n, d), NQ,
    fp(t, ...), ds(t, ...), wr(t, t), E(t, t), embed3(t),
    fpfam(ordinal), dsfam(ordinal), succwit(ordinal)

Family constructors take the target ordinal and attach its standard
fundamental sequence.  LamBar optionally takes a second genus argument
(default 3, the canonical form omits it).  Whitespace is insignificant
in both grammars.  print_ordinal/print_term emit the canonical spelling,
and parsing a canonical spelling returns the original value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .groupterm import (
    A5,
    CentralWreathQuotient,
    DepthCertificate,
    DirectSum,
    DirectSumFamily,
    FiniteCyclic,
    FreeGroup,
    FreeProduct,
    FreeProductFamily,
    GammaFP,
    GroupTerm,
    Lambda,
    LambdaBar,
    MFP,
    NoFiniteQuotients,
    Sp,
    SuccessorWitness,
    ThreeGenEmbed,
    Trivial,
    Wreath,
    Z,
    free_product,
    direct_sum,
    validate_certificate,
)
from .ordinal import OMEGA, ONE, NotLimit, Ordinal, fundamental_sequence

SCHEMA_VERSION = 1

# exponent towers deeper than this are as close to epsilon_0 as we go
MAX_TOWER = 64


@dataclass(frozen=True, slots=True)
class SourceSpan:
    start: int
    end: int

    def __str__(self) -> str:
        return f"{self.start}..{self.end}"


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at {span}")
        self.message = message
        self.span = span


class ArityError(ParseError):
    pass


class ParameterRangeError(ParseError):
    pass


class EpsilonZeroExceeded(ParseError):
    def __init__(self, span: SourceSpan):
        super().__init__(
            f"exponent tower deeper than {MAX_TOWER}: value too close to epsilon_0",
            span)


# --------------------------------------------------------------------------
# ordinal parsing


class _Scanner:
    """Shared cursor machinery: whitespace skipping and spanned errors."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def here(self, width: int = 1) -> SourceSpan:
        end = min(self.pos + width, len(self.text))
        return SourceSpan(self.pos, max(end, self.pos))

    def fail(self, message: str) -> ParseError:
        self.skip_ws()
        width = 1 if self.pos < len(self.text) else 0
        return ParseError(message, SourceSpan(self.pos, self.pos + width))

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.fail(f"expected '{ch}'")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected a number")
        value = int(self.text[start:self.pos])
        if value == 0:
            raise ParseError("zero is not a valid numeral here",
                             SourceSpan(start, self.pos))
        return value

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def require_end(self) -> None:
        if not self.at_end():
            raise self.fail("unexpected trailing input")


def _parse_ordinal(sc: _Scanner, tower: int) -> Ordinal:
    # ordinal := "0" | sum   ("0" stands alone, never inside a sum)
    if sc.peek() == "0":
        sc.pos += 1
        return Ordinal()
    total = _parse_ordinal_term(sc, tower)
    while sc.peek() == "+":
        sc.pos += 1
        total = total + _parse_ordinal_term(sc, tower)
    return total


def _parse_ordinal_term(sc: _Scanner, tower: int) -> Ordinal:
    ch = sc.peek()
    if ch == "w":
        sc.pos += 1
        exponent = ONE
        if sc.peek() == "^":
            sc.pos += 1
            exponent = _parse_factor(sc, tower + 1)
        coefficient = 1
        if sc.peek() == "*":
            sc.pos += 1
            coefficient = sc.nat()
        return Ordinal.omega_power(exponent, coefficient)
    if ch.isdigit():
        return Ordinal.from_int(sc.nat())
    raise sc.fail("expected 'w' or a number")


def _parse_factor(sc: _Scanner, tower: int) -> Ordinal:
    if tower > MAX_TOWER:
        raise EpsilonZeroExceeded(sc.here())
    ch = sc.peek()
    if ch == "w":
        sc.pos += 1
        return OMEGA
    if ch == "(":
        sc.pos += 1
        inner = _parse_ordinal(sc, tower)
        sc.expect(")")
        return inner
    if ch.isdigit():
        return Ordinal.from_int(sc.nat())
    raise sc.fail("expected a number, 'w', or '('")


def parse_ordinal(text: str) -> Ordinal:
    sc = _Scanner(text)
    value = _parse_ordinal(sc, 0)
    sc.require_end()
    return value


# --------------------------------------------------------------------------
# ordinal printing


def print_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for exponent, coefficient in a.terms:
        if exponent.is_zero:
            parts.append(str(coefficient))
            continue
        if exponent == ONE:
            bit = "w"
        elif exponent.is_finite:
            bit = f"w^{exponent.to_int()}"
        elif _is_plain_omega(exponent):
            bit = "w^w"
        else:
            bit = f"w^({print_ordinal(exponent)})"
        if coefficient != 1:
            bit += f"*{coefficient}"
        parts.append(bit)
    return " + ".join(parts)


def _is_plain_omega(a: Ordinal) -> bool:
    return len(a.terms) == 1 and a.terms[0] == (ONE, 1)


# --------------------------------------------------------------------------
# group term parsing


def _term_name(sc: _Scanner) -> tuple[str, SourceSpan]:
    sc.skip_ws()
    start = sc.pos
    while sc.pos < len(sc.text) and (sc.text[sc.pos].isalnum() or sc.text[sc.pos] == "_"):
        sc.pos += 1
    if sc.pos == start:
        raise sc.fail("expected a group name")
    return sc.text[start:sc.pos], SourceSpan(start, sc.pos)


def _nat_arg(sc: _Scanner) -> tuple[int, SourceSpan]:
    sc.skip_ws()
    start = sc.pos
    value = sc.nat()
    return value, SourceSpan(start, sc.pos)


def _ordinal_arg(sc: _Scanner) -> Ordinal:
    """Parse the balanced region up to the enclosing ')' as an ordinal."""
    sc.skip_ws()
    start = sc.pos
    level = 0
    while sc.pos < len(sc.text):
        ch = sc.text[sc.pos]
        if ch == "(":
            level += 1
        elif ch == ")":
            if level == 0:
                break
            level -= 1
        sc.pos += 1
    region = sc.text[start:sc.pos]
    inner = _Scanner(region)
    try:
        value = _parse_ordinal(inner, 0)
        inner.require_end()
    except ParseError as err:
        span = SourceSpan(start + err.span.start, start + err.span.end)
        if isinstance(err, EpsilonZeroExceeded):
            raise EpsilonZeroExceeded(span) from None
        raise type(err)(err.message, span) from None
    return value


def _range(sc: _Scanner, ok: bool, message: str, span: SourceSpan) -> None:
    if not ok:
        raise ParameterRangeError(message, span)


def _parse_term(sc: _Scanner) -> GroupTerm:
    if sc.peek() == "1":
        sc.pos += 1
        return Trivial()
    name, span = _term_name(sc)

    if name == "A5":
        return A5()
    if name == "Z":
        return Z()
    if name == "Lam":
        return Lambda()
    if name == "NQ":
        return NoFiniteQuotients()

    if name in ("C", "F", "Sp", "Gamma"):
        sc.expect("(")
        value, vspan = _nat_arg(sc)
        sc.expect(")")
        if name == "C":
            _range(sc, value >= 2, "cyclic order must be >= 2", vspan)
            return FiniteCyclic(value)
        if name == "F":
            _range(sc, value >= 2, "free rank must be >= 2", vspan)
            return FreeGroup(value)
        if name == "Sp":
            _range(sc, value >= 2, "genus must be >= 2", vspan)
            return Sp(value)
        _range(sc, value >= 1, "depth index must be >= 1", vspan)
        return GammaFP(value)

    if name == "LamBar":
        sc.expect("(")
        d, dspan = _nat_arg(sc)
        genus, gspan = 3, dspan
        if sc.peek() == ",":
            sc.pos += 1
            genus, gspan = _nat_arg(sc)
        sc.expect(")")
        _range(sc, d >= 3 and d % 2 == 1, "core order d must be odd and >= 3", dspan)
        _range(sc, genus >= 3, "genus must be >= 3", gspan)
        return LambdaBar(d, genus)

    if name == "M":
        sc.expect("(")
        n, nspan = _nat_arg(sc)
        sc.expect(",")
        d, dspan = _nat_arg(sc)
        sc.expect(")")
        _range(sc, n >= 1, "depth index must be >= 1", nspan)
        _range(sc, d >= 3 and d % 2 == 1, "centre order d must be odd and >= 3", dspan)
        return MFP(n, d)

    if name in ("fp", "ds", "wr", "E", "embed3"):
        sc.expect("(")
        args = [_parse_term(sc)]
        while sc.peek() == ",":
            sc.pos += 1
            args.append(_parse_term(sc))
        sc.expect(")")
        if name in ("fp", "ds"):
            if len(args) < 2:
                raise ArityError(f"{name} needs at least two factors", span)
            builder = free_product if name == "fp" else direct_sum
            return builder(*args)
        if name == "embed3":
            if len(args) != 1:
                raise ArityError("embed3 takes exactly one term", span)
            return ThreeGenEmbed(args[0])
        if len(args) != 2:
            raise ArityError(f"{name} takes exactly two terms", span)
        base, top = args
        return Wreath(base, top) if name == "wr" else CentralWreathQuotient(base, top)

    if name in ("fpfam", "dsfam", "succwit"):
        sc.expect("(")
        sc.skip_ws()
        ostart = sc.pos
        target = _ordinal_arg(sc)
        ospan = SourceSpan(ostart, sc.pos)
        sc.expect(")")
        try:
            seq = fundamental_sequence(target)
        except NotLimit:
            raise ParameterRangeError("family target must be a limit ordinal",
                                      ospan) from None
        if name == "fpfam":
            return FreeProductFamily(seq)
        if name == "dsfam":
            return DirectSumFamily(seq)
        return SuccessorWitness(seq)

    raise ParseError(f"unknown group name '{name}'", span)


def parse_term(text: str) -> GroupTerm:
    sc = _Scanner(text)
    term = _parse_term(sc)
    sc.require_end()
    return term


# --------------------------------------------------------------------------
# group term printing


def print_term(term: GroupTerm) -> str:
    if isinstance(term, Trivial):
        return "1"
    if isinstance(term, FiniteCyclic):
        return f"C({term.order})"
    if isinstance(term, A5):
        return "A5"
    if isinstance(term, Z):
        return "Z"
    if isinstance(term, FreeGroup):
        return f"F({term.rank})"
    if isinstance(term, Sp):
        return f"Sp({term.genus})"
    if isinstance(term, Lambda):
        return "Lam"
    if isinstance(term, LambdaBar):
        if term.genus == 3:
            return f"LamBar({term.d})"
        return f"LamBar({term.d}, {term.genus})"
    if isinstance(term, GammaFP):
        return f"Gamma({term.n})"
    if isinstance(term, MFP):
        return f"M({term.n}, {term.d})"
    if isinstance(term, NoFiniteQuotients):
        return "NQ"
    if isinstance(term, FreeProduct):
        return "fp(" + ", ".join(print_term(f) for f in term.factors) + ")"
    if isinstance(term, DirectSum):
        return "ds(" + ", ".join(print_term(f) for f in term.factors) + ")"
    if isinstance(term, Wreath):
        return f"wr({print_term(term.base)}, {print_term(term.top)})"
    if isinstance(term, CentralWreathQuotient):
        return f"E({print_term(term.base)}, {print_term(term.top)})"
    if isinstance(term, ThreeGenEmbed):
        return f"embed3({print_term(term.inner)})"
    if isinstance(term, FreeProductFamily):
        return f"fpfam({print_ordinal(term.seq.target)})"
    if isinstance(term, DirectSumFamily):
        return f"dsfam({print_ordinal(term.seq.target)})"
    if isinstance(term, SuccessorWitness):
        return f"succwit({print_ordinal(term.seq.target)})"
    raise TypeError(f"unknown term {term!r}")


# --------------------------------------------------------------------------
# certificates


def _result_text(cert: DepthCertificate) -> str | None:
    value = cert.result.value
    return None if value is None else print_ordinal(value)


def _certificate_node(cert: DepthCertificate) -> dict:
    return {
        "constructor": cert.constructor,
        "rule_id": cert.rule_id,
        "paper_ref": cert.citation,
        "ordinal": _result_text(cert),
        "children": [_certificate_node(child) for child in cert.children],
    }


def emit_certificate(cert: DepthCertificate, fmt: str = "pretty",
                     samples: int = 3) -> str:
    """Render a certificate: 'pretty' is an indented rule tree, 'json' a
    versioned document validating the whole tree first."""
    if fmt == "json":
        document = {
            "schema_version": SCHEMA_VERSION,
            "input": print_term(cert.term),
            "result": _result_text(cert),
            "certified": validate_certificate(cert.term, cert, samples),
            "certificate": _certificate_node(cert),
        }
        return json.dumps(document, indent=2)
    if fmt == "pretty":
        lines: list[str] = []
        _pretty(cert, 0, lines)
        return "\n".join(lines)
    raise ValueError(f"unknown certificate format {fmt!r}")


def _pretty(cert: DepthCertificate, level: int, lines: list[str]) -> None:
    pad = "  " * level
    shown = _result_text(cert)
    lines.append(f"{pad}{cert.rule_id} {cert.constructor} -> {shown or 'undefined'}")
    if cert.facts:
        lines.append(f"{pad}   checks: " + "; ".join(cert.facts))
    lines.append(f"{pad}   rule: {cert.citation}")
    for child in cert.children:
        _pretty(child, level + 1, lines)
