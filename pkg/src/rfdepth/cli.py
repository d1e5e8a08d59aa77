"""Command line front end.

Subcommands:

    classify <ordinal>                      realizability of a depth
    depth <term> [--json] [--samples K]     evaluate a term, print certificate
    synth <ordinal> [--fg] [--json]         synthesize a witness of that depth
    coresig <ordinal>                       core signature of a depth
    fundseq <ordinal> [--count N]           fundamental sequence elements
    selftest [--bound B] [--height H] [--json] [--report-dir DIR]

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 parse error, 3 not realizable or invalid depth shape, 4 rule
inapplicable, 5 undefined depth, 1 internal failure.  Output is
deterministic: equal invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .groupterm import (
    FiniteCyclic,
    A5 as _A5,
    Lambda,
    LambdaBar,
    RuleInapplicable,
    Trivial,
    Z as _Z,
    attrs,
    depth,
    validate_certificate,
)
from .oracle import exhaustive_compare_suite, term_enumeration_suite
from .ordinal import (
    CoreClass,
    InvalidDepthShape,
    NotLimit,
    OrdinalKind,
    classify_realizable,
    depth_to_core_signature,
    fundamental_sequence,
)
from .synth import CertificationFailure, NotRealizable, synthesize
from .textio import (
    SCHEMA_VERSION,
    ParseError,
    emit_certificate,
    parse_ordinal,
    parse_term,
    print_ordinal,
    print_term,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_INAPPLICABLE = 4
EXIT_UNDEFINED = 5

SELFTEST_ATOMS = (Trivial(), FiniteCyclic(2), _A5(), _Z(), Lambda(), LambdaBar(3))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfdepth",
        description="certified residual-finiteness depth calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="is this ordinal the depth of a group?")
    p.add_argument("ordinal")

    p = sub.add_parser("depth", help="evaluate a group term")
    p.add_argument("term")
    p.add_argument("--json", action="store_true")
    p.add_argument("--samples", type=int, default=3, metavar="K",
                   help="family members to certify per family node (default 3)")

    p = sub.add_parser("synth", help="synthesize a witness of a given depth")
    p.add_argument("ordinal")
    p.add_argument("--fg", action="store_true",
                   help="require a finitely generated witness")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("coresig", help="core signature of a depth")
    p.add_argument("ordinal")

    p = sub.add_parser("fundseq", help="fundamental sequence of a limit ordinal")
    p.add_argument("ordinal")
    p.add_argument("--count", type=int, default=5, metavar="N")

    p = sub.add_parser("selftest", help="run the arithmetic and enumeration oracles")
    p.add_argument("--bound", type=int, default=25, metavar="B")
    p.add_argument("--height", type=int, default=3, metavar="H")
    p.add_argument("--json", action="store_true")
    p.add_argument("--report-dir", metavar="DIR",
                   help="also write a CSV summary and figures here")

    return parser


def _shape_text(a) -> str:
    kind = a.kind()
    if kind is OrdinalKind.ZERO:
        return "zero"
    if a == 1:
        return "one"
    if kind is OrdinalKind.LIMIT:
        return f"limit ordinal {print_ordinal(a)}"
    return f"successor of limit ordinal {print_ordinal(a.predecessor())}"


def _cmd_classify(args) -> int:
    a = parse_ordinal(args.ordinal)
    verdict = classify_realizable(a)
    if verdict:
        print(f"realizable: {_shape_text(a)}")
        return EXIT_OK
    print(f"not realizable: {verdict.reason}")
    return EXIT_SHAPE


def _cmd_depth(args) -> int:
    term = parse_term(args.term)
    result, cert = depth(term)
    if args.json:
        print(emit_certificate(cert, "json", samples=args.samples))
    else:
        print(print_ordinal(result.value) if result.defined else "undefined")
        print(emit_certificate(cert, "pretty"))
    return EXIT_OK if result.defined else EXIT_UNDEFINED


def _cmd_synth(args) -> int:
    a = parse_ordinal(args.ordinal)
    witness = synthesize(a, fg_required=args.fg)
    result, cert = depth(witness)
    certified = validate_certificate(witness, cert)
    if args.json:
        document = {
            "schema_version": SCHEMA_VERSION,
            "input": print_ordinal(a),
            "witness": print_term(witness),
            "result": print_ordinal(result.value) if result.defined else None,
            "finitely_generated": attrs(witness).finitely_generated,
            "certified": certified,
        }
        print(json.dumps(document, indent=2))
    else:
        print(print_term(witness))
        print(emit_certificate(cert, "pretty"))
    if not certified or result.value != a:
        raise CertificationFailure("synthesized witness failed its round trip")
    return EXIT_OK


def _cmd_coresig(args) -> int:
    a = parse_ordinal(args.ordinal)
    signature = depth_to_core_signature(a)
    cls = ("trivial" if signature.core_class is CoreClass.TRIVIAL
           else "finite non-trivial")
    print(f"core index {print_ordinal(signature.core_index)}, {cls} core")
    return EXIT_OK


def _cmd_fundseq(args) -> int:
    a = parse_ordinal(args.ordinal)
    if args.count < 1:
        raise ValueError("--count must be at least 1")
    seq = fundamental_sequence(a)
    for n in range(1, args.count + 1):
        print(print_ordinal(seq.element(n)))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    arithmetic = exhaustive_compare_suite(args.bound)
    enumeration = term_enumeration_suite(args.height, SELFTEST_ATOMS)
    ok = arithmetic.ok and enumeration.ok
    if args.json:
        document = {
            "schema_version": SCHEMA_VERSION,
            "arithmetic": {
                "bound": arithmetic.bound,
                "case_pairs": arithmetic.case_pairs,
                "mul_cases": arithmetic.mul_cases,
                "first_mismatch": arithmetic.first_mismatch,
                "ok": arithmetic.ok,
            },
            "enumeration": {
                "height": enumeration.height,
                "atoms": list(enumeration.atoms),
                "terms_checked": enumeration.terms_checked,
                "defined": enumeration.defined,
                "undefined": enumeration.undefined,
                "inapplicable": enumeration.inapplicable,
                "violations": list(enumeration.violations),
                "ok": enumeration.ok,
            },
            "ok": ok,
        }
        print(json.dumps(document, indent=2))
    else:
        status = "ok" if arithmetic.ok else arithmetic.first_mismatch
        print(f"arithmetic oracle: bound={arithmetic.bound} "
              f"case_pairs={arithmetic.case_pairs} mul_cases={arithmetic.mul_cases} "
              f"{status}")
        print(f"term enumeration: {enumeration.summary()}")
        for violation in enumeration.violations:
            print(f"  violation: {violation}")
        print(f"selftest: {'PASS' if ok else 'FAIL'}")
    if args.report_dir:
        from .report import write_report

        for path in write_report(args.report_dir, arithmetic, enumeration):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_INTERNAL


_COMMANDS = {
    "classify": _cmd_classify,
    "depth": _cmd_depth,
    "synth": _cmd_synth,
    "coresig": _cmd_coresig,
    "fundseq": _cmd_fundseq,
    "selftest": _cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (NotRealizable, InvalidDepthShape, NotLimit) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SHAPE
    except RuleInapplicable as err:
        print(f"rule inapplicable: {err}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except Exception as err:  # noqa: BLE001 - the CLI boundary
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
