"""Command line front end.

Predicates print ``true`` or ``false`` and exit 0 or 1 accordingly;
usage and data errors exit 2 with a one-line message on stderr.  File
arguments accept ``-`` for standard input.
"""

from __future__ import annotations

import argparse
import sys

from .braids import format_braid, table1_braid, table1_rows
from .homs import format_assignment, parse_assignment, search_homs, verify_hom
from .presentations import (
    abelianize,
    dyadic_form,
    format_presentation,
    parse_presentation,
    tietze_reduce,
    truncate,
)
from .qsubgroups import (
    heights_from_sequence,
    limit_member,
    parse_heights,
    parse_rational,
    q_isomorphic,
    q_member,
    sequence_from_heights,
)
from .schemes import (
    format_scheme,
    geometry_scheme,
    parse_choices,
    parse_scheme,
    trefoil_scheme,
    unknotted_scheme,
    validate_scheme,
)
from .sequences import format_sequence, homeomorphic, parse_sequence
from .words import ParseError


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _answer(ok: bool) -> int:
    print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_present(args: argparse.Namespace) -> int:
    scheme = parse_scheme(_read_text(args.scheme))
    p = truncate(scheme, args.level)
    if args.dyadic_form:
        p = dyadic_form(p)
    if args.reduce:
        p = tietze_reduce(p)
    print(format_presentation(p))
    return 0


def _cmd_abelianize(args: argparse.Namespace) -> int:
    p = parse_presentation(_read_text(args.presentation))
    invariants, classes = abelianize(p)
    print(f"rank {invariants.rank}")
    if invariants.torsion:
        print("torsion " + " ".join(str(d) for d in invariants.torsion))
    for g in p.generators:
        body = ", ".join(str(v) for v in classes[g])
        print(f"class {g} = ({body})")
    return 0


def _cmd_hom_verify(args: argparse.Namespace) -> int:
    p = parse_presentation(_read_text(args.presentation))
    assignment = parse_assignment(_read_text(args.assignment))
    return _answer(verify_hom(p, assignment))


def _cmd_hom_search(args: argparse.Namespace) -> int:
    p = parse_presentation(_read_text(args.presentation))
    result = search_homs(p, args.degree, args.budget)
    for assignment in result.assignments:
        print(format_assignment(assignment))
        print()
    print(f"found {len(result.assignments)}")
    if result.budget_exhausted:
        print("budget exhausted")
    return 0 if result.assignments else 1


def _cmd_sol_equiv(args: argparse.Namespace) -> int:
    return _answer(homeomorphic(parse_sequence(args.first), parse_sequence(args.second)))


def _cmd_q_member(args: argparse.Namespace) -> int:
    return _answer(q_member(parse_heights(args.descriptor), parse_rational(args.rational)))


def _cmd_limit_member(args: argparse.Namespace) -> int:
    return _answer(limit_member(parse_sequence(args.sequence), parse_rational(args.rational)))


def _cmd_q_iso(args: argparse.Namespace) -> int:
    return _answer(q_isomorphic(parse_heights(args.first), parse_heights(args.second)))


def _cmd_heights(args: argparse.Namespace) -> int:
    print(heights_from_sequence(parse_sequence(args.sequence)))
    return 0


def _cmd_seq_from_heights(args: argparse.Namespace) -> int:
    print(format_sequence(sequence_from_heights(parse_heights(args.descriptor))))
    return 0


def _cmd_scheme_unknotted(args: argparse.Namespace) -> int:
    print(format_scheme(unknotted_scheme(parse_sequence(args.sequence))))
    return 0


def _cmd_scheme_trefoil(args: argparse.Namespace) -> int:
    print(format_scheme(trefoil_scheme()))
    return 0


def _cmd_scheme_geometry(args: argparse.Namespace) -> int:
    scheme = geometry_scheme(parse_sequence(args.sequence), parse_choices(args.choices))
    print(format_scheme(scheme))
    return 0


def _cmd_table1(args: argparse.Namespace) -> int:
    if args.row is not None:
        n_text, sep, variant_text = args.row.partition(",")
        try:
            if not sep:
                raise ValueError
            key = (int(n_text), int(variant_text))
        except ValueError:
            raise ParseError("row looks like n,variant", args.row, 0) from None
        braid, volume = table1_braid(*key)
        rows = [(key[0], key[1], braid, volume)]
    else:
        rows = table1_rows()
    for n, variant, braid, volume in rows:
        print(f"{n},{variant} {format_braid(braid)} volume {volume}")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    diagnostics = validate_scheme(parse_scheme(_read_text(args.scheme)))
    for diagnostic in diagnostics:
        print(diagnostic)
    return 1 if any(d.severity == "error" for d in diagnostics) else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solbraid",
        description="Braided solenoid embeddings: presentations, invariants, classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", help="present a truncated complement")
    p.add_argument("scheme", help="scheme file, or - for stdin")
    p.add_argument("--level", type=int, required=True, help="truncation level L")
    p.add_argument("--dyadic-form", action="store_true", help="rewrite in the s/z normal form")
    p.add_argument("--reduce", action="store_true", help="apply Tietze simplification")
    p.set_defaults(func=_cmd_present)

    p = sub.add_parser("abelianize", help="first homology of a presented group")
    p.add_argument("presentation", help="presentation file, or - for stdin")
    p.set_defaults(func=_cmd_abelianize)

    p = sub.add_parser("hom-verify", help="check a permutation assignment")
    p.add_argument("presentation", help="presentation file, or - for stdin")
    p.add_argument("assignment", help="assignment file, or - for stdin")
    p.set_defaults(func=_cmd_hom_verify)

    p = sub.add_parser("hom-search", help="search for non-Abelian permutation images")
    p.add_argument("presentation", help="presentation file, or - for stdin")
    p.add_argument("--degree", type=int, required=True, help="permutation degree")
    p.add_argument("--budget", type=int, default=10**6, help="node budget")
    p.set_defaults(func=_cmd_hom_search)

    p = sub.add_parser("sol-equiv", help="are two solenoids homeomorphic?")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_sol_equiv)

    p = sub.add_parser("q-member", help="is a rational in the described subgroup?")
    p.add_argument("descriptor")
    p.add_argument("rational")
    p.set_defaults(func=_cmd_q_member)

    p = sub.add_parser("limit-member", help="is a rational in the sequence's limit group?")
    p.add_argument("sequence")
    p.add_argument("rational")
    p.set_defaults(func=_cmd_limit_member)

    p = sub.add_parser("q-iso", help="are two described subgroups isomorphic?")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_q_iso)

    p = sub.add_parser("heights", help="height descriptor of a sequence's limit group")
    p.add_argument("sequence")
    p.set_defaults(func=_cmd_heights)

    p = sub.add_parser("seq-from-heights", help="a sequence realizing a height descriptor")
    p.add_argument("descriptor")
    p.set_defaults(func=_cmd_seq_from_heights)

    p = sub.add_parser("scheme", help="build standard embedding schemes")
    scheme_sub = p.add_subparsers(dest="scheme_kind", required=True)
    q = scheme_sub.add_parser("unknotted", help="unknotted cables for a sequence")
    q.add_argument("sequence")
    q.set_defaults(func=_cmd_scheme_unknotted)
    q = scheme_sub.add_parser("trefoil", help="knotted dyadic example")
    q.set_defaults(func=_cmd_scheme_trefoil)
    q = scheme_sub.add_parser("geometry", help="hyperbolic-piece schemes for a sequence")
    q.add_argument("sequence")
    q.add_argument("--choices", required=True, help="variant bits, e.g. 01 or 1|0")
    q.set_defaults(func=_cmd_scheme_geometry)

    p = sub.add_parser("table1", help="built-in hyperbolic braid table")
    p.add_argument("--row", help="single row as n,variant")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("validate", help="diagnose an embedding scheme")
    p.add_argument("scheme", help="scheme file, or - for stdin")
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (OSError, ValueError, LookupError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
