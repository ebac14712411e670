"""Command-line front end.

Subcommands: axioms, associated, complete, basis, mul, oracle-check,
render-term, selftest.  Output is deterministic plain text, one record per
line.  Exit codes: 0 success/pass, 1 check failure (axiom violation,
oracle mismatch, failed selftest), 2 input errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from .alphabet import Alphabet
from .errors import TriprodError
from .free_product import Family
from .gsb import complete
from .ncpoly import format_poly
from .replicated import Op, in_psi_image, ops_for_mode, psi_inverse_render
from .selftest import run_all
from .structures import associated_quotient, check_axioms, load_presentation, relations

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triprod",
        description="Exact free products of trioids, dimonoids and trialgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="check the defining identities of one presentation")
    p.add_argument("file", help="presentation JSON file")

    p = sub.add_parser(
        "associated",
        help="surviving letters and rewriting rules of the associative quotient",
    )
    p.add_argument("file")

    p = sub.add_parser(
        "complete", help="run critical-pair completion on the table relations"
    )
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="print one line per adjoined rule")

    p = sub.add_parser("basis", help="normal-form words of the free product")
    p.add_argument("files", nargs="+")
    p.add_argument("--t", type=int, required=True, choices=(2, 3))
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("mul", help="multiply two normal forms")
    p.add_argument("files", nargs="+")
    p.add_argument("--t", type=int, required=True, choices=(2, 3))
    p.add_argument("--op", required=True, choices=[o.value for o in Op])
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser(
        "oracle-check",
        help="compare closed-form products against the rewriting oracle on random pairs",
    )
    p.add_argument("files", nargs="+")
    p.add_argument("--t", type=int, required=True, choices=(2, 3))
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=6)

    p = sub.add_parser("render-term", help="decode a dotted word into its bracketed form")
    p.add_argument("word")
    p.add_argument("--t", type=int, required=True, choices=(2, 3))

    sub.add_parser("selftest", help="run every built-in acceptance criterion")

    return parser


def _load_family(paths, t: int) -> Family:
    return Family([load_presentation(p) for p in paths], t)


def _cmd_axioms(args) -> int:
    P = load_presentation(args.file)
    report = check_axioms(P)
    if report.ok:
        print(f"OK: {report.families} identity families, {report.instances} instances checked")
        return 0
    for v in report.violations:
        print(
            f"violated: {v.identity} at ({', '.join(v.triple)}): "
            f"lhs = {v.lhs}, rhs = {v.rhs}"
        )
    print(f"FAIL: {len(report.violations)} of {report.instances} instances violated")
    return 1


def _cmd_associated(args) -> int:
    P = load_presentation(args.file)
    t = P.natural_mode()
    report = check_axioms(P, t)
    if not report.ok:
        v = report.violations[0]
        print(f"error: {args.file}: violates {v.identity} at ({', '.join(v.triple)})", file=sys.stderr)
        return 1
    q = associated_quotient(P, t)
    alphabet = Alphabet()
    alphabet.add_family(P.name, P.elements)
    print(f"family: {P.name} ({P.kind}, {P.size} elements, t={t})")
    print("reps: " + " ".join(P.elements[r] for r in q.reps))
    for rule in q.rules.rules:
        print("rule: " + format_poly(rule, alphabet))
    for (x, y), comb in sorted(q.quotient_table().items()):
        value = " + ".join(
            (f"{c} {P.elements[s]}" if c != 1 else P.elements[s]) for s, c in comb
        ) or "0"
        print(f"product: {P.elements[x]} {P.elements[y]} = {value}")
    return 0


def _cmd_complete(args) -> int:
    P = load_presentation(args.file)
    t = P.natural_mode()
    report = check_axioms(P, t)
    if not report.ok:
        v = report.violations[0]
        print(f"error: {args.file}: violates {v.identity} at ({', '.join(v.triple)})", file=sys.stderr)
        return 1
    alphabet = Alphabet()
    alphabet.add_family(P.name, P.elements)
    result = complete(relations(P, t).phi)
    if args.trace:
        for ambiguity, rule in result.trace:
            print(
                f"trace: {alphabet.format_word(ambiguity)} => {format_poly(rule, alphabet)}"
            )
    print(f"status: {result.status}")
    for rule in result.system.rules:
        print("rule: " + format_poly(rule, alphabet))
    return 0


def _cmd_basis(args) -> int:
    family = _load_family(args.files, args.t)
    words = family.basis(args.max_len)
    if args.count_only:
        for n in range(1, args.max_len + 1):
            print(f"length {n}: {sum(1 for w in words if len(w) == n)}")
        print(f"total: {len(words)}")
    else:
        for w in words:
            print(family.alphabet.format_word(w))
    return 0


def _cmd_mul(args) -> int:
    family = _load_family(args.files, args.t)
    lhs = family.parse_element(args.lhs)
    rhs = family.parse_element(args.rhs)
    result = family.mul(Op(args.op), lhs, rhs)
    print(f"lhs: {family.format_element(lhs)}")
    print(f"rhs: {family.format_element(rhs)}")
    print(family.format_element(result))
    return 0


def _cmd_oracle_check(args) -> int:
    family = _load_family(args.files, args.t)
    rng = random.Random(args.seed)
    ops = ops_for_mode(args.t)
    mismatches = 0
    for _ in range(args.samples):
        u = family.random_element(rng, args.max_len)
        v = family.random_element(rng, args.max_len)
        for op in ops:
            fast = family.mul(op, u, v)
            slow = family.oracle_mul(op, u, v)
            if fast != slow:
                mismatches += 1
                print(
                    f"mismatch: {family.format_element(u)} {op} {family.format_element(v)}: "
                    f"{family.format_element(fast)} != {family.format_element(slow)}"
                )
    print(
        f"oracle-check: t={args.t} samples={args.samples} seed={args.seed} "
        f"mismatches={mismatches}"
    )
    return 1 if mismatches else 0


def _cmd_render_term(args) -> int:
    from .errors import InputError

    tokens = args.word.split()
    if not tokens:
        raise InputError("empty word")
    alphabet = Alphabet()
    families: dict[str, list[str]] = {}
    for tok in tokens:
        head, sep, tail = tok.partition(":")
        if not sep or not head or not tail:
            raise InputError(f"malformed letter {tok!r} (expected fam:gen or fam:.gen)")
        gen = tail[1:] if tail.startswith(".") else tail
        if not gen:
            raise InputError(f"malformed letter {tok!r}")
        families.setdefault(head, [])
        if gen not in families[head]:
            families[head].append(gen)
    for name, gens in families.items():
        alphabet.add_family(name, gens)
    word = alphabet.parse_word(args.word)
    if not word or not in_psi_image(word, args.t):
        raise InputError(f"word is not in the image for t={args.t}")
    print(psi_inverse_render(word, args.t).render(alphabet))
    return 0


def _cmd_selftest(_args) -> int:
    results = run_all()
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status} criterion {r.id}: {r.name} — {r.detail}")
    failed = sum(1 for r in results if not r.ok)
    print(f"selftest: {len(results) - failed}/{len(results)} criteria passed")
    return 1 if failed else 0


_COMMANDS = {
    "axioms": _cmd_axioms,
    "associated": _cmd_associated,
    "complete": _cmd_complete,
    "basis": _cmd_basis,
    "mul": _cmd_mul,
    "oracle-check": _cmd_oracle_check,
    "render-term": _cmd_render_term,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except TriprodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
