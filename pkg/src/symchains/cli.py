"""Command line front end.

Every subcommand prints a text document by default; --format json emits a
machine-readable equivalent and --format dot a Hasse diagram (decomposition
commands only).  Exit codes: 0 success, 1 a verification reported failures,
2 usage errors, malformed literals, or ceiling refusals.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import identities
from .boolean import (
    BooleanDecomposition,
    chain_of,
    debruijn_decomposition,
    decomposition_to_dot,
    decomposition_to_json,
    gk_decomposition,
    iterated_product_scd,
    verify_scd,
)
from .coding import encode
from .partitions import (
    build_partition_chains,
    enumerate_class,
    family_to_dot,
    family_to_json,
    verify_partition_chains,
)
from .reports import VerificationReport
from .subsets import DEFAULT_ENUM_CEILING, CeilingExceeded, Subset, match_parens, word_of

_BOOLEAN_METHODS = {
    "gk": gk_decomposition,
    "debruijn": debruijn_decomposition,
    "product": iterated_product_scd,
}


def _say(args: argparse.Namespace, text: str) -> None:
    if not args.quiet:
        print(text)


def _emit_json(args: argparse.Namespace, obj: object) -> None:
    if not args.quiet:
        print(json.dumps(obj, indent=2))


def _no_dot(args: argparse.Namespace) -> None:
    if args.format == "dot":
        raise ValueError("dot output is only available for decompose-boolean and decompose-partition")


def _boolean_decomposition(args: argparse.Namespace) -> BooleanDecomposition:
    ceiling = args.ceiling if args.ceiling is not None else DEFAULT_ENUM_CEILING
    return _BOOLEAN_METHODS[args.method](args.n, ceiling=ceiling)


def _report_out(args: argparse.Namespace, rep: VerificationReport, extra: dict) -> int:
    if args.format == "json":
        _emit_json(args, {**extra, **rep.to_json()})
    else:
        _say(args, f"ok: {'yes' if rep.ok else 'no'}")
        _say(args, f"elements: {rep.element_count}")
        _say(args, f"chains: {rep.chain_count}")
        for key, value in extra.items():
            if key not in ("n", "m"):
                _say(args, f"{key}: {value}")
        for kind, witness in rep.failures:
            _say(args, f"fail {kind}: {witness}")
    return 0 if rep.ok else 1


def _cmd_word(args: argparse.Namespace) -> int:
    _no_dot(args)
    s = Subset.from_literal(args.n, args.set)
    word = word_of(s)
    ms = match_parens(word)
    if args.format == "json":
        _emit_json(args, {
            "n": s.n,
            "set": list(s.elements),
            "word": word,
            "matched_pairs": [list(p) for p in ms.matched_pairs],
            "unmatched_rights": list(ms.unmatched_rights),
            "unmatched_lefts": list(ms.unmatched_lefts),
        })
    else:
        _say(args, word)
        _say(args, "matched: " + " ".join(f"({a},{b})" for a, b in ms.matched_pairs))
        _say(args, "unmatched-right: " + " ".join(str(p) for p in ms.unmatched_rights))
        _say(args, "unmatched-left: " + " ".join(str(p) for p in ms.unmatched_lefts))
    return 0


def _cmd_chain(args: argparse.Namespace) -> int:
    _no_dot(args)
    s = Subset.from_literal(args.n, args.set)
    chain = chain_of(s)
    if args.format == "json":
        _emit_json(args, {"n": s.n, "chain": [list(t.elements) for t in chain.sets]})
    else:
        for t in chain.sets:
            _say(args, t.literal())
    return 0


def _cmd_decompose_boolean(args: argparse.Namespace) -> int:
    d = _boolean_decomposition(args)
    if args.format == "json":
        _emit_json(args, decomposition_to_json(d))
    elif args.format == "dot":
        _say(args, decomposition_to_dot(d))
    else:
        for chain in d.chains:
            _say(args, " < ".join(s.literal() for s in chain.sets))
    return 0


def _cmd_code(args: argparse.Namespace) -> int:
    _no_dot(args)
    s = Subset.from_literal(args.n, args.set)
    code = encode(s)
    if args.format == "json":
        doc = {"n": s.n, "set": list(s.elements), "entries": list(code.entries)}
        if all(e <= 9 for e in code.entries):
            doc["compact"] = code.compact()
        _emit_json(args, doc)
    else:
        _say(args, code.compact() if args.compact else code.literal())
    return 0


def _cmd_class(args: argparse.Namespace) -> int:
    _no_dot(args)
    s = Subset.from_literal(args.n, args.set)
    kwargs = {} if args.ceiling is None else {"ceiling": args.ceiling}
    members = enumerate_class(s, **kwargs)
    if args.format == "json":
        _emit_json(args, {
            "n": s.n,
            "set": list(s.elements),
            "code": list(encode(s).entries),
            "type": [len(b) for b in members[0].blocks] if members else [],
            "partitions": [[list(block) for block in p.blocks] for p in members],
        })
    else:
        for p in members:
            _say(args, p.literal())
    return 0


def _cmd_decompose_partition(args: argparse.Namespace) -> int:
    kwargs = {} if args.ceiling is None else {"ceiling": args.ceiling}
    fam = build_partition_chains(args.n, **kwargs)
    if args.format == "json":
        _emit_json(args, family_to_json(fam))
    elif args.format == "dot":
        _say(args, family_to_dot(fam))
    else:
        for chain in fam.chains:
            _say(args, " < ".join(p.literal() for p in chain))
        _say(args, "excluded: " + " ".join(p.literal() for p in fam.excluded))
    return 0


def _cmd_verify_boolean(args: argparse.Namespace) -> int:
    _no_dot(args)
    d = _boolean_decomposition(args)
    return _report_out(args, verify_scd(d), {"n": args.n, "method": args.method})


def _cmd_verify_partition(args: argparse.Namespace) -> int:
    _no_dot(args)
    kwargs = {} if args.ceiling is None else {"ceiling": args.ceiling}
    fam = build_partition_chains(args.n, **kwargs)
    rep = verify_partition_chains(fam)
    return _report_out(args, rep, {"n": args.n, "excluded": len(fam.excluded)})


def _cmd_bell(args: argparse.Namespace) -> int:
    _no_dot(args)
    if args.method == "codes":
        kwargs = {} if args.ceiling is None else {"ceiling": args.ceiling}
        value = identities.bell_via_codes(args.n, **kwargs)
    else:
        value = identities.bell_oracle(args.n)
    if args.format == "json":
        _emit_json(args, {"n": args.n, "method": args.method, "value": value})
    else:
        _say(args, str(value))
    return 0


def _cmd_stirling(args: argparse.Namespace) -> int:
    _no_dot(args)
    row = identities.stirling_table(args.n).row(args.n)
    if args.format == "json":
        _emit_json(args, {"n": args.n, "row": list(row)})
    else:
        _say(args, " ".join(str(v) for v in row))
    return 0


def _cmd_stirling_check(args: argparse.Namespace) -> int:
    _no_dot(args)
    monotone_failures = []
    plain = []
    shifted = []
    for n in range(args.n + 1):
        rep = identities.check_stirling_monotone(n)
        monotone_failures.extend(rep.failures)
        audit = identities.check_stirling_symmetry(n)
        plain.extend((n, *c) for c in audit.reflection_counterexamples)
        shifted.extend((n, *c) for c in audit.shifted_counterexamples)
    ok = not monotone_failures and not shifted
    if args.format == "json":
        _emit_json(args, {
            "max_n": args.n,
            "monotone_ok": not monotone_failures,
            "monotone_failures": [list(f) for f in monotone_failures],
            "reflection_ok": not plain,
            "reflection_counterexamples": [list(c) for c in plain],
            "shifted_reflection_ok": not shifted,
            "shifted_reflection_counterexamples": [list(c) for c in shifted],
        })
    else:
        _say(args, f"monotone: {'ok' if not monotone_failures else 'FAIL'} (n <= {args.n})")
        for _, witness in monotone_failures:
            _say(args, f"  {witness}")
        if plain:
            _say(args, f"reflection k -> n-k: {len(plain)} counterexamples")
            for n, k, lhs, rhs in plain:
                _say(args, f"  S({n},{k})={lhs} < S({n},{n - k})={rhs}")
        else:
            _say(args, f"reflection k -> n-k: ok (n <= {args.n})")
        if shifted:
            _say(args, f"shifted reflection k -> n-k+1: {len(shifted)} counterexamples")
            for n, k, lhs, rhs in shifted:
                _say(args, f"  S({n},{k})={lhs} < S({n},{n - k + 1})={rhs}")
        else:
            _say(args, f"shifted reflection k -> n-k+1: ok (n <= {args.n})")
    return 0 if ok else 1


def _cmd_symfun(args: argparse.Namespace) -> int:
    _no_dot(args)
    kwargs = {} if args.ceiling is None else {"ceiling": args.ceiling}
    poly = identities.complete_from_elementary(args.n, **kwargs)
    agreement = None
    if args.check:
        agreement = poly == identities.complete_from_elementary_oracle(args.n)
    if args.format == "json":
        doc = {
            "n": args.n,
            "expansion": str(poly),
            "terms": [{"monomial": list(mono), "coefficient": coeff}
                      for mono, coeff in sorted(poly.terms.items())],
        }
        if agreement is not None:
            doc["oracle_match"] = agreement
        _emit_json(args, doc)
    else:
        _say(args, str(poly))
        if agreement is not None:
            _say(args, f"oracle agreement: {'ok' if agreement else 'FAIL'}")
    return 0 if agreement in (None, True) else 1


def _cmd_derivative_check(args: argparse.Namespace) -> int:
    _no_dot(args)
    order = args.n
    kwargs = {} if args.ceiling is None else {"ceiling": args.ceiling}
    bell = identities.exp_minus_one_series(max(order, 1))
    bell_values = []
    bell_ok = True
    for k in range(order + 1):
        formula = identities.derivative_formula(bell, k, **kwargs)
        oracle = identities.derivative_oracle(bell, k)
        bell_values.append(oracle)
        if formula != oracle or oracle != identities.bell_oracle(k):
            bell_ok = False
    seeded_ok = True
    for seed in identities.SERIES_SEEDS:
        g = identities.seeded_rational_series(seed, max(order, 1))
        for k in range(order + 1):
            if identities.derivative_formula(g, k, **kwargs) != identities.derivative_oracle(g, k):
                seeded_ok = False
    ok = bell_ok and seeded_ok
    if args.format == "json":
        _emit_json(args, {
            "max_order": order,
            "bell_values": [int(v) for v in bell_values],
            "bell_ok": bell_ok,
            "seeds": list(identities.SERIES_SEEDS),
            "seeded_ok": seeded_ok,
        })
    else:
        _say(args, "bell: " + " ".join(str(v) for v in bell_values))
        _say(args, f"bell agreement: {'ok' if bell_ok else 'FAIL'}")
        seeds = " ".join(str(s) for s in identities.SERIES_SEEDS)
        _say(args, f"seeded agreement: {'ok' if seeded_ok else 'FAIL'} (seeds {seeds})")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", "-f", choices=("text", "json", "dot"), default="text",
                        help="output format (dot only for decompositions)")
    common.add_argument("--ceiling", type=int, metavar="K",
                        help="override the enumeration size ceiling")
    common.add_argument("--quiet", "-q", action="store_true",
                        help="suppress output, keep exit codes")

    parser = argparse.ArgumentParser(prog="symchains",
                                     description="Symmetric chain decompositions of the "
                                                 "subset and partition lattices")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, **extra):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("word", _cmd_word, "parenthesis word and matching of a subset")
    p.add_argument("n", type=int)
    p.add_argument("set")

    p = add("chain", _cmd_chain, "the chain through a subset")
    p.add_argument("n", type=int)
    p.add_argument("set")

    p = add("decompose-boolean", _cmd_decompose_boolean, "decompose the subset lattice")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=sorted(_BOOLEAN_METHODS), default="gk")

    p = add("code", _cmd_code, "code of a subset")
    p.add_argument("n", type=int)
    p.add_argument("set")
    p.add_argument("--compact", action="store_true",
                   help="digit-string form (entries must all be single digits)")

    p = add("class", _cmd_class, "partitions in the class of a subset")
    p.add_argument("n", type=int)
    p.add_argument("set")

    p = add("decompose-partition", _cmd_decompose_partition,
            "chain family on partitions of {1..n+1}")
    p.add_argument("n", type=int)

    p = add("verify-boolean", _cmd_verify_boolean, "verify a subset-lattice decomposition")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=sorted(_BOOLEAN_METHODS), default="gk")

    p = add("verify-partition", _cmd_verify_partition, "verify the partition chain family")
    p.add_argument("n", type=int)

    p = add("bell", _cmd_bell, "Bell number")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("codes", "oracle"), default="codes")

    p = add("stirling", _cmd_stirling, "row n of the Stirling set-number triangle")
    p.add_argument("n", type=int)

    p = add("stirling-check", _cmd_stirling_check,
            "audit the Stirling inequalities for all rows up to n")
    p.add_argument("n", type=int)

    p = add("symfun", _cmd_symfun, "complete homogeneous function in the elementary ones")
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", help="compare against the recurrence oracle")

    p = add("derivative-check", _cmd_derivative_check,
            "compare the derivative code sum with the series oracle up to order n")
    p.add_argument("n", type=int)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except CeilingExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())
