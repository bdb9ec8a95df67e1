"""``qshuffle`` command line.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
parse errors.  ``--format json`` (or ``QSHUFFLE_FORMAT=json``) switches every
subcommand to machine-readable output; the shapes are described by the JSON
schemas shipped in ``qshuffle/schemas``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from . import relations, series
from .grammar import ParseError, parse_element
from .shuffle import BACKEND, commutator_qk, shuffle
from .words import FreeElement, Word, classify, free_mul, truncate

FORMAT_ENV = "QSHUFFLE_FORMAT"


class UsageError(Exception):
    pass


def _emit(obj, args, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=None if args.compact else 2, sort_keys=False))
    else:
        print(text)


def _operands(args, count: int) -> List[FreeElement]:
    raw = list(args.operands or []) + list(args.expr or [])
    if len(raw) != count:
        raise UsageError(f"expected {count} operand(s), got {len(raw)}")
    return [parse_element(text) for text in raw]


def _word_arg(text: str) -> Word:
    try:
        return Word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_shuffle(args) -> int:
    a, b = _operands(args, 2)
    e = shuffle(a, b)
    _emit(e.to_json(), args, str(e))
    return 0


def cmd_free_mul(args) -> int:
    a, b = _operands(args, 2)
    e = free_mul(a, b)
    _emit(e.to_json(), args, str(e))
    return 0


def cmd_commutator(args) -> int:
    a, b = _operands(args, 2)
    e = commutator_qk(a, b, args.k)
    _emit(e.to_json(), args, str(e))
    return 0


def cmd_classify(args) -> int:
    results = [classify(_word_arg(w)) for w in args.words]
    if args.format == "json":
        payload = [c.to_json() for c in results]
        _emit(payload[0] if len(payload) == 1 else payload, args, "")
    else:
        lines = [c.label() if len(results) == 1 else f"{w}\t{c.label()}" for w, c in zip(args.words, results)]
        print("\n".join(lines))
    return 0


def cmd_truncate(args) -> int:
    (v,) = _operands(args, 1)
    e = truncate(args.side, args.letter, v)
    _emit(e.to_json(), args, str(e))
    return 0


def _print_reports(reports, args) -> None:
    if args.format == "json":
        _emit([r.to_json() for r in reports], args, "")
        return
    for r in reports:
        print(r.line())
        if not r.passed:
            print(f"  difference: {r.difference}")


def cmd_verify(args) -> int:
    try:
        fam = relations.get_family(args.family)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.params is not None:
        params = [int(p) for p in args.params.split(",")] if args.params else []
        reports = [relations.verify(fam.id, params)]
    else:
        bound = args.max
        if bound is None:
            bound = series.DEFAULT_ORDER if fam.kind == "series" else (3 if fam.arity == 2 else 4)
        reports = relations.verify_range(fam.id, bound, jobs=args.jobs)
    _print_reports(reports, args)
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify_all(args) -> int:
    b1 = args.bound if args.bound is not None else args.bound_one
    b2 = args.bound if args.bound is not None else args.bound_two
    tasks = []
    for fam in relations.CATALOG.values():
        if args.group and not fam.id.startswith(tuple(args.group)):
            continue
        if fam.kind == "series":
            bound = args.order
        elif fam.arity == 2:
            bound = b2
        else:
            bound = b1
        tasks += [(fam.id, p) for p in relations.parameter_tuples(fam.id, bound)]
    reports = relations.run_tasks(tasks, jobs=args.jobs)
    by_family = {}
    for r in reports:
        by_family.setdefault(r.id, []).append(r)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        _emit({
            "passed": ok,
            "families": len(by_family),
            "instances": len(reports),
            "reports": [r.to_json() for r in reports],
        }, args, "")
    else:
        width = max((len(fid) for fid in by_family), default=6)
        print(f"{'family':<{width}}  {'inst':>4}  {'fail':>4}  {'ms':>9}")
        for fid in sorted(by_family):
            rs = by_family[fid]
            fails = sum(not r.passed for r in rs)
            print(f"{fid:<{width}}  {len(rs):>4}  {fails:>4}  {sum(r.millis for r in rs):>9.1f}")
        failed = [r for r in reports if not r.passed]
        for r in failed:
            print(f"FAIL {r.id}{r.params}: {r.difference}")
        print(f"{len(by_family)} families, {len(reports)} instances, {len(failed)} failures ({BACKEND} kernel)")
    return 0 if ok else 1


def cmd_series(args) -> int:
    if args.identity:
        try:
            report = series.verify_series_identity(args.identity, args.order)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        _print_reports([report], args)
        return 0 if report.passed else 1
    if not args.names or len(args.names) > 2:
        raise UsageError("series takes one or two series names, or --identity")
    try:
        parts = [series.build_series(n, args.order) for n in args.names]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.neg_left:
        parts[0] = series.substitute_neg_t(parts[0])
    if args.neg_right:
        if len(parts) < 2:
            raise UsageError("--neg-right needs two series")
        parts[1] = series.substitute_neg_t(parts[1])
    s = parts[0] if len(parts) == 1 else series.star_series(*parts)
    _emit(s.to_json(), args, str(s))
    return 0


def cmd_catalog(args) -> int:
    fams = list(relations.CATALOG.values())
    if args.format == "json":
        _emit([{
            "id": f.id,
            "arity": f.arity,
            "kind": f.kind,
            "statement": f.statement,
            "source": f.source,
        } for f in fams], args, "")
    else:
        for f in fams:
            suffix = f"  [{f.note}]" if f.note else ""
            print(f"{f.id}\t{f.arity}\t{f.statement}{suffix}")
    return 0


def _add_operands(p: argparse.ArgumentParser, help_text: str) -> None:
    p.add_argument("operands", nargs="*", help=help_text)
    p.add_argument("--expr", action="append", help="operand in the element grammar, e.g. \"(q + q^-1)*xy - yx\"")


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in ("text", "json"):
        default_format = "text"
    # options are accepted before or after the subcommand; the subcommand copy
    # must not reset a value given before it
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=("text", "json"), default=default_format,
                     help=f"output format (default from ${FORMAT_ENV}, else text)")
    top.add_argument("--compact", action="store_true", default=False, help="single-line JSON")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--compact", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="qshuffle", description="Exact computation in the q-shuffle algebra.",
                                     parents=[top])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", parents=[common], help="q-shuffle product of two elements")
    _add_operands(p, "words or elements")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("free-mul", parents=[common], help="concatenation product of two elements")
    _add_operands(p, "words or elements")
    p.set_defaults(func=cmd_free_mul)

    p = sub.add_parser("commutator", parents=[common], help="[a, b]_{q^k} = q^k a*b - q^-k b*a")
    _add_operands(p, "words or elements")
    p.add_argument("--k", type=int, choices=(0, 1, 2), default=0)
    p.set_defaults(func=cmd_commutator)

    p = sub.add_parser("classify", parents=[common], help="decide membership in U and name the word family")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("truncate", parents=[common], help="strip a letter from one end of every word")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--letter", choices=("x", "y"), required=True)
    _add_operands(p, "word or element")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("verify", parents=[common], help="verify one catalog family")
    p.add_argument("--family", required=True)
    p.add_argument("--max", type=int, help="n <= MAX, i + j <= MAX, or series order MAX")
    p.add_argument("--params", help="a single comma-separated parameter tuple")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", parents=[common], help="verify the whole catalog")
    p.add_argument("--bound", type=int, help="bound for every parametrized family")
    p.add_argument("--bound-one", type=int, default=4, help="bound for one-parameter families (default 4)")
    p.add_argument("--bound-two", type=int, default=3, help="bound on i + j for two-parameter families (default 3)")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER, help="series truncation order (default 8)")
    p.add_argument("--group", action="append", help="only families whose id starts with this prefix")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("series", parents=[common], help="build, multiply or verify generating functions")
    p.add_argument("names", nargs="*", help="one or two of Gh, G, W-, W+")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p.add_argument("--neg-left", action="store_true", help="substitute -t into the first series")
    p.add_argument("--neg-right", action="store_true", help="substitute -t into the second series")
    p.add_argument("--identity", help="verify a generating-function identity, e.g. S6.1.1")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("catalog", parents=[common], help="list every identity family")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"qshuffle: parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"qshuffle: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
