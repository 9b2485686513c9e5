"""
Command-line front end.

Subcommands: fixed-points, restrict, class-table, monk, product, verify,
presentation.  Output is byte-deterministic for a fixed invocation: JSON is
emitted with sorted keys, polynomials in a fixed display grammar, subsets as
sorted comma-separated lists.  Exit status is 0 on success, 1 on a
verification failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .monk import (
    MonkExpansion,
    _basis_tables,
    monk_expand,
    ordinary_monk_expand,
    presentation,
    product_in_basis,
    structure_constant_via_tables,
)
from .peterson_classes import class_of, embedding_count_in_fixed_word, summand_factor
from .billey import p_restriction
from .polynomials import TPoly
from .subsets import (
    all_subsets,
    ascending_product,
    fixed_point,
    parse_subset,
    subset_csv,
    validate_subset,
)
from .verification import verify_ranks

USAGE_ERROR = 2


def _dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _subset_display(a: Sequence[int]) -> str:
    return "{" + subset_csv(a) + "}"


def _perm_display(w: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in w) + ")"


def _cmd_fixed_points(args) -> int:
    n = args.n
    entries = [(a, fixed_point(n, a)) for a in all_subsets(n)]
    if args.format == "json":
        data = [{"class": list(a), "w": list(w)} for a, w in entries]
        _emit(_dump_json(data), args.out)
    elif args.format == "csv":
        rows = [(subset_csv(a), " ".join(str(v) for v in w)) for a, w in entries]
        _emit(_csv_text(("class", "w"), rows), args.out)
    else:
        lines = [f"{_subset_display(a)} -> {_perm_display(w)}" for a, w in entries]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _restrict_value(n: int, a, b, oracle: bool) -> TPoly:
    if oracle:
        return p_restriction(ascending_product(n, a), b)
    if not set(a) <= set(b):
        return TPoly.zero()
    count = embedding_count_in_fixed_word(a, b)
    return TPoly.monomial(count * summand_factor(a, b), len(a))


def _cmd_restrict(args) -> int:
    n = args.n
    a = parse_subset(n, args.cls)
    b = parse_subset(n, args.at)
    value = _restrict_value(n, a, b, args.oracle)
    if args.format == "json":
        data = {"n": n, "class": list(a), "at": list(b), "value": str(value)}
        _emit(_dump_json(data), args.out)
    else:
        _emit(str(value) + "\n", args.out)
    return 0


def _cmd_class_table(args) -> int:
    n = args.n
    a = parse_subset(n, args.cls)
    cls = class_of(n, a, oracle=args.oracle)
    if args.format == "json":
        data = {
            "n": n,
            "class": list(a),
            "table": {subset_csv(b): str(v) for b, v in cls.table.items()},
        }
        _emit(_dump_json(data), args.out)
    elif args.format == "csv":
        _emit(_csv_text(("subset", "value"), cls.csv_rows()), args.out)
    else:
        lines = [f"{{{b}}}: {v}" for b, v in cls.csv_rows()]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _oracle_monk_expansion(n: int, i: int, a, ordinary: bool) -> MonkExpansion:
    tables = _basis_tables(n, oracle=True)
    terms = {}
    for k in range(1, n):
        if k in a:
            continue
        c = structure_constant_via_tables(n, i, a, k, tables)
        if c:
            terms[validate_subset(n, a + (k,))] = c
    diagonal = TPoly.zero() if ordinary else tables[(i,)].table[a]
    return MonkExpansion(n=n, i=i, index=a, diagonal=diagonal, terms=terms)


def _cmd_monk(args) -> int:
    n = args.n
    a = parse_subset(n, args.cls)
    if not 1 <= args.i <= n - 1:
        raise ValueError(f"generator index {args.i} out of range 1..{n - 1}")
    if args.oracle:
        expansion = _oracle_monk_expansion(n, args.i, a, args.ordinary)
    elif args.ordinary:
        expansion = ordinary_monk_expand(n, args.i, a)
    else:
        expansion = monk_expand(n, args.i, a)
    if args.format == "json":
        _emit(_dump_json(expansion.to_json()), args.out)
    else:
        _emit(expansion.text(ordinary=args.ordinary) + "\n", args.out)
    return 0


def _cmd_product(args) -> int:
    n = args.n
    left = parse_subset(n, args.left)
    right = parse_subset(n, args.right)
    expansion = product_in_basis(n, left, right, oracle=args.oracle)
    if args.format == "json":
        _emit(_dump_json(expansion.to_json()), args.out)
    else:
        _emit(expansion.text() + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    workers = args.parallel
    if workers == "auto":
        workers = os.cpu_count() or 1
    else:
        workers = int(workers)
        if workers < 1:
            raise ValueError("--parallel must be at least 1 or 'auto'")
    results = verify_ranks(args.n, max_n=args.max_n, workers=workers)
    ok = all(r.ok for r in results)
    if args.format == "json":
        data = [
            {"n": r.n, "check": r.name, "ok": r.ok, "detail": r.detail}
            for r in results
        ]
        _emit(_dump_json({"ok": ok, "results": data}), args.out)
    else:
        lines = [
            f"{'PASS' if r.ok else 'FAIL'} n={r.n} {r.name} ({r.detail})"
            for r in results
        ]
        lines.append("all checks passed" if ok else "verification FAILED")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def _cmd_presentation(args) -> int:
    n = args.n
    relations = presentation(n, equivariant=not args.ordinary, oracle=args.oracle)
    if args.format == "json":
        _emit(_dump_json([r.to_json() for r in relations]), args.out)
    else:
        lines = []
        for r in relations:
            suffix = "  [trivial]" if r.trivial else ""
            lines.append(r.text() + suffix)
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _add_common(parser, formats=("text", "json"), oracle=True) -> None:
    parser.add_argument("--format", choices=formats, default="text")
    parser.add_argument("--out", metavar="FILE", default=None)
    if oracle:
        parser.add_argument(
            "--oracle",
            action="store_true",
            help="force the restriction-sum path instead of the closed forms",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="peterson-schubert",
        description=(
            "Exact Schubert calculus for type A Peterson varieties: fixed "
            "points, restriction tables, Monk expansions, presentations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixed-points", help="list all fixed points at rank n")
    p.add_argument("n", type=int)
    _add_common(p, formats=("text", "json", "csv"), oracle=False)
    p.set_defaults(handler=_cmd_fixed_points)

    p = sub.add_parser("restrict", help="one restriction value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, metavar="A")
    p.add_argument("--at", required=True, metavar="B")
    _add_common(p)
    p.set_defaults(handler=_cmd_restrict)

    p = sub.add_parser("class-table", help="full restriction table of one class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, metavar="A")
    _add_common(p, formats=("text", "json", "csv"))
    p.set_defaults(handler=_cmd_class_table)

    p = sub.add_parser("monk", help="Monk expansion of p_i times a basis class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, metavar="A")
    p.add_argument("--ordinary", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_monk)

    p = sub.add_parser("product", help="expand a product of two basis classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--left", required=True, metavar="A")
    p.add_argument("--right", required=True, metavar="B")
    _add_common(p)
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--parallel", default="1", metavar="W", help="workers or 'auto'")
    _add_common(p, oracle=False)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("presentation", help="emit the ring relations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ordinary", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_presentation)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    n = getattr(args, "n", None)
    if n is not None and n < 2:
        print(f"error: rank must be at least 2, got {n}", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
