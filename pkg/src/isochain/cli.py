"""Command-line interface: ``isochain <command> ...``.

Exit status: 0 on success, 1 when a requested check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import algebra, chain, counting, verify
from .errors import IsochainError
from .families import Family, default_ceiling, enumerate_family

FAMILY_IDS = [f.value for f in Family]


def _family(text):
    try:
        return Family.parse(text)
    except IsochainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(lines, out):
    for line in lines:
        out.write(line + "\n")


def _bool(value: bool) -> str:
    return "true" if value else "false"


# -- commands ---------------------------------------------------------------

def cmd_enumerate(args, out):
    elements = enumerate_family(args.family, args.n, fast=args.fast, ceiling=args.ceiling)
    if args.format == "text":
        _emit((chain.to_text(a) for a in elements), out)
    elif args.format == "json":
        _emit((chain.to_json(a) for a in elements), out)
    else:
        out.write("n,height,domain,image\n")
        for a in elements:
            dom = " ".join(map(str, a.domain))
            img = " ".join(map(str, a.image))
            out.write(f"{a.n},{a.height},{dom},{img}\n")
    return 0


def cmd_count(args, out):
    if args.by == "order":
        out.write(f"{counting.order(args.family, args.n, args.ceiling)}\n")
    elif args.by == "height":
        out.write(" ".join(map(str, counting.count_by_height(args.family, args.n, args.ceiling))) + "\n")
    else:
        out.write(" ".join(map(str, counting.count_by_fix(args.family, args.n, args.ceiling))) + "\n")
    return 0


def cmd_table(args, out):
    tri = counting.triangle(args.family, args.stat, args.max_n, args.ceiling)
    if args.format == "csv":
        out.write(tri.to_csv())
    elif args.format == "text":
        out.write(tri.to_text())
    else:
        out.write(tri.to_jsonl())
    return 0


def _class_lines(label, classes):
    yield f"{label} classes={len(classes)}"
    for cls in classes:
        yield "  " + " | ".join(str(a) for a in cls)


def cmd_greens(args, out):
    S = algebra.build_semigroup(args.family, args.n, args.ceiling)
    if args.starred:
        for rel in ("L*", "R*", "H*", "D*"):
            _emit(_class_lines(rel, algebra.starred_classes(S, rel)), out)
        idem = {S.elements[i] for i in S.idempotent_indices}
        _emit(
            [
                f"idempotents={len(idem)}",
                f"lstar_by_image={_bool(_starred_matches(S, 'L*', lambda a: frozenset(a.image)))}",
                f"rstar_by_domain={_bool(_starred_matches(S, 'R*', lambda a: frozenset(a.domain)))}",
            ],
            out,
        )
    else:
        for rel in "LRHDJ":
            _emit(_class_lines(rel, algebra.greens_classes(S, rel)), out)
    return 0


def _starred_matches(S, rel, key):
    classes = algebra.starred_classes(S, rel)
    return sorted(map(len, classes)) == sorted(
        map(len, _group(S.elements, key))
    ) and all(len({key(a) for a in cls}) == 1 for cls in classes)


def _group(elements, key):
    groups = {}
    for a in elements:
        groups.setdefault(key(a), []).append(a)
    return list(groups.values())


def property_report(S) -> dict:
    report = {"j_trivial": algebra.is_j_trivial(S)}
    bad = algebra.nonregular_witness(S)
    report["regular"] = bad is None
    if bad is not None:
        report["regular_witness"] = bad
    report["abundant"] = algebra.is_abundant(S)
    report["adequate"] = report["abundant"] and algebra.idempotents_commute(S)
    report["ample"] = report["adequate"] and algebra.ample_witness(S) is None
    ok, w = algebra.is_zero_e_unitary(S)
    report["zero_e_unitary"] = ok
    if w:
        report["witness_e"], report["witness_s"] = w
    ok, w = algebra.is_categorical(S)
    report["categorical"] = ok
    if w:
        report["witness_a"], report["witness_b"], report["witness_c"] = w
    return report


def _report_lines(report: dict):
    """Group each verdict with its witnesses on one ``key=value`` line."""
    line = None
    for key, value in report.items():
        text = _bool(value) if isinstance(value, bool) else str(value)
        if isinstance(value, bool):
            if line is not None:
                yield line
            line = f"{key}={text}"
        else:
            line += f" {key}={text}"
    if line is not None:
        yield line


def _report_record(report: dict) -> dict:
    return {
        k: (v if isinstance(v, bool) else (str(v) if v is algebra.ZERO else chain.to_record(v)))
        for k, v in report.items()
    }


def cmd_props(args, out):
    S = algebra.build_semigroup(args.family, args.n, args.ceiling)
    report = property_report(S)
    if args.format == "json":
        out.write(json.dumps(_report_record(report)) + "\n")
    else:
        _emit(_report_lines(report), out)
    return 0


def cmd_quotient(args, out):
    Q = algebra.rees_quotient(args.n, args.p, args.ceiling)
    out.write(f"nonzero_elements={len(Q.nonzero_elements)}\n")
    if not args.check:
        _emit((chain.to_text(a) for a in Q.nonzero_elements), out)
        return 0
    report = {"associative": algebra.is_associative(Q)}
    ok, w = algebra.is_zero_e_unitary(Q)
    report["zero_e_unitary"] = ok
    if w:
        report["witness_e"], report["witness_s"] = w
    ok, w = algebra.is_categorical(Q)
    report["categorical"] = ok
    if w:
        report["witness_a"], report["witness_b"], report["witness_c"] = w
    _emit(_report_lines(report), out)
    verdicts = [v for v in report.values() if isinstance(v, bool)]
    return 0 if all(verdicts) else 1


def cmd_verify(args, out):
    limit = default_ceiling() if args.ceiling is None else args.ceiling
    results = verify.run_suite(args.suite, min(args.max_n, limit))
    _emit((r.line() for r in results), out)
    failed = sum(not r.ok for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isochain",
        description="Exact enumeration of order-decreasing partial isometries of a finite chain.",
    )
    parser.add_argument(
        "--ceiling",
        type=int,
        default=None,
        help="largest chain size to enumerate (default: $ISOCHAIN_CEILING or 8)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_arg(p, required=True):
        p.add_argument("--family", type=_family, required=required, metavar="{" + ",".join(FAMILY_IDS) + "}")

    p = sub.add_parser("enumerate", help="list the elements of a family")
    family_arg(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--fast", action="store_true", help="use the structural generator (ddp/oddp only)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="height or fix histogram, or the order")
    family_arg(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--by", choices=["height", "fix", "order"], default="order")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="count triangle F(n;p) or F(n;m)")
    family_arg(p)
    p.add_argument("--stat", choices=["height", "fix"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "text", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("greens", help="Green's classes or starred classes")
    family_arg(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--starred", action="store_true")
    p.set_defaults(func=cmd_greens)

    p = sub.add_parser("props", help="structural property report")
    family_arg(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("quotient", help="Rees quotient Q(n, p) of ODDP_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--check", action="store_true", help="run the quotient's property checks")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=[*verify.SUITES, "all"], default="all")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (IsochainError, ValueError) as exc:
        print(f"isochain {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
