"""Command-line interface: ``binomverify {verify,trace,series,oracle}``.

Exit codes: 0 when everything verified/matched, 1 when at least one identity
failed mathematically, 2 for usage, parse and resource errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from binomverify import __version__
from binomverify.dsl import (
    DslError,
    identity_free_variables,
    parse_identity,
    parse_identity_file,
    verify_numeric,
    verify_poly,
)
from binomverify.dsl.verify import ERROR, FAILED, VERIFIED, VerificationReport
from binomverify.exact import PreconditionError, binom_integer, format_rational, parse_rational
from binomverify.identities import (
    IexInstance,
    enumeration_cap,
    iex_union_count_enum,
    iex_union_count_formula,
    proof_chain_trace,
)
from binomverify.series import newton_binomial_series, series_mul

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "--ell -5/2" through as a value rather than an unknown option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="binomverify",
        description="Exact verification of central-binomial convolution identities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    verify = sub.add_parser("verify", parents=[common], help="verify identities from the DSL")
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--expr", help="identity text, e.g. 'C(2,1) == 2'")
    source.add_argument("--file", help="file with one identity per line")
    verify.add_argument("--mode", choices=("numeric", "poly"), default="numeric")
    verify.add_argument("--assign", action="append", default=[], metavar="NAME=VALUE")
    verify.add_argument("--free", metavar="NAME", help="free symbol for poly mode")
    verify.add_argument("--range", action="append", default=[], metavar="NAME=LO..HI")

    trace = sub.add_parser("trace", parents=[common], help="evaluate each line of the derivation")
    trace.add_argument("--n", type=_nonneg_int, required=True)
    trace.add_argument("--ell", type=_rational_arg, required=True)

    series = sub.add_parser("series", parents=[common], help="coefficients of (1 + a x)^alpha")
    series.add_argument("--alpha", type=_rational_arg, required=True)
    series.add_argument("--a", type=_rational_arg, required=True)
    series.add_argument("--terms", type=_positive_int, required=True)
    series.add_argument("--square", action="store_true", help="print the Cauchy square instead")

    oracle = sub.add_parser("oracle", parents=[common], help="inclusion-exclusion count check")
    oracle.add_argument("--ell", type=_positive_int, required=True)
    which = oracle.add_mutually_exclusive_group(required=True)
    which.add_argument("--p", type=int)
    which.add_argument("--all", action="store_true", help="sweep p = 0..ell")
    return parser


# -- output helpers -----------------------------------------------------------


def _indent_json(value, level: int) -> str:
    text = json.dumps(value, indent=2)
    return text.replace("\n", "\n" + " " * level)


def _stream_json(out, head: dict, key: str, items: Iterable[dict], tail=None) -> None:
    """Write ``{**head, key: [items...], **tail()}`` as indented JSON, one item at a time.

    Output is identical to ``json.dumps(obj, indent=2)`` plus a newline.
    ``tail`` is a callable so it can summarize the items after they are consumed.
    """
    out.write("{\n")
    for name, value in head.items():
        out.write(f"  {json.dumps(name)}: {_indent_json(value, 2)},\n")
    out.write(f"  {json.dumps(key)}: [")
    first = True
    for item in items:
        out.write("\n" if first else ",\n")
        out.write("    " + _indent_json(item, 4))
        out.flush()
        first = False
    out.write("]" if first else "\n  ]")
    for name, value in (tail() if tail else {}).items():
        out.write(f",\n  {json.dumps(name)}: {_indent_json(value, 2)}")
    out.write("\n}\n")


def _format_assignments(env: dict) -> str:
    if not env:
        return "(none)"
    return ", ".join(f"{name}={format_rational(env[name])}" for name in sorted(env))


def _join(values) -> str:
    return ", ".join(format_rational(v) for v in values)


def render_report_text(report: VerificationReport) -> str:
    lines = [f"{report.status}: {report.identity}", f"  mode: {report.mode}"]
    lines.append(f"  assignments: {_format_assignments(report.assignments)}")
    if report.mode == "poly":
        lines.append(f"  free symbol: {report.free_symbol}")
        if report.degree_bound is not None:
            lines.append(f"  degree bound: {report.degree_bound}")
            lines.append(f"  points: {_join(report.points)}")
        if report.lhs_value is not None:
            lines.append(f"  lhs: {_join(report.lhs_value)}")
            lines.append(f"  rhs: {_join(report.rhs_value)}")
    elif report.lhs_value is not None:
        lines.append(f"  lhs: {format_rational(report.lhs_value)}")
        lines.append(f"  rhs: {format_rational(report.rhs_value)}")
    if report.counterexample is not None:
        ce = report.counterexample
        at = f"{report.free_symbol}={format_rational(ce.point)}: " if ce.point is not None else ""
        lines.append(
            f"  counterexample: {at}lhs {format_rational(ce.lhs)}, rhs {format_rational(ce.rhs)}"
        )
    if report.message:
        lines.append(f"  message: {report.message}")
    return "\n".join(lines) + "\n"


# -- verify -------------------------------------------------------------------


def _parse_assignments(items: Sequence[str]) -> dict:
    env = {}
    for item in items:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not _NAME_RE.match(name):
            raise UsageError(f"bad assignment {item!r}; expected NAME=VALUE")
        if name in env:
            raise UsageError(f"{name!r} assigned more than once")
        try:
            env[name] = parse_rational(value)
        except ValueError as exc:
            raise UsageError(f"bad value in assignment {item!r}: {exc}") from None
    return env


def _parse_ranges(items: Sequence[str]) -> dict:
    ranges = {}
    for item in items:
        name, sep, span = item.partition("=")
        name = name.strip()
        match = _RANGE_RE.match(span)
        if not sep or not _NAME_RE.match(name) or not match:
            raise UsageError(f"bad range {item!r}; expected NAME=LO..HI")
        lo, hi = int(match.group(1)), int(match.group(2))
        if lo > hi:
            raise UsageError(f"empty range {item!r}")
        if name in ranges:
            raise UsageError(f"{name!r} swept more than once")
        ranges[name] = (lo, hi)
    return ranges


def _load_identities(args) -> list:
    if args.expr is not None:
        return [parse_identity(args.expr)]
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    identities = parse_identity_file(text)
    if not identities:
        raise UsageError(f"no identities in {args.file}")
    return identities


def cmd_verify(args, out) -> int:
    assignments = _parse_assignments(args.assign)
    ranges = _parse_ranges(args.range)
    overlap = sorted(set(assignments) & set(ranges))
    if overlap:
        raise UsageError(f"both assigned and swept: {', '.join(overlap)}")
    if args.mode == "poly":
        if not args.free:
            raise UsageError("poly mode needs --free NAME")
        if not _NAME_RE.match(args.free):
            raise UsageError(f"bad symbol name {args.free!r}")
        if args.free in assignments or args.free in ranges:
            raise UsageError(f"free symbol {args.free!r} must not be assigned or swept")
    elif args.free:
        raise UsageError("--free only applies to --mode poly")

    identities = _load_identities(args)
    bound_names = set(assignments) | set(ranges) | ({args.free} if args.free else set())
    for identity in identities:
        missing = sorted(identity_free_variables(identity) - bound_names)
        if missing:
            raise UsageError(f"unassigned symbol(s) {', '.join(missing)} in: {identity.source}")

    names = list(ranges)
    combos = list(itertools.product(*(range(lo, hi + 1) for lo, hi in ranges.values())))
    counts = {VERIFIED: 0, FAILED: 0, ERROR: 0}

    def reports():
        for identity in identities:
            for combo in combos:
                env = {**assignments, **{n: Fraction(v) for n, v in zip(names, combo)}}
                if args.mode == "poly":
                    report = verify_poly(identity, args.free, env)
                else:
                    report = verify_numeric(identity, env)
                counts[report.status] += 1
                yield report

    if args.format == "json":
        head = {
            "command": "verify",
            "inputs": {
                "expr": args.expr,
                "file": args.file,
                "mode": args.mode,
                "assign": {n: format_rational(assignments[n]) for n in sorted(assignments)},
                "free": args.free,
                "ranges": {n: [lo, hi] for n, (lo, hi) in ranges.items()},
            },
        }
        _stream_json(out, head, "reports", (r.to_dict() for r in reports()), lambda: {"summary": dict(counts)})
    else:
        for report in reports():
            out.write(render_report_text(report))
            out.flush()
        total = sum(counts.values())
        out.write(
            f"{total} report(s): {counts[VERIFIED]} verified, "
            f"{counts[FAILED]} failed, {counts[ERROR]} error(s)\n"
        )
    if counts[ERROR]:
        return EXIT_USAGE
    return EXIT_FAILED if counts[FAILED] else EXIT_OK


# -- trace / series / oracle ----------------------------------------------------


def cmd_trace(args, out) -> int:
    trace = proof_chain_trace(args.n, args.ell, strict=True)
    if args.format == "json":
        head = {"command": "trace", "inputs": {"n": args.n, "ell": format_rational(args.ell)}}
        _stream_json(out, head, "reports", [trace.to_dict()])
    else:
        out.write(f"derivation chain at n={trace.n}, l={format_rational(trace.ell)} (strict)\n")
        for idx, (label, value) in enumerate(trace.lines, start=1):
            out.write(f"  {idx}. {label}: {format_rational(value)}\n")
        out.write(f"  inner sums: {_join(trace.inner_sums)}\n")
        out.write("VALID\n" if trace.valid else "INVALID\n")
    return EXIT_OK if trace.valid else EXIT_FAILED


def cmd_series(args, out) -> int:
    series = newton_binomial_series(args.alpha, args.a, args.terms)
    if args.square:
        series = series_mul(series, series)
    if args.format == "json":
        payload = {
            "command": "series",
            "inputs": {
                "alpha": format_rational(args.alpha),
                "a": format_rational(args.a),
                "terms": args.terms,
                "square": args.square,
            },
            **series.to_dict(),
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for n, c in enumerate(series.coefficients):
            out.write(f"{n}: {format_rational(c)}\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    try:
        if args.all:
            instances = [IexInstance(args.ell, p) for p in range(args.ell + 1)]
        else:
            instances = [IexInstance(args.ell, args.p)]
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    cap = enumeration_cap()
    for inst in instances:
        if inst.family_size > cap:
            raise UsageError(
                f"resource limit: C({inst.ell}, {inst.ell - inst.p}) = {inst.family_size} "
                f"subsets exceeds enumeration cap {cap}"
            )

    mismatches = 0

    def rows():
        nonlocal mismatches
        for inst in instances:
            enum = iex_union_count_enum(inst, cap=cap)
            formula = iex_union_count_formula(inst)
            expected = binom_integer(inst.ell, inst.p) - 1
            match = enum == formula == expected
            mismatches += not match
            yield {
                "ell": inst.ell,
                "p": inst.p,
                "enum": enum,
                "formula": formula,
                "expected": expected,
                "match": match,
            }

    if args.format == "json":
        head = {"command": "oracle", "inputs": {"ell": args.ell, "p": args.p, "all": args.all}}
        _stream_json(out, head, "reports", rows(), lambda: {"all_match": mismatches == 0})
    else:
        out.write(f"{'ell':>5} {'p':>5} {'enum':>10} {'formula':>10} {'C(ell,p)-1':>12}  match\n")
        for row in rows():
            out.write(
                f"{row['ell']:>5} {row['p']:>5} {row['enum']:>10} {row['formula']:>10} "
                f"{row['expected']:>12}  {'yes' if row['match'] else 'no'}\n"
            )
        verdict = "all rows match" if mismatches == 0 else f"{mismatches} row(s) mismatch"
        out.write(f"{len(instances)} row(s): {verdict}\n")
    return EXIT_OK if mismatches == 0 else EXIT_FAILED


COMMANDS = {
    "verify": cmd_verify,
    "trace": cmd_trace,
    "series": cmd_series,
    "oracle": cmd_oracle,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except (UsageError, DslError, PreconditionError) as exc:
        sys.stdout.flush()
        print(f"binomverify {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
