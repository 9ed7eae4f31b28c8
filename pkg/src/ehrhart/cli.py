"""Command-line front end.

Exit status: 0 success, 1 usage or input error, 2 computation error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence, TextIO

from . import constructions
from .characterization import InconsistencyError, theorem3_report
from .engine import (
    FitError,
    default_horizon,
    fit_quasipolynomial,
    period_report_from_qp,
    sample_counts,
    verify_reciprocity,
)
from .enumeration import EnumerationLimitError, count_boundary, count_closed, count_interior
from .polytope import (
    DegenerateError,
    PolytopeError,
    RationalPolytope,
    denominator,
    format_polytope,
    parse_polytope,
)
from .quasipoly import format_quasipolynomial
from . import reports

CELL_LIMIT_ENV = "EHRHART_CELL_LIMIT"

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _add_construction_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--D", type=_positive, help="denominator parameter")
    p.add_argument("--s", type=_positive, help="period parameter (divides D)")
    p.add_argument("--dim", type=_positive, help="dimension of a prism")
    p.add_argument("--id", type=_positive, help="example number (1, 2 or 3)")


def _add_common(p: argparse.ArgumentParser, with_source: bool = True) -> None:
    if with_source:
        p.add_argument("file", nargs="?", help="polytope file ('-' for stdin)")
        p.add_argument("--construction", choices=constructions.CONSTRUCTIONS,
                       help="use a named construction instead of a file")
        _add_construction_params(p)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--cell-limit", type=_positive,
                   help=f"enumeration cell limit (default from ${CELL_LIMIT_ENV} or 10^8)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ehrhart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("count", help="count lattice points in nP")
    _add_common(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mode", choices=("closed", "interior", "boundary"), default="closed")

    p = sub.add_parser("fit", help="fit the Ehrhart quasi-polynomial")
    _add_common(p)
    p.add_argument("--max-n", type=_positive)

    p = sub.add_parser("period", help="denominator, minimal period, coefficient periods")
    _add_common(p)

    p = sub.add_parser("reciprocity", help="check interior counts against q(-n)")
    _add_common(p)
    p.add_argument("--max-n", type=_positive)

    p = sub.add_parser("characterize", help="polynomiality test for polygons")
    _add_common(p)

    p = sub.add_parser("construct", help="write a construction as a polytope file")
    p.add_argument("name", choices=constructions.CONSTRUCTIONS)
    _add_construction_params(p)
    p.add_argument("--out", help="output file (default: stdout)")
    _add_common(p, with_source=False)
    return parser


def _cell_limit(args) -> int | None:
    if args.cell_limit is not None:
        return args.cell_limit
    raw = os.environ.get(CELL_LIMIT_ENV)
    if raw is None:
        return None
    try:
        return _positive(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"${CELL_LIMIT_ENV}: {exc}") from None


def _construction(args, name: str) -> constructions.ConstructionSpec:
    try:
        return constructions.build(name, D=args.D, s=args.s, dim=args.dim, id=args.id)
    except constructions.ConstructionError as exc:
        raise UsageError(str(exc)) from None


def _load_source(args, stdin: TextIO) -> RationalPolytope:
    has_params = any(getattr(args, k) is not None for k in ("D", "s", "dim", "id"))
    if (args.file is None) == (args.construction is None):
        raise UsageError("give exactly one source: a polytope file or --construction")
    if args.construction is not None:
        return _construction(args, args.construction).polytope
    if has_params:
        raise UsageError("--D/--s/--dim/--id only apply with --construction")
    try:
        if args.file == "-":
            text = stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        return parse_polytope(text)
    except DegenerateError:
        raise
    except PolytopeError as exc:
        raise UsageError(f"{args.file}: {exc}") from None


def _horizon(args, P: RationalPolytope) -> int:
    D, d = denominator(P), P.ambient_dim
    if args.max_n is None:
        return default_horizon(D, d)
    if args.max_n < D * (d + 1):
        raise UsageError(f"--max-n must be at least D*(dim+1) = {D * (d + 1)}")
    return args.max_n


def _dispatch(args, stdin: TextIO, out: TextIO) -> int:
    limit = _cell_limit(args)
    structured = args.format == "structured"

    if args.command == "construct":
        spec = _construction(args, args.name)
        params = " ".join(f"{k}={v}" for k, v in spec.parameters.items())
        expected_lines = format_quasipolynomial(spec.expected).splitlines()
        comments = [f"construction {spec.name} {params}".rstrip(), "expected:"]
        comments += [f"  {line}" for line in expected_lines]
        text = format_polytope(spec.polytope, comments)
        if args.out is None:
            out.write(text)
            return EXIT_OK
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
        if structured:
            out.write("\n".join(reports.structured_quasipolynomial(spec.expected)) + "\n")
        else:
            out.write(format_quasipolynomial(spec.expected) + "\n")
        return EXIT_OK

    P = _load_source(args, stdin)

    if args.command == "count":
        counter = {"closed": count_closed, "interior": count_interior,
                   "boundary": count_boundary}[args.mode]
        value = counter(P, args.n, limit)
        out.write(reports.structured_count(value, args.n, args.mode) if structured
                  else f"{value}\n")
        return EXIT_OK

    if args.command == "fit":
        q = fit_quasipolynomial(sample_counts(P, _horizon(args, P), limit),
                                P.ambient_dim, denominator(P))
        out.write("\n".join(reports.structured_quasipolynomial(q)) + "\n" if structured
                  else format_quasipolynomial(q) + "\n")
        return EXIT_OK

    if args.command == "period":
        D = denominator(P)
        q = fit_quasipolynomial(sample_counts(P, default_horizon(D, P.ambient_dim), limit),
                                P.ambient_dim, D)
        report = period_report_from_qp(D, q)
        out.write(reports.structured_period_report(report) if structured
                  else reports.render_period_report(report))
        return EXIT_OK

    if args.command == "reciprocity":
        N = _horizon(args, P)
        q = fit_quasipolynomial(sample_counts(P, N, limit), P.ambient_dim, denominator(P))
        result = verify_reciprocity(P, q, N, limit)
        out.write(reports.structured_reciprocity(result, N) if structured
                  else reports.render_reciprocity(result, N))
        return EXIT_OK if result.ok else EXIT_INVARIANT

    if args.command == "characterize":
        report = theorem3_report(P, limit)
        out.write(reports.structured_characterization(report) if structured
                  else reports.render_characterization(report))
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


def run(argv: Sequence[str], stdin: TextIO | None = None,
        out: TextIO | None = None, err: TextIO | None = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
        return _dispatch(args, stdin, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (EnumerationLimitError, DegenerateError, FitError, PolytopeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_COMPUTE
    except InconsistencyError as exc:
        err.write(f"internal invariant violated: {exc}\n")
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
