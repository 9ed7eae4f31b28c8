"""Text and structured renderings of reports, and parsers for the latter.

Structured output is line oriented: each line is a key followed by
space-separated values. Rationals are written ``p/q`` (integers bare),
booleans ``yes``/``no``. Repeated keys (``constituent``, ``row``,
``failure``) form arrays in order. See README.md for every key.
"""

from __future__ import annotations

from .characterization import CharacterizationReport, DilateRow
from .engine import PeriodReport, ReciprocityResult
from .quasipoly import (
    Polynomial,
    QuasiPolynomial,
    format_polynomial,
    format_quasipolynomial,
    format_rational,
    parse_rational,
)


class ReportParseError(ValueError):
    pass


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _coeffs(p: Polynomial, d: int | None) -> str:
    size = max(len(p.coefficients), (d + 1) if d is not None else 0, 1)
    return " ".join(format_rational(p.coefficient(k)) for k in range(size))


# -- text ------------------------------------------------------------------


def render_period_report(r: PeriodReport) -> str:
    lines = [
        f"denominator {r.denominator}, minimal period {r.minimal_period}, "
        f"collapse: {_yn(r.collapse)}",
        "coefficient periods: " + " ".join(str(s) for s in r.coefficient_periods),
        format_quasipolynomial(r.quasipolynomial),
    ]
    return "\n".join(lines) + "\n"


def render_characterization(r: CharacterizationReport) -> str:
    header = ("n", "count", "boundary", "pick", "linear")
    table = [header] + [
        (str(row.n), str(row.count), str(row.boundary), _yn(row.pick_holds),
         _yn(row.linear_holds))
        for row in r.rows
    ]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    lines = [f"area {format_rational(r.area)}, denominator {r.denominator}"]
    lines += ["  ".join(c.rjust(w) for c, w in zip(line, widths)).rstrip() for line in table]
    lines += [
        f"pick and linear boundary for n = 1..{r.denominator}: "
        + ("hold" if r.verdict_conditions else "fail"),
        f"minimal period: {r.minimal_period}",
        f"predicted: {format_polynomial(r.predicted)}",
        "fitted:",
        format_quasipolynomial(r.fitted),
        "verdict: " + ("polynomial" if r.verdict_polynomial else "NOT polynomial"),
    ]
    return "\n".join(lines) + "\n"


def render_reciprocity(res: ReciprocityResult, N: int) -> str:
    lines = [f"reciprocity n = 1..{N}: " + ("pass" if res.ok else "FAIL")]
    for n, lhs, rhs in res.failures:
        lines.append(f"  n = {n}: interior {lhs} != {format_rational(rhs)}")
    return "\n".join(lines) + "\n"


# -- structured ------------------------------------------------------------


def structured_quasipolynomial(q: QuasiPolynomial) -> list[str]:
    d = q.dimension_hint
    lines = [f"period {q.period}", f"dimension {d if d is not None else '-'}"]
    lines += [f"constituent {j} {_coeffs(f, d)}" for j, f in enumerate(q.constituents, 1)]
    return lines


def structured_period_report(r: PeriodReport) -> str:
    lines = [
        "report period",
        f"denominator {r.denominator}",
        f"minimal_period {r.minimal_period}",
        f"collapse {_yn(r.collapse)}",
        "coefficient_periods " + " ".join(str(s) for s in r.coefficient_periods),
    ] + structured_quasipolynomial(r.quasipolynomial)
    return "\n".join(lines) + "\n"


def structured_characterization(r: CharacterizationReport) -> str:
    lines = [
        "report characterize",
        f"area {format_rational(r.area)}",
        f"denominator {r.denominator}",
    ]
    lines += [
        f"row {row.n} {row.count} {row.boundary} {_yn(row.pick_holds)} {_yn(row.linear_holds)}"
        for row in r.rows
    ]
    lines += [
        f"verdict_conditions {_yn(r.verdict_conditions)}",
        f"verdict_polynomial {_yn(r.verdict_polynomial)}",
        f"matches_predicted {_yn(r.matches_predicted)}",
        f"predicted {_coeffs(r.predicted, 2)}",
    ] + structured_quasipolynomial(r.fitted)
    return "\n".join(lines) + "\n"


def structured_reciprocity(res: ReciprocityResult, N: int) -> str:
    lines = ["report reciprocity", f"horizon {N}", f"ok {_yn(res.ok)}"]
    lines += [f"failure {n} {lhs} {format_rational(rhs)}" for n, lhs, rhs in res.failures]
    return "\n".join(lines) + "\n"


def _records(text: str) -> list[tuple[str, list[str]]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            key, *values = line.split()
            out.append((key, values))
    return out


def _single(records, key: str) -> list[str]:
    found = [v for k, v in records if k == key]
    if len(found) != 1:
        raise ReportParseError(f"expected exactly one {key!r} line, found {len(found)}")
    return found[0]


def _flag(value: str) -> bool:
    if value not in ("yes", "no"):
        raise ReportParseError(f"expected yes/no, got {value!r}")
    return value == "yes"


def _parse_qp(records) -> QuasiPolynomial:
    period = int(_single(records, "period")[0])
    dim_field = _single(records, "dimension")[0]
    dim = None if dim_field == "-" else int(dim_field)
    rows = [v for k, v in records if k == "constituent"]
    if [int(v[0]) for v in rows] != list(range(1, period + 1)):
        raise ReportParseError("constituent lines must be numbered 1..period")
    return QuasiPolynomial(
        period, tuple(Polynomial(tuple(parse_rational(c) for c in v[1:])) for v in rows), dim
    )


def _check_kind(records, kind: str) -> None:
    if _single(records, "report") != [kind]:
        raise ReportParseError(f"not a {kind} report")


def parse_period_report(text: str) -> PeriodReport:
    records = _records(text)
    _check_kind(records, "period")
    report = PeriodReport(
        int(_single(records, "denominator")[0]),
        int(_single(records, "minimal_period")[0]),
        tuple(int(s) for s in _single(records, "coefficient_periods")),
        _parse_qp(records),
    )
    if report.collapse != _flag(_single(records, "collapse")[0]):
        raise ReportParseError("collapse flag contradicts the periods")
    return report


def parse_characterization(text: str) -> CharacterizationReport:
    records = _records(text)
    _check_kind(records, "characterize")
    rows = tuple(
        DilateRow(int(v[0]), int(v[1]), int(v[2]), _flag(v[3]), _flag(v[4]))
        for k, v in records
        if k == "row"
    )
    return CharacterizationReport(
        area=parse_rational(_single(records, "area")[0]),
        denominator=int(_single(records, "denominator")[0]),
        rows=rows,
        verdict_conditions=_flag(_single(records, "verdict_conditions")[0]),
        verdict_polynomial=_flag(_single(records, "verdict_polynomial")[0]),
        matches_predicted=_flag(_single(records, "matches_predicted")[0]),
        predicted=Polynomial(tuple(parse_rational(c) for c in _single(records, "predicted"))),
        fitted=_parse_qp(records),
    )


def parse_reciprocity(text: str) -> ReciprocityResult:
    records = _records(text)
    _check_kind(records, "reciprocity")
    failures = tuple(
        (int(v[0]), int(v[1]), parse_rational(v[2])) for k, v in records if k == "failure"
    )
    return ReciprocityResult(_flag(_single(records, "ok")[0]), tuple(failures))


def structured_count(value: int, n: int, mode: str) -> str:
    return f"report count\nmode {mode}\nn {n}\nvalue {value}\n"

