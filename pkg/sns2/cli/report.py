import time
import typing

import msgspec
from fntypes.option import Nothing, Option, Some

from sns2.cli.inputs import AnalysisInput
from sns2.compound.compound import det2
from sns2.compound.minor_sums import MinorSums, minor_sums, singular_factorization
from sns2.compound.resultant import resultant_sign
from sns2.error import ResultantUndefinedError
from sns2.model import Model
from sns2.modules import logger
from sns2.poly.multipoly import MultiPoly, has_mixed_terms, term_census
from sns2.polytope.newton import NewtonPolytope, newton_polytope
from sns2.rules.context import PatternContext
from sns2.rules.ladder import classify, classify_det2, is_indef2_case
from sns2.rules.sign import EXPRESSION_WITNESS_BUDGET, sign_of_expression
from sns2.rules.verdict import Classification2, SignClass3
from sns2.signpat.digraph import weakly_reversible_core

# Reports list polynomials in full only up to this many terms.
TEXT_TERM_LIMIT: typing.Final[int] = 64


class InputReport(Model):
    path: str
    kind: str
    n: int
    arity: int
    pattern: list[str] | None = None
    core: bool = False
    dropped_entries: list[list[int]] | None = None


class MinorSumReport(Model):
    index: int
    terms: int
    positive: int
    negative: int
    sign_class: SignClass3
    text: str | None = None


class Det2Report(Model):
    degree: int
    homogeneous: bool
    terms: int
    positive: int
    negative: int
    mixed_terms: bool
    mixed_vertices: bool | None
    text: str | None = None


class PolytopeReport(Model):
    points: int
    vertices: list[str]
    non_vertices: list[str]
    mixed_vertices: bool


class FactorizationReport(Model):
    factor: str
    cofactor: str


class TimingReport(Model):
    seconds: float


class AnalysisReport(Model):
    version: str
    input: InputReport
    minor_sums: list[MinorSumReport]
    det2: Det2Report
    polytope: PolytopeReport | None
    classification: Classification2
    singular_factorization: FactorizationReport | None
    resultant_sign: int | None
    cycle_census: dict[str, int] | None
    indef2_case: bool
    timing: TimingReport | None = None


def _text(p: MultiPoly) -> str | None:
    return p.to_text() if len(p) <= TEXT_TERM_LIMIT else None


def _minor_sum_reports(minors: MinorSums, seed: int) -> list[MinorSumReport]:
    reports = []
    for index, value in enumerate(minors, start=1):
        positive, negative = term_census(value)
        reports.append(
            MinorSumReport(
                index=index,
                terms=len(value),
                positive=positive,
                negative=negative,
                sign_class=sign_of_expression(value, budget=EXPRESSION_WITNESS_BUDGET, seed=seed),
                text=_text(value),
            )
        )
    return reports


def _polytope_report(polytope: NewtonPolytope) -> PolytopeReport:
    return PolytopeReport(
        points=len(polytope.points),
        vertices=[m.to_text() or "1" for m in polytope.vertices()],
        non_vertices=[m.to_text() or "1" for m in polytope.non_vertices()],
        mixed_vertices=len(polytope.vertex_signs()) == 2,
    )


def _resultant_sign(minors: MinorSums) -> Option[int]:
    if minors.n < 2:
        return Nothing()
    try:
        return Some(resultant_sign(minors))
    except ResultantUndefinedError:
        return Nothing()


def _census_key(length: int, parity: int) -> str:
    return "{}:{}".format(length, "even" if parity == 1 else "odd")


def build_report(
    source: AnalysisInput,
    *,
    version: str,
    witness_budget: int,
    seed: int,
    witness: bool = True,
    core: bool = False,
    timing: bool = True,
) -> AnalysisReport:
    """Run the full pipeline on one input: minor-sums, det2, polytope, rules ladder."""
    started = time.perf_counter()
    dropped: list[list[int]] | None = None
    if core and source.pattern is not None:
        reduced = weakly_reversible_core(source.pattern)
        dropped = [[i, j] for i, j, _ in source.pattern.entries() if not reduced[i, j]]
        source = source.with_pattern(reduced)

    ctx: PatternContext | None = None
    if source.pattern is not None:
        ctx = PatternContext(source.pattern, witness_budget=witness_budget, seed=seed)
        minors, p = ctx.minors, ctx.det2
    else:
        minors, p = minor_sums(source.matrix), det2(source.matrix)

    polytope = None if p.is_zero() else (ctx.polytope if ctx is not None else newton_polytope(p))
    if ctx is not None:
        classification = classify(ctx, witness=witness)
    else:
        classification = classify_det2(p, witness_budget=witness_budget, seed=seed, witness=witness)

    positive, negative = term_census(p)
    factorization = None
    match singular_factorization(minors):
        case Some(found):
            factorization = FactorizationReport(factor=found.factor.to_text(), cofactor=found.cofactor.to_text())

    report = AnalysisReport(
        version=version,
        input=InputReport(
            path=source.path,
            kind=source.kind.value,
            n=source.matrix.n,
            arity=source.matrix.arity,
            pattern=None if source.pattern is None else source.pattern.to_text().splitlines(),
            core=core and source.pattern is not None,
            dropped_entries=dropped,
        ),
        minor_sums=_minor_sum_reports(minors, seed),
        det2=Det2Report(
            degree=p.degree,
            homogeneous=p.is_homogeneous(),
            terms=len(p),
            positive=positive,
            negative=negative,
            mixed_terms=has_mixed_terms(p),
            mixed_vertices=None if polytope is None else len(polytope.vertex_signs()) == 2,
            text=_text(p),
        ),
        polytope=None if polytope is None else _polytope_report(polytope),
        classification=classification,
        singular_factorization=factorization,
        resultant_sign=_resultant_sign(minors).unwrap_or_none(),
        cycle_census=(
            None
            if ctx is None
            else {_census_key(length, parity): count for (length, parity), count in ctx.census.items()}
        ),
        indef2_case=is_indef2_case(p, polytope),
    )
    if report.indef2_case:
        logger.warning(
            "{}: det2 has mixed terms but one-signed vertices ({})",
            source.path,
            classification.verdict.value,
        )
    if timing:
        elapsed = TimingReport(seconds=round(time.perf_counter() - started, 6))
        report = msgspec.structs.replace(report, timing=elapsed)
    return report


def render_text(report: AnalysisReport) -> str:
    lines = [
        "sns2 {} :: {} ({}, n={}, arity={})".format(
            report.version,
            report.input.path,
            report.input.kind,
            report.input.n,
            report.input.arity,
        )
    ]
    if report.input.pattern is not None:
        lines.extend(f"  {row}" for row in report.input.pattern)
    if report.input.dropped_entries:
        dropped = ", ".join(f"({i + 1},{j + 1})" for i, j in report.input.dropped_entries)
        lines.append(f"core: dropped entries {dropped}")
    for j in report.minor_sums:
        lines.append(
            "J{}: {} terms (+{} / -{}) {}".format(j.index, j.terms, j.positive, j.negative, j.sign_class.value)
        )
    d = report.det2
    lines.append(
        "det2: degree {}, {} terms (+{} / -{}){}".format(
            d.degree,
            d.terms,
            d.positive,
            d.negative,
            ", homogeneous" if d.homogeneous else "",
        )
    )
    if d.text is not None:
        lines.append(f"  = {d.text}")
    if report.polytope is not None:
        lines.append(
            "polytope: {} points, {} vertices, mixed vertices: {}".format(
                report.polytope.points,
                len(report.polytope.vertices),
                "yes" if report.polytope.mixed_vertices else "no",
            )
        )
        if report.polytope.non_vertices:
            lines.append("  non-vertices: {}".format(", ".join(report.polytope.non_vertices)))
    if report.singular_factorization is not None:
        f = report.singular_factorization
        lines.append(f"J{report.input.n} = 0: det2 = ({f.factor}) * ({f.cofactor})")
    if report.resultant_sign is not None:
        lines.append(f"Res(P, Q) = {report.resultant_sign:+d} * q_n")
    if report.cycle_census:
        lines.append("cycles: {}".format(", ".join(f"{k}={v}" for k, v in report.cycle_census.items())))
    lines.append(f"verdict: {report.classification.verdict.value}")
    for e in report.classification.evidence:
        lines.append(f"  [{e.rule_id}] {e.claim.value}: {e.statement}")
    if report.classification.witnesses is not None:
        w = report.classification.witnesses
        lines.append("  witnesses ({}): + {} / - {}".format(w.kind, " ".join(w.positive), " ".join(w.negative)))
    if report.indef2_case:
        lines.append("note: mixed terms without mixed vertices")
    if report.timing is not None:
        lines.append(f"time: {report.timing.seconds:.3f}s")
    return "\n".join(lines)


__all__ = (
    "TEXT_TERM_LIMIT",
    "AnalysisReport",
    "Det2Report",
    "FactorizationReport",
    "InputReport",
    "MinorSumReport",
    "PolytopeReport",
    "TimingReport",
    "build_report",
    "render_text",
)
