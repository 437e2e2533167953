import collections
import concurrent.futures
import dataclasses
import enum
import random
import typing

from sns2.error import UnsupportedSizeError
from sns2.model import Model
from sns2.modules import logger
from sns2.rules.context import PatternContext
from sns2.rules.ladder import classify, is_indef2_case
from sns2.rules.three_pattern import direct_verdict, rule_prop33
from sns2.signpat.pattern import SignPattern

EXHAUSTIVE_BOUND: typing.Final[int] = 3
DEFAULT_DENSITY: typing.Final[float] = 0.35
# Base-3 digit of a pattern id -> entry sign.
DIGIT_SIGNS: typing.Final[tuple[int, int, int]] = (0, 1, -1)

type Rows = tuple[tuple[int, ...], ...]


class CensusMode(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLE = "sample"


class Disagreement(Model):
    pattern: list[str]
    rule: str
    direct: str


class Indef2Case(Model):
    pattern: list[str]
    verdict: str


class CensusReport(Model):
    n: int
    mode: CensusMode
    patterns: int
    verdicts: dict[str, int]
    disagreements: list[Disagreement]
    indef2_cases: list[Indef2Case]
    rule_filter: str | None = None
    skipped: int = 0
    seed: int | None = None


def pattern_from_id(n: int, pattern_id: int) -> SignPattern:
    """Entry `k` (row-major) takes the `k`-th base-3 digit of `pattern_id`: 0 -> 0, 1 -> +, 2 -> -."""
    signs = []
    for _ in range(n * n):
        pattern_id, digit = divmod(pattern_id, 3)
        signs.append(DIGIT_SIGNS[digit])
    return SignPattern.from_rows([signs[i * n : (i + 1) * n] for i in range(n)])


def sample_patterns(n: int, count: int, seed: int, density: float = DEFAULT_DENSITY) -> list[SignPattern]:
    rng = random.Random(seed)
    return [
        SignPattern.from_rows(
            [[rng.choice((1, -1)) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
        )
        for _ in range(count)
    ]


@dataclasses.dataclass(slots=True)
class PartialCensus:
    verdicts: collections.Counter[str] = dataclasses.field(default_factory=collections.Counter)
    disagreements: list[Disagreement] = dataclasses.field(default_factory=list)
    indef2_cases: list[Indef2Case] = dataclasses.field(default_factory=list)
    skipped: int = 0

    def merge(self, other: "PartialCensus") -> None:
        self.verdicts.update(other.verdicts)
        self.disagreements.extend(other.disagreements)
        self.indef2_cases.extend(other.indef2_cases)
        self.skipped += other.skipped


@dataclasses.dataclass(frozen=True, slots=True)
class CensusTask:
    rows: tuple[Rows, ...]
    witness_budget: int
    seed: int
    rule_filter: str | None = None


def run_task(task: CensusTask) -> PartialCensus:
    """Classify one chunk of patterns. Module-level so that worker processes can pickle it."""
    partial = PartialCensus()
    for rows in task.rows:
        pattern = SignPattern(n=len(rows), signs=rows)
        ctx = PatternContext(pattern, witness_budget=task.witness_budget, seed=task.seed)
        text = pattern.to_text().splitlines()
        if pattern.n == 3:
            rule, direct = rule_prop33(ctx).verdict, direct_verdict(ctx.det2)
            if rule is not direct:
                logger.error("prop33 disagrees with the direct verdict on {!r}", pattern)
                partial.disagreements.append(Disagreement(pattern=text, rule=rule.value, direct=direct.value))
                continue
        result = classify(ctx)
        if task.rule_filter is not None and not result.fired(task.rule_filter):
            partial.skipped += 1
            continue
        partial.verdicts[result.verdict.value] += 1
        if not ctx.det2.is_zero() and is_indef2_case(ctx.det2, ctx.polytope):
            logger.warning("Mixed terms without mixed vertices: {!r} is {}", pattern, result.verdict.value)
            partial.indef2_cases.append(Indef2Case(pattern=text, verdict=result.verdict.value))
    return partial


def _chunks[T](items: typing.Sequence[T], parts: int) -> list[tuple[T, ...]]:
    size = max(1, -(-len(items) // max(parts, 1)))
    return [tuple(items[k : k + size]) for k in range(0, len(items), size)]


def run_census(
    n: int,
    mode: CensusMode,
    *,
    count: int = 0,
    seed: int = 0,
    density: float = DEFAULT_DENSITY,
    witness_budget: int,
    jobs: int = 1,
    rule_filter: str | None = None,
) -> CensusReport:
    """Classify many patterns and tally the verdicts; the result does not depend on `jobs`."""
    if mode is CensusMode.EXHAUSTIVE:
        if n > EXHAUSTIVE_BOUND:
            raise UnsupportedSizeError("exhaustive enumeration", n, EXHAUSTIVE_BOUND)
        patterns = [pattern_from_id(n, k) for k in range(3 ** (n * n))]
    else:
        patterns = sample_patterns(n, count, seed, density)

    rows = [pattern.signs for pattern in patterns]
    tasks = [
        CensusTask(rows=chunk, witness_budget=witness_budget, seed=seed, rule_filter=rule_filter)
        for chunk in _chunks(rows, jobs * 4)
    ]
    total = PartialCensus()
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            total.merge(run_task(task))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            for partial in executor.map(run_task, tasks):
                total.merge(partial)
    logger.info("Census n={} ({}): {} patterns classified", n, mode.value, len(patterns))

    return CensusReport(
        n=n,
        mode=mode,
        patterns=len(patterns),
        verdicts=dict(sorted(total.verdicts.items())),
        disagreements=sorted(total.disagreements, key=lambda d: d.pattern),
        indef2_cases=sorted(total.indef2_cases, key=lambda c: c.pattern),
        rule_filter=rule_filter,
        skipped=total.skipped,
        seed=seed if mode is CensusMode.SAMPLE else None,
    )


__all__ = (
    "DEFAULT_DENSITY",
    "EXHAUSTIVE_BOUND",
    "CensusMode",
    "CensusReport",
    "CensusTask",
    "Disagreement",
    "Indef2Case",
    "PartialCensus",
    "pattern_from_id",
    "run_census",
    "run_task",
    "sample_patterns",
)
