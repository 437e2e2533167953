import dataclasses
import random
import typing

from sns2.certs.bridge import BridgeScheme, substitution_bridge
from sns2.certs.certificate import BUNDLED_CERTIFICATES, load_bundled
from sns2.certs.verify import verify_certificate
from sns2.compound.compound import det2
from sns2.compound.minor_sums import MinorSums, minor_sums, qn_from_minor_sums, qn_symbolic
from sns2.error import SNS2Error
from sns2.modules import logger
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly, term_census
from sns2.rules.ladder import classify
from sns2.rules.verdict import Verdict
from sns2.signpat.pattern import SignPattern

CORE_SAMPLE: typing.Final[int] = 12

EXNZ: typing.Final[SignPattern] = SignPattern.from_rows(
    [[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1], [0, -1, 0, 0]],
)
EXMIXED: typing.Final[SignPattern] = SignPattern.from_rows(
    [[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1], [0, -1, 0, 1]],
)
EX4B: typing.Final[SignPattern] = SignPattern.from_rows(
    [[1, 1, 0, -1], [-1, 1, 1, 0], [0, -1, 1, 1], [1, 0, -1, 1]],
)
EXBASIC: typing.Final[SignPattern] = SignPattern.from_rows(
    [[1, 1, 1, 1, 1], [0, 0, -1, -1, 1], [0, 0, 0, -1, 1], [0, 0, 0, 0, 1], [1, 0, 0, 0, 0]],
)


@dataclasses.dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_line(self) -> str:
        status = "ok  " if self.passed else "FAIL"
        return f"{status} {self.name} ({self.detail})" if self.detail else f"{status} {self.name}"


def _formula_table() -> list[CheckResult]:
    j = MinorSums.symbolic(5)
    expected = {
        2: j[1],
        3: j[1] * j[2] - j[3],
        4: j[1] * j[2] * j[3] - j[1] ** 2 * j[4] - j[3] ** 2,
        5: (
            -j[5] ** 2
            + 2 * j[1] * j[4] * j[5]
            + j[2] * j[3] * j[5]
            - j[1] * j[2] ** 2 * j[5]
            - j[1] ** 2 * j[4] ** 2
            - j[3] ** 2 * j[4]
            + j[1] * j[2] * j[3] * j[4]
        ),
    }
    results = []
    for n, formula in expected.items():
        qn = qn_symbolic(n)
        lifted = MultiPoly(5, {(*k, *(0,) * (5 - n)): c for k, c in qn.terms.items()})
        results.append(CheckResult(f"q{n} formula", lifted == formula, qn.to_text(prefix="J")))
    return results


def _certificates() -> list[CheckResult]:
    results = []
    for name in BUNDLED_CERTIFICATES:
        certificate = load_bundled(name)
        results.append(CheckResult(f"{name} certificate", verify_certificate(certificate).passed))
        tampered = verify_certificate(certificate.perturbed(0))
        results.append(CheckResult(f"{name} perturbed certificate fails", not tampered.passed))
    for scheme in BridgeScheme:
        try:
            substitution_bridge(MinorSums.symbolic(5), scheme)
            results.append(CheckResult(f"{scheme.value} bridge", True))
        except SNS2Error as exc:
            results.append(CheckResult(f"{scheme.value} bridge", False, str(exc)))
    return results


def _variables(arity: int) -> list[MultiPoly]:
    return [MultiPoly.variable(i, arity) for i in range(1, arity + 1)]


def _golden() -> list[CheckResult]:
    diagonal = PolyMatrix.from_integers([[1, 5, -2, 7], [0, 2, 3, 1], [0, 0, 3, -4], [0, 0, 0, 4]])
    x1, x2, x3, x4, x5 = _variables(5)
    y1, y2, y3, y4, y5, y6 = _variables(6)
    ex4b, exbasic = classify(EX4B, witness=False), classify(EXBASIC, witness=False)
    return [
        CheckResult("triangular eigenvalue sums", det2(diagonal).constant_value() == 12600),
        CheckResult("exnz polynomial", det2(EXNZ.symbolic_matrix()) == -(x2**2) * (x4 * x5 - x1 * x3) ** 2),
        CheckResult(
            "exmixed polynomial",
            det2(EXMIXED.symbolic_matrix()) == -y2 * (y2 * (y4 * y5 - y1 * y3) ** 2 + y1 * y3 * y6**3),
        ),
        CheckResult("exnz verdict", classify(EXNZ).verdict is Verdict.NONPOSITIVE_NONZERO),
        CheckResult(
            "ex4b term census and property P",
            term_census(det2(EX4B.symbolic_matrix())) == (186, 8) and ex4b.fired("prop44_P"),
        ),
        CheckResult(
            "exbasic term census and first 5-pattern lemma",
            term_census(det2(EXBASIC.symbolic_matrix())) == (3, 38) and exbasic.verdict is Verdict.NEGATIVE,
        ),
    ]


def _core_identity(seed: int) -> list[CheckResult]:
    rng = random.Random(seed)
    failures = 0
    for k in range(CORE_SAMPLE):
        n = 3 + k % 2
        pattern = SignPattern.from_rows([[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)])
        matrix = pattern.symbolic_matrix()
        if det2(matrix) != qn_from_minor_sums(minor_sums(matrix)):
            failures += 1
            logger.error("det2 differs from q_n(J) on {!r}", pattern)
    return [CheckResult(f"det2 == q_n(J) on {CORE_SAMPLE} random patterns", not failures, f"{failures} failures")]


def run_selftest(seed: int = 0) -> list[CheckResult]:
    checks: list[typing.Callable[[], list[CheckResult]]] = [
        _formula_table,
        _certificates,
        _golden,
        lambda: _core_identity(seed),
    ]
    results: list[CheckResult] = []
    for check in checks:
        try:
            results.extend(check())
        except SNS2Error as exc:
            results.append(CheckResult(getattr(check, "__name__", "check").strip("_"), False, str(exc)))
    return results


__all__ = ("EX4B", "EXBASIC", "EXMIXED", "EXNZ", "CheckResult", "run_selftest")
