import argparse
import pathlib
import sys
import typing

from fntypes.result import Error, Ok

import sns2
from sns2.certs.bridge import BridgeScheme, substitution_bridge
from sns2.certs.certificate import BUNDLED_CERTIFICATES, ConeCertificate, load_bundled
from sns2.certs.verify import verify_certificate
from sns2.cli.census import DEFAULT_DENSITY, CensusMode, run_census
from sns2.cli.inputs import read_input
from sns2.cli.report import build_report, render_text
from sns2.cli.selftest import run_selftest
from sns2.compound.compound import compound_text, second_additive_compound
from sns2.compound.minor_sums import MinorSums, qn_symbolic
from sns2.config import Settings
from sns2.error import DimensionError, InconsistencyError, SNS2Error, UsageError
from sns2.model import IntTerm, Model
from sns2.modules import logger
from sns2.msgspec_json import dumps

EXIT_OK: typing.Final[int] = 0
EXIT_FAILED: typing.Final[int] = 1
EXIT_USAGE: typing.Final[int] = 2
EXIT_INCONSISTENT: typing.Final[int] = 3

type Handler = typing.Callable[[argparse.Namespace, Settings], int]


class QnReport(Model):
    n: int
    qn: str
    terms: list[IntTerm]


class CertificateReport(Model):
    name: str | None
    claim: str
    passed: bool
    identity_holds: bool
    multiplier_verified: bool
    multiplier_accepted: bool
    sign_violations: int
    residual: str


class BridgeReport(Model):
    scheme: str
    holds: bool
    identity: str
    denominator: str
    substitutions: dict[str, str]


def _emit(args: argparse.Namespace, payload: Model, text: str) -> None:
    print(dumps(payload, indent=2) if args.format == "json" else text)


def cmd_analyze(args: argparse.Namespace, settings: Settings) -> int:
    match read_input(args.input):
        case Ok(source):
            pass
        case Error(message):
            raise UsageError(message)
    report = build_report(
        source,
        version=sns2.__version__,
        witness_budget=args.witness_budget if args.witness_budget is not None else settings.witness_budget,
        seed=args.seed if args.seed is not None else settings.seed,
        witness=not args.no_witness,
        core=args.core,
        timing=not args.no_timing,
    )
    _emit(args, report, render_text(report))
    return EXIT_OK


def cmd_qn(args: argparse.Namespace, settings: Settings) -> int:
    if args.n < 2:
        raise UsageError(f"q_n needs n >= 2, got {args.n}.")
    qn = qn_symbolic(args.n)
    text = qn.to_text(prefix="J")
    _emit(args, QnReport(n=args.n, qn=text, terms=qn.to_terms()), text)
    return EXIT_OK


def cmd_compound(args: argparse.Namespace, settings: Settings) -> int:
    match read_input(args.input):
        case Ok(source):
            pass
        case Error(message):
            raise UsageError(message)
    if args.format == "json":
        print(dumps(second_additive_compound(source.matrix).to_file(), indent=2))
    else:
        print(compound_text(source.matrix))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, settings: Settings) -> int:
    if args.n < 2:
        raise UsageError(f"Enumeration needs n >= 2, got {args.n}.")
    if not 0 <= args.density <= 1:
        raise UsageError(f"--density must lie in [0, 1], got {args.density}.")
    census = run_census(
        args.n,
        CensusMode(args.mode),
        count=args.count,
        seed=args.seed if args.seed is not None else settings.seed,
        density=args.density,
        witness_budget=args.witness_budget if args.witness_budget is not None else settings.witness_budget,
        jobs=settings.resolve_jobs(args.jobs),
        rule_filter=args.rule_filter,
    )
    print(dumps(census, indent=2))
    return EXIT_OK if not census.disagreements else EXIT_INCONSISTENT


def _load_certificate(args: argparse.Namespace) -> ConeCertificate:
    if args.bundled is not None:
        return load_bundled(args.bundled)
    try:
        raw = pathlib.Path(args.input).read_bytes()
    except OSError as exc:
        raise UsageError(f"Cannot read {args.input!r}: {exc.strerror or exc}") from exc
    match ConeCertificate.from_json(raw):
        case Ok(certificate):
            return certificate
        case Error(message):
            raise UsageError(f"{args.input}: {message}")


def cmd_verify_cert(args: argparse.Namespace, settings: Settings) -> int:
    if args.bridge is not None:
        return _verify_bridge(args)
    if args.input is None and args.bundled is None:
        raise UsageError("verify-cert needs a certificate file, --bundled NAME or --bridge SCHEME.")
    certificate = _load_certificate(args)
    check = verify_certificate(certificate, seed=settings.seed)
    report = CertificateReport(
        name=certificate.name,
        claim=certificate.claim.value,
        passed=check.passed,
        identity_holds=check.identity_holds,
        multiplier_verified=check.multiplier_verified,
        multiplier_accepted=check.multiplier_accepted,
        sign_violations=len(check.sign_violations),
        residual=check.residual.to_text(),
    )
    if check.passed:
        text = "pass: {} ({} terms{})".format(
            certificate.name or args.input,
            len(certificate.terms),
            ", multiplier verified" if check.multiplier_verified else ", multiplier sampled only",
        )
    elif not check.identity_holds:
        text = "fail: residual = {}".format(check.residual.to_text())
    else:
        text = "fail: identity holds, but the multiplier is not accepted"
        if check.sign_violations:
            text = "fail: claimed sign fails at {} sampled points".format(len(check.sign_violations))
    if check.multiplier_residual is not None and not check.multiplier_residual.is_zero():
        text += "\n      multiplier residual = {}".format(check.multiplier_residual.to_text())
    _emit(args, report, text)
    return EXIT_OK if check.passed else EXIT_FAILED


def _verify_bridge(args: argparse.Namespace) -> int:
    if args.n != 5:
        raise DimensionError(f"The substitution bridge is defined for n = 5, got n = {args.n}.")
    bridge = substitution_bridge(MinorSums.symbolic(args.n), args.bridge)
    denominator = bridge.denominator.to_text(prefix="J")
    identity = "{} * q5 == {}(alpha, beta, gamma, delta)".format(denominator, bridge.scheme.value)
    report = BridgeReport(
        scheme=bridge.scheme.value,
        holds=bridge.holds(),
        identity=identity,
        denominator=denominator,
        substitutions={
            name: value.to_text(prefix="J")
            for name, value in zip(("alpha", "beta", "gamma", "delta"), bridge.substitutions, strict=True)
        },
    )
    lines = [f"pass: {identity}"]
    lines.extend(f"  {name} = {value}" for name, value in report.substitutions.items())
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace, settings: Settings) -> int:
    results = run_selftest(args.seed if args.seed is not None else settings.seed)
    for result in results:
        print(result.to_line())
    return EXIT_OK if all(result.passed for result in results) else EXIT_FAILED


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sns2",
        description="Exact sign analysis of det of the second additive compound for sign patterns and matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {sns2.__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--env-file", type=pathlib.Path, help="read SNS2_* settings from this file")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="classify det2 of a pattern or matrix")
    analyze.add_argument("input", help="pattern text file, pattern JSON or matrix JSON")
    _add_format(analyze)
    analyze.add_argument("--seed", type=int)
    analyze.add_argument("--witness-budget", type=int)
    analyze.add_argument("--no-witness", action="store_true", help="skip the witness search")
    analyze.add_argument("--core", action="store_true", help="analyse the weakly reversible core")
    analyze.add_argument("--no-timing", action="store_true", help="omit the timing block")
    analyze.set_defaults(handler=cmd_analyze)

    qn = commands.add_parser("qn", help="print q_n in the minor-sums J1..Jn")
    qn.add_argument("--n", type=int, required=True)
    _add_format(qn)
    qn.set_defaults(handler=cmd_qn)

    compound = commands.add_parser("compound", help="print the second additive compound")
    compound.add_argument("input")
    _add_format(compound)
    compound.set_defaults(handler=cmd_compound)

    enumerate_ = commands.add_parser("enumerate", help="classify many patterns and print a census")
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--mode", choices=[m.value for m in CensusMode], default=CensusMode.SAMPLE.value)
    enumerate_.add_argument("--count", type=int, default=100)
    enumerate_.add_argument("--seed", type=int)
    enumerate_.add_argument("--density", type=float, default=DEFAULT_DENSITY)
    enumerate_.add_argument("--filter", dest="rule_filter", help="only count patterns where this rule id fired")
    enumerate_.add_argument("--jobs", type=int, help="worker processes (SNS2_JOBS overrides)")
    enumerate_.add_argument("--witness-budget", type=int)
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify = commands.add_parser("verify-cert", help="verify a cone certificate")
    verify.add_argument("input", nargs="?")
    verify.add_argument("--bundled", choices=BUNDLED_CERTIFICATES)
    verify.add_argument("--bridge", choices=[s.value for s in BridgeScheme])
    verify.add_argument("--n", type=int, default=5)
    _add_format(verify)
    verify.set_defaults(handler=cmd_verify_cert)

    selftest = commands.add_parser("selftest", help="run the built-in consistency checks")
    selftest.add_argument("--seed", type=int)
    selftest.set_defaults(handler=cmd_selftest)
    return parser


def main(argv: typing.Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = Settings.from_env(path_to_envfile=args.env_file)
    logger.set_level("DEBUG" if args.verbose else settings.log_level)
    handler: Handler = args.handler
    try:
        return handler(args, settings)
    except InconsistencyError as exc:
        logger.error("{}", exc)
        print(f"sns2: inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except SNS2Error as exc:
        print(f"sns2: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = (
    "EXIT_FAILED",
    "EXIT_INCONSISTENT",
    "EXIT_OK",
    "EXIT_USAGE",
    "build_parser",
    "cmd_analyze",
    "cmd_compound",
    "cmd_enumerate",
    "cmd_qn",
    "cmd_selftest",
    "cmd_verify_cert",
    "main",
)
