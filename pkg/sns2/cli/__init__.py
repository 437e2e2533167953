from sns2.cli.app import EXIT_FAILED, EXIT_INCONSISTENT, EXIT_OK, EXIT_USAGE, build_parser, main
from sns2.cli.census import CensusMode, CensusReport, pattern_from_id, run_census, sample_patterns
from sns2.cli.inputs import AnalysisInput, InputKind, read_input
from sns2.cli.report import AnalysisReport, build_report, render_text
from sns2.cli.selftest import CheckResult, run_selftest

__all__ = (
    "EXIT_FAILED",
    "EXIT_INCONSISTENT",
    "EXIT_OK",
    "EXIT_USAGE",
    "AnalysisInput",
    "AnalysisReport",
    "CensusMode",
    "CensusReport",
    "CheckResult",
    "InputKind",
    "build_parser",
    "build_report",
    "main",
    "pattern_from_id",
    "read_input",
    "render_text",
    "run_census",
    "run_selftest",
    "sample_patterns",
)
