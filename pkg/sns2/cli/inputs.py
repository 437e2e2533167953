import dataclasses
import enum
import pathlib

import fntypes.result
import msgspec
from fntypes.result import Error, Ok

from sns2.error import SNS2Error
from sns2.msgspec_json import loads
from sns2.poly.matrix import MatrixFile, PolyMatrix
from sns2.signpat.pattern import PatternFile, SignPattern, parse_pattern


class InputKind(str, enum.Enum):
    PATTERN_TEXT = "pattern-text"
    PATTERN_JSON = "pattern-json"
    MATRIX_JSON = "matrix-json"


@dataclasses.dataclass(frozen=True, slots=True)
class AnalysisInput:
    """A parsed `analyze` input; `pattern` is set for sign patterns only."""

    path: str
    kind: InputKind
    matrix: PolyMatrix
    pattern: SignPattern | None = None

    def with_pattern(self, pattern: SignPattern) -> "AnalysisInput":
        return dataclasses.replace(self, pattern=pattern, matrix=pattern.symbolic_matrix())


def _from_json(path: str, raw: str) -> fntypes.result.Result[AnalysisInput, str]:
    try:
        obj = loads(raw)
    except msgspec.DecodeError as exc:
        return Error(f"{path}: invalid JSON: {exc}")
    if not isinstance(obj, dict):
        return Error(f"{path}: expected a JSON object.")
    try:
        if "signs" in obj:
            pattern = SignPattern.from_file(PatternFile.from_dict(obj))
            return Ok(AnalysisInput(path, InputKind.PATTERN_JSON, pattern.symbolic_matrix(), pattern))
        if "entries" in obj:
            return Ok(AnalysisInput(path, InputKind.MATRIX_JSON, PolyMatrix.from_file(MatrixFile.from_dict(obj))))
    except msgspec.ValidationError as exc:
        return Error(f"{path}: {exc}")
    except (SNS2Error, ValueError, TypeError) as exc:
        return Error(f"{path}: {exc}")
    return Error(f"{path}: expected a pattern (`signs`) or a matrix (`entries`) object.")


def read_input(path: str | pathlib.Path) -> fntypes.result.Result[AnalysisInput, str]:
    """Read a pattern text file, a pattern JSON or a matrix JSON, detected by content."""
    try:
        raw = pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        return Error(f"Cannot read {str(path)!r}: {exc.strerror or exc}")
    except UnicodeDecodeError as exc:
        return Error(f"{path}: not valid UTF-8 (byte {exc.start})")
    if raw.lstrip().startswith("{"):
        return _from_json(str(path), raw)
    try:
        pattern = parse_pattern(raw)
    except SNS2Error as exc:
        return Error(f"{path}: {exc}")
    return Ok(AnalysisInput(str(path), InputKind.PATTERN_TEXT, pattern.symbolic_matrix(), pattern))


__all__ = ("AnalysisInput", "InputKind", "read_input")
