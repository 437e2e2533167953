import typing


class SNS2Error(Exception):
    """Base class for every error raised by `sns2`."""

    def __init__(self, message: str) -> None:
        self.message = message

    def __str__(self) -> str:
        return self.message

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}: {self.__str__()}>"


class ArityMismatchError(SNS2Error):
    def __init__(self, left: int, right: int) -> None:
        self.left, self.right = left, right
        super().__init__(f"Arity mismatch: {left} != {right}.")


class DimensionError(SNS2Error):
    pass


class PatternParseError(SNS2Error):
    def __init__(self, message: str, *, line: int | None = None, column: int | None = None) -> None:
        self.line, self.column = line, column
        super().__init__(message)

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        where = f"line {self.line}" + (f", column {self.column}" if self.column is not None else "")
        return f"[{where}] {self.message}"


class ZeroPolynomialError(SNS2Error):
    def __init__(self, operation: str) -> None:
        self.operation = operation
        super().__init__(f"{operation}() is undefined for the zero polynomial.")


class ResultantUndefinedError(SNS2Error):
    pass


class UnsupportedSizeError(SNS2Error):
    def __init__(self, what: str, size: int, bound: int) -> None:
        self.what, self.size, self.bound = what, size, bound
        super().__init__(f"Unsupported size for {what}: {size} (bound is {bound}).")


class CertificateError(SNS2Error):
    pass


class UsageError(SNS2Error):
    """Bad command-line input; the CLI exits with status 2."""


class InconsistencyError(SNS2Error):
    """An exact fact contradicts a lemma-based conclusion. Indicates a bug."""

    def __init__(self, rule_id: str, detail: str, data: dict[str, typing.Any] | None = None) -> None:
        self.rule_id = rule_id
        self.data = data or {}
        super().__init__(f"Rule {rule_id!r} is contradicted: {detail}")


__all__ = (
    "ArityMismatchError",
    "CertificateError",
    "DimensionError",
    "InconsistencyError",
    "PatternParseError",
    "ResultantUndefinedError",
    "SNS2Error",
    "UnsupportedSizeError",
    "UsageError",
    "ZeroPolynomialError",
)
