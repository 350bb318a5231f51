from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True, order=True)
class SourceSpan:
    """1-based location of a token inside an input file."""

    file: str
    line: int
    column: int
    length: int = 1

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    message: str
    span: SourceSpan | None = None
    entity: str | None = None

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def format(self) -> str:
        where = str(self.span) if self.span else (self.entity or "<model>")
        return f"{where}: {self.severity.value}[{self.code}]: {self.message}"

    def to_dict(self) -> dict:
        out: dict = {
            "severity": self.severity.value,
            "code": self.code,
            "message": self.message,
        }
        if self.entity is not None:
            out["entity"] = self.entity
        if self.span is not None:
            out["span"] = {
                "file": self.span.file,
                "line": self.span.line,
                "column": self.span.column,
                "length": self.span.length,
            }
        return out


def error(code: str, message: str, span: SourceSpan | None = None, entity: str | None = None) -> Diagnostic:
    return Diagnostic(Severity.ERROR, code, message, span, entity)


def warning(code: str, message: str, span: SourceSpan | None = None, entity: str | None = None) -> Diagnostic:
    return Diagnostic(Severity.WARNING, code, message, span, entity)


def has_errors(diagnostics: Iterable[Diagnostic]) -> bool:
    return any(d.is_error for d in diagnostics)


def sort_diagnostics(diagnostics: Iterable[Diagnostic]) -> list[Diagnostic]:
    def key(d: Diagnostic):
        span = d.span or SourceSpan("", 0, 0, 0)
        return (span.file, span.line, span.column, d.code, d.entity or "", d.message)

    return sorted(set(diagnostics), key=key)


class InputError(Exception):
    """Raised when inputs cannot be analysed; carries the offending diagnostics."""

    def __init__(self, diagnostics: Iterable[Diagnostic] | str):
        if isinstance(diagnostics, str):
            diagnostics = [error("INPUT_ERROR", diagnostics)]
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.format() for d in self.diagnostics))
