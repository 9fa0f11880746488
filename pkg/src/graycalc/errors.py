"""Exception hierarchy and validation reports shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator


class GrayError(Exception):
    """Base class for all errors raised by graycalc."""


# -- signature ---------------------------------------------------------------

class UnknownBoundaryGenerator(GrayError):
    pass


class GlobularityViolation(GrayError):
    pass


class DuplicateName(GrayError):
    pass


class ZeroCellHasNoBoundary(GrayError):
    pass


# -- terms -------------------------------------------------------------------

class UnknownGenerator(GrayError):
    pass


class NonComposablePath(GrayError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class LayerMismatch(GrayError):
    def __init__(self, index: int, message: str = ""):
        super().__init__(message or f"layer {index} does not match its predecessor")
        self.index = index


class MoveMismatch(GrayError):
    def __init__(self, index: int, message: str = ""):
        super().__init__(message or f"move {index} does not match its predecessor")
        self.index = index


class BoundaryMismatch(GrayError):
    pass


class OverlappingSupport(GrayError):
    pass


class NotAdjacent(GrayError):
    pass


class OrientationMismatch(GrayError):
    pass


class IllTypedTerm(GrayError):
    pass


# -- diagrams ----------------------------------------------------------------

class MalformedSlice(GrayError):
    def __init__(self, index: int, message: str = ""):
        super().__init__(message or f"slice {index} is malformed")
        self.index = index


class FrameMismatch(GrayError):
    def __init__(self, step: int, message: str = ""):
        super().__init__(message or f"frame after step {step} does not match its move")
        self.step = step


class IllegalMove(GrayError):
    def __init__(self, step: int, message: str = ""):
        super().__init__(message or f"step {step} is not a legal move")
        self.step = step


class MalformedDiagram(GrayError):
    pass


# -- 2-categories, functors, limits ------------------------------------------

class NotACategory(GrayError):
    pass


class MiddleFunctorMismatch(GrayError):
    pass


class CompositeNotCoherent(GrayError):
    def __init__(self, report: "ValidationReport", message: str = ""):
        super().__init__(message or f"composite is not coherent: {report.summary()}")
        self.report = report


class NotPseudo(GrayError):
    pass


class SizeGuardExceeded(GrayError):
    pass


@dataclass(frozen=True, order=True)
class Violation:
    """One failed instance of an axiom or invariant."""

    kind: str
    subject: str
    detail: str = field(default="", compare=True)

    def __str__(self) -> str:
        text = f"{self.kind} [{self.subject}]"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class ValidationReport:
    """A sorted, immutable list of violations. Empty means valid."""

    entries: tuple[Violation, ...] = ()

    @classmethod
    def of(cls, entries) -> "ValidationReport":
        return cls(tuple(sorted(set(entries))))

    @property
    def ok(self) -> bool:
        return not self.entries

    def kinds(self) -> set[str]:
        return {v.kind for v in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.entries)

    def __add__(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport.of(self.entries + other.entries)

    def summary(self, limit: int = 3) -> str:
        if self.ok:
            return "ok"
        shown = "; ".join(str(v) for v in self.entries[:limit])
        more = len(self.entries) - limit
        return shown + (f" (+{more} more)" if more > 0 else "")
