"""Tokens, syntax tree nodes and DSL errors.

Every node carries a source location that is ignored by equality, so two
documents compare equal when they say the same thing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from ..errors import GrayError, ValidationReport


@dataclass(frozen=True)
class Loc:
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


NOWHERE = Loc(0, 0)


class DSLError(GrayError):
    def __init__(self, loc: Loc, message: str):
        super().__init__(f"{loc}: {message}")
        self.loc = loc
        self.line, self.col = loc.line, loc.col


class SyntaxError(DSLError):  # noqa: A001 - the DSL's own syntax error
    def __init__(self, loc: Loc, expected: str, found: str = ""):
        text = f"expected {expected}" + (f", found {found}" if found else "")
        super().__init__(loc, text)
        self.expected = expected


class UnresolvedName(DSLError):
    def __init__(self, loc: Loc, name: str, kind: str = "name"):
        super().__init__(loc, f"unresolved {kind} {name!r}")
        self.name = name


class ValidationFailed(DSLError):
    def __init__(self, loc: Loc, report: ValidationReport | str):
        if isinstance(report, str):
            message, report = report, ValidationReport()
        else:
            message = report.summary()
        super().__init__(loc, f"validation failed: {message}")
        self.report = report


# -- tokens ------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    loc: Loc


_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<cellkw>[0-3]-cell\b)
  | (?P<arrow>->)
  | (?P<darrow>=>)
  | (?P<name>[A-Za-z0-9_']+)
  | (?P<punct>[:;.|\[\]{}(),@*=])
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        loc = Loc(line, pos - line_start + 1)
        if m is None:
            raise SyntaxError(loc, "a token", repr(text[pos]))
        kind = m.lastgroup
        if kind == "newline":
            tokens.append(Token("newline", "\n", loc))
            line += 1
            line_start = m.end()
        elif kind not in ("space", "comment"):
            tokens.append(Token(kind, m.group(), loc))
        pos = m.end()
    tokens.append(Token("eof", "", Loc(line, pos - line_start + 1)))
    return tokens


# -- syntax tree -------------------------------------------------------------

def _loc():
    return field(default=NOWHERE, compare=False, repr=False)


@dataclass(frozen=True)
class PathExpr:
    """``f . g``; ``start`` is set only for the written form ``id(x)``."""

    segments: tuple[str, ...] = ()
    start: Optional[str] = None
    loc: Loc = _loc()


@dataclass(frozen=True)
class LayerExpr:
    left: PathExpr
    core: str
    right: PathExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class TermExpr:
    """Either a stack of layers or ``id(path)``."""

    layers: tuple[LayerExpr, ...] = ()
    identity: Optional[PathExpr] = None
    loc: Loc = _loc()


@dataclass(frozen=True)
class MoveExpr:
    """``sigma(i)``, ``sigma_inv(i)`` or ``cell @ layer : offset``."""

    kind: str
    index: int
    cell: str = ""
    offset: int = 0
    loc: Loc = _loc()


@dataclass(frozen=True)
class CellDecl:
    dim: int
    name: str
    source: object = None
    target: object = None
    loc: Loc = _loc()


@dataclass(frozen=True)
class TermDecl:
    name: str
    expr: TermExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class Term3Decl:
    name: str
    source: str
    moves: tuple[MoveExpr, ...]
    loc: Loc = _loc()


@dataclass(frozen=True)
class DiagramDecl:
    name: str
    start: Optional[str]
    top: tuple[str, ...]
    slices: tuple[tuple[str, int], ...]
    loc: Loc = _loc()


@dataclass(frozen=True)
class MovieStep:
    kind: str                 # "interchange" or "vertex"
    slice: int
    direction: str = ""
    cell: str = ""
    offset: int = 0
    loc: Loc = _loc()


@dataclass(frozen=True)
class MovieDecl:
    name: str
    source: str
    steps: tuple[MovieStep, ...]
    loc: Loc = _loc()


@dataclass(frozen=True)
class CategoryDecl:
    name: str
    builtin: Optional[str] = None
    objects: tuple[str, ...] = ()
    arrows: tuple[tuple[str, str, str], ...] = ()
    composites: tuple[tuple[str, str, str], ...] = ()
    loc: Loc = _loc()


@dataclass(frozen=True)
class TwoCategoryDecl:
    name: str
    builtin: Optional[str] = None
    objects: tuple[str, ...] = ()
    one_cells: tuple[tuple[str, str, str], ...] = ()
    two_cells: tuple[tuple[str, str, str], ...] = ()
    comp1: tuple[tuple[str, str, str], ...] = ()
    vcomp: tuple[tuple[str, str, str], ...] = ()
    hcomp: tuple[tuple[str, str, str], ...] = ()
    loc: Loc = _loc()


@dataclass(frozen=True)
class CatFunctorDecl:
    name: str
    source: str
    target: str
    objects: tuple[tuple[str, str], ...] = ()
    morphisms: tuple[tuple[str, str], ...] = ()
    loc: Loc = _loc()


@dataclass(frozen=True)
class NatTransDecl:
    name: str
    source: str
    target: str
    components: tuple[tuple[str, str], ...] = ()
    loc: Loc = _loc()


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    strength: str
    source: str
    target: str
    obj: tuple[tuple[str, str], ...] = ()
    one: tuple[tuple[str, str], ...] = ()
    two: tuple[tuple[str, str], ...] = ()
    comp: tuple[tuple[str, str, str], ...] = ()
    unit: tuple[tuple[str, str], ...] = ()
    loc: Loc = _loc()


@dataclass(frozen=True)
class TransformationDecl:
    name: str
    strength: str
    source: str
    target: str
    component: tuple[tuple[str, str], ...] = ()
    witness: tuple[tuple[str, str], ...] = ()
    loc: Loc = _loc()


@dataclass(frozen=True)
class ModificationDecl:
    name: str
    source: str
    target: str
    component: tuple[tuple[str, str], ...] = ()
    loc: Loc = _loc()


@dataclass(frozen=True)
class Command:
    """``verb`` with positional ``args`` and optional ``options``."""

    verb: str
    args: tuple[str, ...] = ()
    options: tuple[tuple[str, str], ...] = ()
    loc: Loc = _loc()

    def option(self, key: str, default: str | None = None) -> str | None:
        return dict(self.options).get(key, default)


Decl = Union[CellDecl, TermDecl, Term3Decl, DiagramDecl, MovieDecl, CategoryDecl,
             TwoCategoryDecl, CatFunctorDecl, NatTransDecl, FunctorDecl,
             TransformationDecl, ModificationDecl, Command]


@dataclass(frozen=True)
class Document:
    decls: tuple = ()
    env: object = field(default=None, compare=False, repr=False)

    @property
    def commands(self) -> list[Command]:
        return [d for d in self.decls if isinstance(d, Command)]
