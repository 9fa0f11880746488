"""Presented Gray-categories: finite sets of generating cells.

A 1-generator has 0-cell names as boundaries, a 2-generator has
:class:`~graycalc.term.Path1` boundaries and a 3-generator has
:class:`~graycalc.term.Term2` boundaries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    DuplicateName,
    GlobularityViolation,
    GrayError,
    UnknownBoundaryGenerator,
    UnknownGenerator,
    ValidationReport,
    Violation,
    ZeroCellHasNoBoundary,
)
from .term import Path1, Term2, typecheck


class BoundarySide(enum.Enum):
    SOURCE = "source"
    TARGET = "target"


@dataclass(frozen=True)
class GeneratorId:
    name: str
    dimension: int

    def __post_init__(self):
        if not self.name:
            raise ValueError("generator names must be nonempty")
        if not 0 <= self.dimension <= 3:
            raise ValueError(f"dimension {self.dimension} outside 0..3")


@dataclass(frozen=True)
class CellGenerator:
    id: GeneratorId
    source: object = None
    target: object = None

    @property
    def name(self) -> str:
        return self.id.name

    @property
    def dimension(self) -> int:
        return self.id.dimension

    @classmethod
    def zero(cls, name: str) -> "CellGenerator":
        return cls(GeneratorId(name, 0))

    @classmethod
    def one(cls, name: str, source: str, target: str) -> "CellGenerator":
        return cls(GeneratorId(name, 1), source, target)

    @classmethod
    def two(cls, name: str, source: Path1, target: Path1) -> "CellGenerator":
        return cls(GeneratorId(name, 2), source, target)

    @classmethod
    def three(cls, name: str, source: Term2, target: Term2) -> "CellGenerator":
        return cls(GeneratorId(name, 3), source, target)


@dataclass(frozen=True)
class Signature:
    generators: tuple[CellGenerator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    @cached_property
    def _index(self) -> dict[tuple[str, int], CellGenerator]:
        index = {}
        for gen in self.generators:
            index.setdefault((gen.name, gen.dimension), gen)
        return index

    @cached_property
    def ends1(self) -> dict[str, tuple[str, str]]:
        """Source and target of every 1-cell, for fast path typing."""
        return {g.name: (g.source, g.target) for g in reversed(self.generators) if g.dimension == 1}

    @cached_property
    def memo(self) -> dict:
        """Per-signature cache for derived typing data; safe because
        signatures are immutable."""
        return {}

    def has(self, name: str, dimension: int) -> bool:
        return (name, dimension) in self._index

    def get(self, name: str, dimension: int) -> CellGenerator:
        try:
            return self._index[(name, dimension)]
        except KeyError:
            raise UnknownGenerator(f"no {dimension}-cell named {name!r}") from None

    def cells(self, dimension: int) -> list[CellGenerator]:
        return [g for g in self.generators if g.dimension == dimension]

    def names(self, dimension: int) -> list[str]:
        return [g.name for g in self.cells(dimension)]

    def add(self, gen: CellGenerator) -> "Signature":
        return add_generator(self, gen)

    def same_generators(self, other: "Signature") -> bool:
        """Equality up to reordering within each dimension."""
        return all(set(self.cells(d)) == set(other.cells(d)) for d in range(4))


def _check_generator(sig: Signature, gen: CellGenerator) -> None:
    d = gen.dimension
    if sig.has(gen.name, d):
        raise DuplicateName(f"{d}-cell {gen.name!r} already declared")
    if d == 0:
        return
    if d == 1:
        for end in (gen.source, gen.target):
            if not isinstance(end, str) or not sig.has(end, 0):
                raise UnknownBoundaryGenerator(
                    f"1-cell {gen.name!r}: unknown endpoint {end!r}")
        return
    kind = Path1 if d == 2 else Term2
    for side in (gen.source, gen.target):
        if not isinstance(side, kind):
            raise UnknownBoundaryGenerator(
                f"{d}-cell {gen.name!r}: boundary must be a {kind.__name__}")
        _check_references(sig, gen, side)
    try:
        s = typecheck(sig, gen.source)
        t = typecheck(sig, gen.target)
    except UnknownGenerator as exc:
        raise UnknownBoundaryGenerator(f"{d}-cell {gen.name!r}: {exc}") from exc
    # globularity: the boundaries must share their own boundaries
    if s != t:
        raise GlobularityViolation(
            f"{d}-cell {gen.name!r}: source boundary {_pair(s)} != target boundary {_pair(t)}")


def _pair(bd) -> str:
    return f"({bd[0]}, {bd[1]})"


def _check_references(sig: Signature, gen: CellGenerator, side) -> None:
    if isinstance(side, Path1):
        refs = [(side.start, 0)] + [(s, 1) for s in side.segments]
    else:
        refs = [(side.boundary_source.start, 0)]
        refs += [(s, 1) for s in side.boundary_source.segments]
        for layer in side.layers:
            refs += [(layer.left.start, 0), (layer.right.start, 0), (layer.core, 2)]
            refs += [(s, 1) for s in layer.left.segments + layer.right.segments]
    for name, dim in refs:
        if not sig.has(name, dim):
            raise UnknownBoundaryGenerator(
                f"{gen.dimension}-cell {gen.name!r}: boundary mentions undeclared {dim}-cell {name!r}")


def add_generator(sig: Signature, gen: CellGenerator) -> Signature:
    """Return a new signature extended by ``gen``; ``sig`` is unchanged."""
    _check_generator(sig, gen)
    return Signature(sig.generators + (gen,))


def build(generators: Iterable[CellGenerator]) -> Signature:
    sig = Signature()
    for gen in generators:
        sig = add_generator(sig, gen)
    return sig


def validate(sig: Signature) -> ValidationReport:
    """Replay the signature generator by generator and report every failure."""
    entries = []
    partial = Signature()
    for gen in sig.generators:
        try:
            _check_generator(partial, gen)
        except GrayError as exc:
            entries.append(Violation(type(exc).__name__, f"{gen.dimension}-cell {gen.name}", str(exc)))
            if isinstance(exc, DuplicateName):
                continue
        partial = Signature(partial.generators + (gen,))
    return ValidationReport.of(entries)


def boundary(gen: CellGenerator, side: BoundarySide):
    if gen.dimension == 0:
        raise ZeroCellHasNoBoundary(f"0-cell {gen.name!r} has no boundary")
    return gen.source if side is BoundarySide.SOURCE else gen.target
