"""Layered string diagrams and their semantics.

A :class:`Diagram2` is read top to bottom: slice 0 is the first layer of the
term it denotes.  Every slice carries exactly one vertex.  A :class:`Movie`
is a sequence of such diagrams related by vertex moves (3-generators) and
interchange moves, and denotes a 3-term.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import (
    FrameMismatch,
    GrayError,
    IllegalMove,
    IllTypedTerm,
    MalformedSlice,
    UnknownGenerator,
)
from .signature import Signature
from .term import (
    Direction,
    Gen3,
    Interchanger,
    Layer2,
    Path1,
    Term2,
    Term3,
    gen3_at,
    interchanger_at,
    layer_source,
    layer_target,
    move_boundary,
    path_objects,
    typecheck,
)


@dataclass(frozen=True)
class Wire:
    label: str

    def __str__(self) -> str:
        return self.label


@lru_cache(maxsize=65536)
def _wire_tuple(labels: tuple[str, ...]) -> tuple[Wire, ...]:
    return tuple(Wire(s) for s in labels)


def wires(p: Path1) -> tuple[Wire, ...]:
    return _wire_tuple(p.segments)


@dataclass(frozen=True)
class Slice:
    inputs: tuple[Wire, ...]
    vertex: str
    vertex_position: int
    outputs: tuple[Wire, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))


@dataclass(frozen=True)
class Diagram2:
    """``start`` names the leftmost region; it fixes the 0-cell even when
    there are no wires at all."""

    start: str
    top: tuple[Wire, ...]
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "slices", tuple(self.slices))

    @property
    def bottom(self) -> tuple[Wire, ...]:
        return self.slices[-1].outputs if self.slices else self.top


@dataclass(frozen=True)
class VertexMove:
    """Apply a 3-generator whose source begins at gap ``slice``, ``offset``
    wires from the left."""

    cell: str
    slice: int
    offset: int


@dataclass(frozen=True)
class InterchangeMove:
    """Swap slices ``slice`` and ``slice + 1``."""

    slice: int
    direction: Direction


MoveDescriptor = Union[VertexMove, InterchangeMove]


@dataclass(frozen=True)
class Movie:
    first: Diagram2
    steps: tuple[tuple[MoveDescriptor, Diagram2], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))

    @property
    def frames(self) -> list[Diagram2]:
        return [self.first] + [d for _, d in self.steps]


def _labels(ws) -> tuple[str, ...]:
    return tuple(w.label for w in ws)


def evaluate2(sig: Signature, d: Diagram2) -> Term2:
    """Transcribe a diagram into a 2-term, one layer per slice."""
    try:
        top = Path1(d.start, _labels(d.top))
        path_objects(sig, top)
    except GrayError as exc:
        raise MalformedSlice(-1, f"top boundary is ill-typed: {exc}") from exc
    current = d.top
    layers = []
    memo = sig.memo
    for i, s in enumerate(d.slices):
        if s.inputs != current:
            raise MalformedSlice(i, f"slice {i} inputs do not match the wires above it")
        key = ("slice", d.start, s)
        layer = memo.get(key)
        if layer is None:
            layer = memo[key] = _slice_layer(sig, d.start, i, s)
        layers.append(layer)
        current = s.outputs
    return Term2(top, tuple(layers))


def _slice_layer(sig: Signature, start: str, i: int, s: Slice) -> Layer2:
    gen = sig.get(s.vertex, 2)
    src, tgt = _labels_of(gen.source), _labels_of(gen.target)
    pos = s.vertex_position
    ins = _labels(s.inputs)
    if pos < 0 or pos + len(src) > len(ins) or ins[pos:pos + len(src)] != src:
        raise MalformedSlice(i, f"vertex {s.vertex} does not fit at position {pos}")
    if _labels(s.outputs) != ins[:pos] + tgt + ins[pos + len(src):]:
        raise MalformedSlice(i, f"slice {i} outputs do not match vertex {s.vertex}")
    left = Path1(start, ins[:pos])
    right = Path1(path_objects(sig, gen.source)[-1], ins[pos + len(src):])
    layer = Layer2(left, s.vertex, right)
    try:
        layer_source(sig, layer)
        layer_target(sig, layer)
    except GrayError as exc:
        raise MalformedSlice(i, f"slice {i} regions do not match: {exc}") from exc
    return layer


def _labels_of(p: Path1) -> tuple[str, ...]:
    return p.segments


def layout2(sig: Signature, t: Term2) -> Diagram2:
    """The diagram with one slice per layer of ``t``."""
    try:
        typecheck(sig, t)
    except GrayError as exc:
        raise IllTypedTerm(str(exc)) from exc
    slices = []
    for layer in t.layers:
        slices.append(Slice(wires(layer_source(sig, layer)), layer.core,
                            len(layer.left), wires(layer_target(sig, layer))))
    return Diagram2(t.boundary_source.start, wires(t.boundary_source), tuple(slices))


def descriptor_move(sig: Signature, t: Term2, desc: MoveDescriptor):
    """The 3-term move that ``desc`` denotes when applied to ``t``."""
    if isinstance(desc, VertexMove):
        return gen3_at(sig, t, desc.cell, desc.slice, desc.offset)
    return interchanger_at(sig, t, desc.slice, desc.direction).moves[0]


def apply_descriptor(sig: Signature, d: Diagram2, desc: MoveDescriptor) -> Diagram2:
    mv = descriptor_move(sig, evaluate2(sig, d), desc)
    return layout2(sig, move_boundary(sig, mv)[1])


def make_movie(sig: Signature, first: Diagram2, descriptors) -> Movie:
    steps = []
    current = first
    for i, desc in enumerate(descriptors):
        try:
            current = apply_descriptor(sig, current, desc)
        except UnknownGenerator:
            raise
        except GrayError as exc:
            raise IllegalMove(i, f"step {i}: {exc}") from exc
        steps.append((desc, current))
    return Movie(first, tuple(steps))


def evaluate3(sig: Signature, m: Movie) -> Term3:
    """Transcribe a movie into a 3-term, one move per step."""
    current = evaluate2(sig, m.first)
    source = current
    moves = []
    for i, (desc, frame) in enumerate(m.steps):
        try:
            mv = descriptor_move(sig, current, desc)
        except UnknownGenerator:
            raise
        except GrayError as exc:
            raise IllegalMove(i, f"step {i}: {exc}") from exc
        produced = move_boundary(sig, mv)[1]
        try:
            expected = evaluate2(sig, frame)
        except MalformedSlice as exc:
            raise FrameMismatch(i, f"frame {i + 1} is malformed: {exc}") from exc
        if produced != expected:
            raise FrameMismatch(i)
        moves.append(mv)
        current = produced
    return Term3(source, tuple(moves))


def layout3(sig: Signature, t: Term3) -> Movie:
    descriptors = []
    for mv in t.moves:
        k = len(mv.above.layers)
        if isinstance(mv, Gen3):
            descriptors.append(VertexMove(mv.core, k, len(mv.left)))
        else:
            descriptors.append(InterchangeMove(k, mv.direction))
    typecheck(sig, t)
    return make_movie(sig, layout2(sig, t.boundary_source), descriptors)


def descriptor_kind(desc: MoveDescriptor) -> type:
    return Gen3 if isinstance(desc, VertexMove) else Interchanger
