"""Free composites over a signature: paths, layered 2-terms, and 3-terms.

2-cells are kept in generic form, one generator per layer.  Horizontal
composition of 2-terms is not a primitive: callers stack whiskered layers in
one of the two orders and use :func:`interchanger` to relate them.

Conventions fixed here:

* A layer ``[l | a | r]`` applies the 2-generator ``a`` with ``l`` to its left
  and ``r`` to its right.  Layers are listed top to bottom, first to last.
* The interchanger's forward orientation takes the pair whose left core comes
  first to the pair whose right core comes first.  Backward is the inverse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .errors import (
    BoundaryMismatch,
    LayerMismatch,
    MoveMismatch,
    NonComposablePath,
    NotAdjacent,
    OrientationMismatch,
    OverlappingSupport,
    UnknownGenerator,
    GrayError,
)

if TYPE_CHECKING:
    from .signature import Signature


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"

    def inverse(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


@dataclass(frozen=True)
class Path1:
    """A composable sequence of 1-generators starting at a 0-cell."""

    start: str
    segments: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        # paths are hashed constantly by the rewriting caches
        object.__setattr__(self, "_hash", hash((self.start, self.segments)))

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.segments)

    def __str__(self) -> str:
        return " . ".join(self.segments) if self.segments else f"id({self.start})"


@dataclass(frozen=True)
class Layer2:
    left: Path1
    core: str
    right: Path1

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.left, self.core, self.right)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return f"[{_ctx(self.left)} | {self.core} | {_ctx(self.right)}]"


def _ctx(p: Path1) -> str:
    return " . ".join(p.segments)


@dataclass(frozen=True)
class Term2:
    """A vertical stack of whiskered 2-generators; no layers is the identity."""

    boundary_source: Path1
    layers: tuple[Layer2, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))

    def __len__(self) -> int:
        return len(self.layers)

    def __str__(self) -> str:
        if not self.layers:
            return f"id({self.boundary_source})"
        return " ; ".join(str(layer) for layer in self.layers)


@dataclass(frozen=True)
class Gen3:
    """A whiskered 3-generator sandwiched between ``above`` and ``below``."""

    left: Path1
    core: str
    right: Path1
    above: Term2
    below: Term2


@dataclass(frozen=True)
class Interchanger:
    """Swap of the adjacent layers ``a`` (upper) and ``b`` (lower)."""

    a: Layer2
    b: Layer2
    direction: Direction
    above: Term2
    below: Term2


Move3 = Union[Gen3, Interchanger]


@dataclass(frozen=True)
class Term3:
    boundary_source: Term2
    moves: tuple[Move3, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    def __len__(self) -> int:
        return len(self.moves)


# -- paths -------------------------------------------------------------------

def path_objects(sig: Signature, p: Path1) -> tuple[str, ...]:
    """The 0-cells visited by ``p``, ``len(p) + 1`` of them."""
    memo = sig.memo
    hit = memo.get(p)
    if hit is None:
        hit = memo[p] = tuple(_path_objects(sig, p))
    return hit


def _path_objects(sig: Signature, p: Path1) -> list[str]:
    if not sig.has(p.start, 0):
        raise UnknownGenerator(f"unknown 0-cell {p.start!r}")
    ends = sig.ends1
    objs = [p.start]
    for i, name in enumerate(p.segments):
        try:
            src, tgt = ends[name]
        except KeyError:
            raise UnknownGenerator(f"no 1-cell named {name!r}") from None
        if src != objs[-1]:
            raise NonComposablePath(f"{name!r} starts at {src!r}, path is at {objs[-1]!r}", i)
        objs.append(tgt)
    return objs


def path_end(sig: Signature, p: Path1) -> str:
    return path_objects(sig, p)[-1]


def concat(sig: Signature, *paths: Path1) -> Path1:
    segs: tuple[str, ...] = ()
    end = paths[0].start
    for p in paths:
        if p.start != end:
            raise BoundaryMismatch(f"cannot compose path ending at {end!r} with {p}")
        end = path_end(sig, p)
        segs += p.segments
    return Path1(paths[0].start, segs)


def path_slice(sig: Signature, p: Path1, i: int, j: int | None = None) -> Path1:
    objs = path_objects(sig, p)
    j = len(p) if j is None else j
    return Path1(objs[i], p.segments[i:j])


# -- layers and 2-terms ------------------------------------------------------

def _core(sig: Signature, name: str):
    return sig.get(name, 2)


def _layer_ends(sig: Signature, layer: Layer2) -> tuple[Path1, Path1]:
    key = ("layer", layer)
    hit = sig.memo.get(key)
    if hit is None:
        core = _core(sig, layer.core)
        hit = sig.memo[key] = (concat(sig, layer.left, core.source, layer.right),
                               concat(sig, layer.left, core.target, layer.right))
    return hit


def layer_source(sig: Signature, layer: Layer2) -> Path1:
    return _layer_ends(sig, layer)[0]


def layer_target(sig: Signature, layer: Layer2) -> Path1:
    return _layer_ends(sig, layer)[1]


def identity2(p: Path1) -> Term2:
    return Term2(p, ())


def gap_paths(sig: Signature, t: Term2) -> list[Path1]:
    """Paths between consecutive layers; entry ``i`` sits above layer ``i``."""
    paths = [t.boundary_source]
    for layer in t.layers:
        paths.append(layer_target(sig, layer))
    return paths


def _check_term2(sig: Signature, t: Term2) -> tuple[Path1, Path1]:
    path_objects(sig, t.boundary_source)
    current = t.boundary_source
    for i, layer in enumerate(t.layers):
        try:
            src = layer_source(sig, layer)
        except (NonComposablePath, BoundaryMismatch) as exc:
            raise LayerMismatch(i, f"layer {i} is ill-typed: {exc}") from exc
        if src != current:
            raise LayerMismatch(i, f"layer {i} expects {src}, got {current}")
        current = layer_target(sig, layer)
    return t.boundary_source, current


def source2(sig: Signature, t: Term2) -> Path1:
    return t.boundary_source


def target2(sig: Signature, t: Term2) -> Path1:
    return layer_target(sig, t.layers[-1]) if t.layers else t.boundary_source


def compose_vertical(sig: Signature, a: Term2, b: Term2) -> Term2:
    """``a`` followed by ``b``."""
    if target2(sig, a) != b.boundary_source:
        raise BoundaryMismatch(f"target {target2(sig, a)} != source {b.boundary_source}")
    return Term2(a.boundary_source, a.layers + b.layers)


def whisker(sig: Signature, side: Side, p: Path1, t: Term2) -> Term2:
    """Extend every layer's left (or right) context by ``p``."""
    if side is Side.LEFT:
        if path_end(sig, p) != t.boundary_source.start:
            raise BoundaryMismatch(f"{p} does not end where {t} starts")
        return Term2(
            concat(sig, p, t.boundary_source),
            tuple(Layer2(concat(sig, p, l.left), l.core, l.right) for l in t.layers))
    end = path_end(sig, t.boundary_source)
    if p.start != end:
        raise BoundaryMismatch(f"{p} does not start where {t} ends")
    return Term2(
        concat(sig, t.boundary_source, p),
        tuple(Layer2(l.left, l.core, concat(sig, l.right, p)) for l in t.layers))


def out_span(sig: Signature, layer: Layer2) -> tuple[int, int]:
    n = len(layer.left)
    return n, n + len(_core(sig, layer.core).target)


def in_span(sig: Signature, layer: Layer2) -> tuple[int, int]:
    n = len(layer.left)
    return n, n + len(_core(sig, layer.core).source)


def relative_position(sig: Signature, a: Layer2, b: Layer2) -> Side | None:
    key = ("rel", a, b)
    memo = sig.memo
    if key in memo:
        return memo[key]
    out = memo[key] = _relative_position(sig, a, b)
    return out


def _relative_position(sig: Signature, a: Layer2, b: Layer2) -> Side | None:
    """Where ``a`` sits relative to the layer ``b`` directly below it.

    ``Side.LEFT`` means a's core is strictly left of b's core.  Returns None
    when the supports overlap, including the case of two empty supports at
    the same point, which has no well-defined left/right order.
    """
    sa, ea = out_span(sig, a)
    sb, eb = in_span(sig, b)
    left, right = ea <= sb, eb <= sa
    if left and not right:
        return Side.LEFT
    if right and not left:
        return Side.RIGHT
    return None


def commute(sig: Signature, a: Layer2, b: Layer2) -> tuple[Layer2, Layer2]:
    """Swap adjacent disjoint layers ``a; b`` into ``b'; a'``."""
    key = ("commute", a, b)
    hit = sig.memo.get(key)
    if hit is None:
        hit = sig.memo[key] = _commute(sig, a, b)
    return hit


def _commute(sig: Signature, a: Layer2, b: Layer2) -> tuple[Layer2, Layer2]:
    if layer_target(sig, a) != layer_source(sig, b):
        raise NotAdjacent(f"{a} and {b} are not vertically adjacent")
    pos = relative_position(sig, a, b)
    if pos is None:
        raise OverlappingSupport(f"{a} and {b} have overlapping support")
    alpha, beta = _core(sig, a.core), _core(sig, b.core)
    sa, ea = out_span(sig, a)
    sb, eb = in_span(sig, b)
    middle = layer_target(sig, a).segments
    if pos is Side.LEFT:
        gap = middle[ea:sb]
        b2 = Layer2(Path1(a.left.start, a.left.segments + alpha.source.segments + gap),
                    b.core, b.right)
        a2 = Layer2(a.left, a.core,
                    Path1(a.right.start, gap + beta.target.segments + b.right.segments))
    else:
        gap = middle[eb:sa]
        b2 = Layer2(b.left, b.core,
                    Path1(b.right.start, gap + alpha.source.segments + a.right.segments))
        a2 = Layer2(Path1(b.left.start, b.left.segments + beta.target.segments + gap),
                    a.core, a.right)
    return b2, a2


def commute_at(sig: Signature, t: Term2, i: int) -> Term2:
    b2, a2 = commute(sig, t.layers[i], t.layers[i + 1])
    return Term2(t.boundary_source, t.layers[:i] + (b2, a2) + t.layers[i + 2:])


# -- 3-terms -----------------------------------------------------------------

def _sandwich(above: Term2, block: tuple[Layer2, ...], below: Term2) -> Term2:
    return Term2(above.boundary_source, above.layers + block + below.layers)


def _gen3_blocks(sig: Signature, mv: Gen3):
    gen = sig.get(mv.core, 3)
    ws = whisker(sig, Side.RIGHT, mv.right, whisker(sig, Side.LEFT, mv.left, gen.source))
    wt = whisker(sig, Side.RIGHT, mv.right, whisker(sig, Side.LEFT, mv.left, gen.target))
    return ws, wt


def move_boundary(sig: Signature, mv: Move3) -> tuple[Term2, Term2]:
    """Input and output 2-terms of a single move."""
    if isinstance(mv, Gen3):
        ws, wt = _gen3_blocks(sig, mv)
        top, bottom = ws.boundary_source, target2(sig, ws)
        block_in, block_out = ws.layers, wt.layers
    else:
        pos = relative_position(sig, mv.a, mv.b) if _adjacent(sig, mv.a, mv.b) else None
        if pos is None:
            raise OverlappingSupport(f"interchanger on {mv.a}, {mv.b} is not a disjoint pair")
        expected = Direction.FORWARD if pos is Side.LEFT else Direction.BACKWARD
        if mv.direction is not expected:
            raise OrientationMismatch(
                f"pair {mv.a}, {mv.b} has {expected.value} orientation")
        top, bottom = layer_source(sig, mv.a), layer_target(sig, mv.b)
        block_in = (mv.a, mv.b)
        block_out = commute(sig, mv.a, mv.b)
    _check_term2(sig, mv.above)
    _check_term2(sig, mv.below)
    if target2(sig, mv.above) != top:
        raise BoundaryMismatch(f"context above ends at {target2(sig, mv.above)}, move starts at {top}")
    if mv.below.boundary_source != bottom:
        raise BoundaryMismatch(f"context below starts at {mv.below.boundary_source}, move ends at {bottom}")
    return _sandwich(mv.above, block_in, mv.below), _sandwich(mv.above, tuple(block_out), mv.below)


def _adjacent(sig: Signature, a: Layer2, b: Layer2) -> bool:
    try:
        return layer_target(sig, a) == layer_source(sig, b)
    except GrayError:
        return False


def move_window(sig: Signature, mv: Move3) -> tuple[int, int, int, int, int]:
    """``(k, n, m, left, right)``: the move replaces layers ``[k, k+n)`` with
    ``m`` layers; ``left``/``right`` are the lengths of the untouched context
    paths on either side of its horizontal span."""
    k = len(mv.above.layers)
    if isinstance(mv, Gen3):
        gen = sig.get(mv.core, 3)
        return k, len(gen.source.layers), len(gen.target.layers), len(mv.left), len(mv.right)
    if mv.direction is Direction.FORWARD:
        return k, 2, 2, len(mv.a.left), len(mv.b.right)
    return k, 2, 2, len(mv.b.left), len(mv.a.right)


def interchanger(sig: Signature, a: Layer2, b: Layer2, above: Term2 | None = None,
                 below: Term2 | None = None, direction: Direction | None = None) -> Term3:
    """A single-move 3-term from ``... a; b ...`` to ``... b'; a' ...``."""
    if layer_target(sig, a) != layer_source(sig, b):
        raise NotAdjacent(f"{a} and {b} are not vertically adjacent")
    pos = relative_position(sig, a, b)
    if pos is None:
        raise OverlappingSupport(f"{a} and {b} have overlapping support")
    actual = Direction.FORWARD if pos is Side.LEFT else Direction.BACKWARD
    if direction is not None and direction is not actual:
        raise OrientationMismatch(f"pair {a}, {b} has {actual.value} orientation")
    above = above if above is not None else identity2(layer_source(sig, a))
    below = below if below is not None else identity2(layer_target(sig, b))
    mv = Interchanger(a, b, actual, above, below)
    src, _ = move_boundary(sig, mv)
    return Term3(src, (mv,))


def interchanger_at(sig: Signature, t: Term2, i: int,
                    direction: Direction | None = None) -> Term3:
    """The interchanger acting on layers ``i, i+1`` of ``t``."""
    _check_term2(sig, t)
    if not 0 <= i < len(t.layers) - 1:
        raise NotAdjacent(f"no layer pair at index {i} in a {len(t.layers)}-layer term")
    above = Term2(t.boundary_source, t.layers[:i])
    below = Term2(layer_target(sig, t.layers[i + 1]), t.layers[i + 2:])
    return interchanger(sig, t.layers[i], t.layers[i + 1], above, below, direction)


def gen3_at(sig: Signature, t: Term2, core: str, k: int, offset: int) -> Gen3:
    """The move applying 3-generator ``core`` to ``t`` at gap ``k``, ``offset``
    wires from the left."""
    gen = sig.get(core, 3)
    _check_term2(sig, t)
    if not 0 <= k <= len(t.layers):
        raise BoundaryMismatch(f"gap {k} out of range")
    path = gap_paths(sig, t)[k]
    width = len(gen.source.boundary_source)
    if offset < 0 or offset + width > len(path):
        raise BoundaryMismatch(f"offset {offset} out of range")
    left = path_slice(sig, path, 0, offset)
    right = path_slice(sig, path, offset + width)
    mv = Gen3(left, core, right, Term2(t.boundary_source, t.layers[:k]), identity2(path))
    ws, _ = _gen3_blocks(sig, mv)
    n = len(ws.layers)
    if ws.boundary_source != path or t.layers[k:k + n] != ws.layers:
        raise BoundaryMismatch(f"source of {core} does not occur at gap {k}, offset {offset}")
    bottom = gap_paths(sig, t)[k + n]
    return Gen3(left, core, right, mv.above, Term2(bottom, t.layers[k + n:]))


def identity3(t: Term2) -> Term3:
    return Term3(t, ())


def _check_term3(sig: Signature, t: Term3) -> tuple[Term2, Term2]:
    _check_term2(sig, t.boundary_source)
    current = t.boundary_source
    for i, mv in enumerate(t.moves):
        try:
            src, tgt = move_boundary(sig, mv)
        except GrayError as exc:
            raise MoveMismatch(i, f"move {i} is ill-typed: {exc}") from exc
        if src != current:
            raise MoveMismatch(i, f"move {i} does not start where move {i - 1} ends")
        current = tgt
    return t.boundary_source, current


def frames(sig: Signature, t: Term3) -> list[Term2]:
    """All intermediate 2-terms of a 3-term, ``len(t) + 1`` of them."""
    out = [t.boundary_source]
    for mv in t.moves:
        out.append(move_boundary(sig, mv)[1])
    return out


def compose_vertical3(sig: Signature, a: Term3, b: Term3) -> Term3:
    if typecheck(sig, a)[1] != b.boundary_source:
        raise BoundaryMismatch("3-terms are not composable")
    return Term3(a.boundary_source, a.moves + b.moves)


def _shift_move(sig: Signature, mv: Move3, above: Term2, below: Term2) -> Move3:
    if isinstance(mv, Gen3):
        return Gen3(mv.left, mv.core, mv.right, above, below)
    return Interchanger(mv.a, mv.b, mv.direction, above, below)


def sandwich3(sig: Signature, above: Term2, t: Term3, below: Term2) -> Term3:
    """Compose ``t`` vertically with the 2-terms ``above`` and ``below``."""
    moves = []
    for mv in t.moves:
        moves.append(_shift_move(
            sig, mv,
            compose_vertical(sig, above, mv.above),
            compose_vertical(sig, mv.below, below)))
    return Term3(compose_vertical(sig, compose_vertical(sig, above, t.boundary_source), below),
                 tuple(moves))


def whisker3(sig: Signature, side: Side, p: Path1, t: Term3) -> Term3:
    """Whisker every move of a 3-term by the path ``p``."""
    def w2(x: Term2) -> Term2:
        return whisker(sig, side, p, x)

    def wl(layer: Layer2) -> Layer2:
        return w2(Term2(layer_source(sig, layer), (layer,))).layers[0]

    moves = []
    for mv in t.moves:
        if isinstance(mv, Gen3):
            left = concat(sig, p, mv.left) if side is Side.LEFT else mv.left
            right = concat(sig, mv.right, p) if side is Side.RIGHT else mv.right
            moves.append(Gen3(left, mv.core, right, w2(mv.above), w2(mv.below)))
        else:
            moves.append(Interchanger(wl(mv.a), wl(mv.b), mv.direction,
                                      w2(mv.above), w2(mv.below)))
    return Term3(w2(t.boundary_source), tuple(moves))


# -- typechecking ------------------------------------------------------------

def typecheck(sig: Signature, t):
    """Return the ``(source, target)`` pair of a path, 2-term or 3-term."""
    if isinstance(t, Path1):
        objs = path_objects(sig, t)
        return objs[0], objs[-1]
    if isinstance(t, Term2):
        return _check_term2(sig, t)
    if isinstance(t, Term3):
        return _check_term3(sig, t)
    raise TypeError(f"not a term: {t!r}")
