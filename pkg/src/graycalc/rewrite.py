"""The Gray axioms as moves on terms.

2-terms are compared up to commutation of adjacent layers with disjoint
support.  Two 2-terms related this way are exactly the ones connected by a
composite of interchangers, and :func:`interchange_witness` produces that
composite.

3-terms are rewritten by

* ``CancelInterchangerPair``: an interchanger followed by its inverse,
* ``Gen3Slide``: two consecutive moves acting on disjoint ranges of layers
  trade places,
* ``InterchangerNaturality``: sliding a layer across a block and then
  applying a move to the block equals applying the move first and sliding
  across its result.  With an interchanger as the move this is the
  Yang-Baxter relation.

Equality of 3-terms is only searched for, up to a step budget.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import BoundaryMismatch, GrayError, IllTypedTerm
from .signature import Signature
from .term import (
    Direction,
    Gen3,
    Interchanger,
    Move3,
    Side,
    Term2,
    Term3,
    commute_at,
    frames,
    gap_paths,
    gen3_at,
    in_span,
    interchanger_at,
    move_boundary,
    move_window,
    out_span,
    relative_position,
    typecheck,
)


class MoveKind(enum.Enum):
    COMMUTE_LAYERS = "CommuteLayers"
    CANCEL_INTERCHANGER_PAIR = "CancelInterchangerPair"
    GEN3_SLIDE = "Gen3Slide"
    INTERCHANGER_NATURALITY = "InterchangerNaturality"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    index: int
    result: Union[Term2, Term3]
    detail: str = ""

    def __str__(self) -> str:
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.kind.value}{{{self.index}}}{extra}"


@dataclass(frozen=True)
class NormalForm2:
    term: Term2
    certificate: tuple[Move, ...] = ()


@dataclass(frozen=True)
class Equal:
    steps: int
    path: tuple[Term3, ...] = ()

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotEqualWithin:
    budget: int
    explored: int = 0

    def __bool__(self) -> bool:
        return False


def _checked(sig: Signature, t):
    try:
        return typecheck(sig, t)
    except GrayError as exc:
        raise IllTypedTerm(str(exc)) from exc


# -- 2-terms -----------------------------------------------------------------

def commute_moves(sig: Signature, t: Term2) -> list[Move]:
    moves = []
    for i in range(len(t.layers) - 1):
        if relative_position(sig, t.layers[i], t.layers[i + 1]) is not None:
            moves.append(Move(MoveKind.COMMUTE_LAYERS, i, commute_at(sig, t, i)))
    return moves


def descents(sig: Signature, t: Term2) -> list[int]:
    """Indices where the lower of two commuting layers lies to the left."""
    return [i for i in range(len(t.layers) - 1)
            if relative_position(sig, t.layers[i], t.layers[i + 1]) is Side.RIGHT]


def normalize2(sig: Signature, t: Term2) -> NormalForm2:
    """Bubble the left core upward wherever two commuting layers are out of
    order, always at the topmost such pair.

    Commuting layers always have strictly ordered horizontal positions, so the
    name and index tie-breaks of the sort key are never consulted.
    """
    _checked(sig, t)
    certificate = []
    i = 0
    while True:
        # pairs above the last swap were descent-free and are untouched by it
        i = _first_descent(sig, t, max(i - 1, 0))
        if i is None:
            return NormalForm2(t, tuple(certificate))
        t = commute_at(sig, t, i)
        certificate.append(Move(MoveKind.COMMUTE_LAYERS, i, t))


def _first_descent(sig: Signature, t: Term2, start: int) -> int | None:
    layers = t.layers
    for i in range(start, len(layers) - 1):
        if relative_position(sig, layers[i], layers[i + 1]) is Side.RIGHT:
            return i
    return None


def inversion_count(sig: Signature, t: Term2) -> int:
    """Pairs of layers whose vertical order differs from the normal form.

    Layers are tracked as occurrences through the normalizing swaps, so the
    count is the Kendall distance between ``t`` and its normal form.  Each
    normalizing step removes exactly one inversion.
    """
    order = list(range(len(t.layers)))
    for mv in normalize2(sig, t).certificate:
        order[mv.index], order[mv.index + 1] = order[mv.index + 1], order[mv.index]
    rank = {occ: k for k, occ in enumerate(order)}
    return sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if rank[i] > rank[j])


def replay(sig: Signature, t: Term2, certificate) -> Term2:
    for mv in certificate:
        t = commute_at(sig, t, mv.index)
        if t != mv.result:
            raise BoundaryMismatch(f"certificate step {mv} does not replay")
    return t


def _same_boundary(sig: Signature, a, b) -> None:
    if _checked(sig, a) != _checked(sig, b):
        raise BoundaryMismatch("terms have different boundaries")


def equal2(sig: Signature, a: Term2, b: Term2) -> bool:
    _same_boundary(sig, a, b)
    return normalize2(sig, a).term == normalize2(sig, b).term


def interchange_witness(sig: Signature, a: Term2, b: Term2) -> Term3 | None:
    """A 3-term built only from interchangers from ``a`` to ``b``, if any."""
    _same_boundary(sig, a, b)
    na, nb = normalize2(sig, a), normalize2(sig, b)
    if na.term != nb.term:
        return None
    moves = []
    current = a
    for mv in na.certificate:
        moves.append(interchanger_at(sig, current, mv.index).moves[0])
        current = mv.result
    back = [b] + [mv.result for mv in nb.certificate]
    for i in range(len(nb.certificate) - 1, -1, -1):
        step = interchanger_at(sig, back[i + 1], nb.certificate[i].index).moves[0]
        moves.append(step)
    return Term3(a, tuple(moves))


# -- 3-terms -----------------------------------------------------------------

def _slide(sig: Signature, x: Term2, p: int, k: int, n: int):
    """Interchangers moving layer ``p`` across the ``n``-layer block at ``k``.

    ``p`` must be ``k - 1`` (slide down) or ``k + n`` (slide up).
    """
    positions = range(p, p + n) if p == k - 1 else range(p - 1, p - n - 1, -1)
    moves = []
    for i in positions:
        mv = interchanger_at(sig, x, i).moves[0]
        moves.append(mv)
        x = move_boundary(sig, mv)[1]
    return moves, x


def _rebuild(sig: Signature, template: Move3, x: Term2, k: int, left: int) -> Move3:
    if isinstance(template, Gen3):
        return gen3_at(sig, x, template.core, k, left)
    mv = interchanger_at(sig, x, k).moves[0]
    if not _same_pair(template, mv):
        raise BoundaryMismatch("interchanger no longer applies to the same cores")
    return mv


def _same_pair(a: Interchanger, b: Interchanger) -> bool:
    return (a.a.core, a.b.core, a.direction) == (b.a.core, b.b.core, b.direction)


def _context_side(sig: Signature, x: Term2, p: int, below_block: bool,
                  left: int, right: int) -> Side | None:
    """Which context region of a block the layer at ``p`` touches, if it stays
    clear of the block's horizontal span."""
    layer = x.layers[p]
    s, e = in_span(sig, layer) if below_block else out_span(sig, layer)
    width = len(gap_paths(sig, x)[p if below_block else p + 1])
    in_left, in_right = e <= left, s >= width - right
    if in_left and not in_right:
        return Side.LEFT
    if in_right and not in_left:
        return Side.RIGHT
    return None


def _layer_delta(sig: Signature, x: Term2, p: int) -> int:
    gen = sig.get(x.layers[p].core, 2)
    return len(gen.target) - len(gen.source)


def _cancel_moves(sig, t: Term3, fr) -> list[Move]:
    out = []
    for j in range(len(t.moves) - 1):
        m1, m2 = t.moves[j], t.moves[j + 1]
        if isinstance(m1, Interchanger) and isinstance(m2, Interchanger) \
                and len(m1.above.layers) == len(m2.above.layers) and fr[j + 2] == fr[j]:
            out.append(Move(MoveKind.CANCEL_INTERCHANGER_PAIR, j,
                            Term3(t.boundary_source, t.moves[:j] + t.moves[j + 2:])))
    return out


def _slide_moves(sig, t: Term3, fr) -> list[Move]:
    out = []
    for j in range(len(t.moves) - 1):
        m1, m2 = t.moves[j], t.moves[j + 1]
        k1, n1, o1, l1, _ = move_window(sig, m1)
        k2, n2, o2, l2, _ = move_window(sig, m2)
        try:
            if k2 >= k1 + o1:
                first = _rebuild(sig, m2, fr[j], k2 - o1 + n1, l2)
                second = _rebuild(sig, m1, move_boundary(sig, first)[1], k1, l1)
            elif k2 + n2 <= k1:
                first = _rebuild(sig, m2, fr[j], k2, l2)
                second = _rebuild(sig, m1, move_boundary(sig, first)[1], k1 - n2 + o2, l1)
            else:
                continue
        except GrayError:
            continue
        moves = t.moves[:j] + (first, second) + t.moves[j + 2:]
        out.append(Move(MoveKind.GEN3_SLIDE, j, Term3(t.boundary_source, moves)))
    return out


def _naturality_moves(sig, t: Term3, fr) -> list[Move]:
    out = []
    moves = t.moves
    for j, g in enumerate(moves):
        k, n, m, left, right = move_window(sig, g)
        # g applied first, then a neighbour slides across its output block
        for above in (True, False):
            x_in, x_out = fr[j], fr[j + 1]
            p_out = k - 1 if above else k + m
            if not 0 <= p_out < len(x_out.layers) or j + 1 + m > len(moves):
                continue
            side = _context_side(sig, x_out, p_out, not above, left, right)
            if side is None:
                continue
            try:
                after, _ = _slide(sig, x_out, p_out, k, m)
                if tuple(after) != moves[j + 1:j + 1 + m]:
                    continue
                p_in = k - 1 if above else k + n
                before, y = _slide(sig, x_in, p_in, k, n)
                delta = _layer_delta(sig, x_in, p_in) if side is Side.LEFT else 0
                g2 = _rebuild(sig, g, y, k - 1 if above else k + 1,
                              left - delta if above else left + delta)
            except GrayError:
                continue
            new = moves[:j] + tuple(before) + (g2,) + moves[j + 1 + m:]
            out.append(Move(MoveKind.INTERCHANGER_NATURALITY, j, Term3(t.boundary_source, new),
                            "slide first, from " + ("above" if above else "below")))
        # a neighbour slid across the block first, then g
        for came_from_above in (True, False):
            if j - n < 0:
                continue
            x0, xj = fr[j - n], fr[j]
            p_now = k + n if came_from_above else k - 1
            if not 0 <= p_now < len(xj.layers):
                continue
            side = _context_side(sig, xj, p_now, came_from_above, left, right)
            if side is None:
                continue
            try:
                if came_from_above:
                    before, _ = _slide(sig, x0, k, k + 1, n)
                else:
                    before, _ = _slide(sig, x0, k - 1 + n, k - 1, n)
                if tuple(before) != moves[j - n:j]:
                    continue
                delta = _layer_delta(sig, xj, p_now) if side is Side.LEFT else 0
                if came_from_above:
                    g0 = _rebuild(sig, g, x0, k + 1, left + delta)
                    after, _ = _slide(sig, move_boundary(sig, g0)[1], k, k + 1, m)
                else:
                    g0 = _rebuild(sig, g, x0, k - 1, left - delta)
                    after, _ = _slide(sig, move_boundary(sig, g0)[1], k - 1 + m, k - 1, m)
            except GrayError:
                continue
            new = moves[:j - n] + (g0,) + tuple(after) + moves[j + 1:]
            out.append(Move(MoveKind.INTERCHANGER_NATURALITY, j - n,
                            Term3(t.boundary_source, new),
                            "move first, neighbour from " + ("above" if came_from_above else "below")))
    return out


def applicable_moves(sig: Signature, t) -> list[Move]:
    """Every single-step rewrite of a 2-term or 3-term."""
    bounds = _checked(sig, t)
    if isinstance(t, Term2):
        return commute_moves(sig, t)
    fr = frames(sig, t)
    found = _cancel_moves(sig, t, fr) + _slide_moves(sig, t, fr) + _naturality_moves(sig, t, fr)
    unique, seen = [], set()
    for mv in found:
        if mv.result == t or (mv.kind, mv.result) in seen:
            continue
        seen.add((mv.kind, mv.result))
        if typecheck(sig, mv.result) != bounds:
            raise AssertionError(f"{mv} changed the boundary of a 3-term")
        unique.append(mv)
    return unique


def equiv3(sig: Signature, a: Term3, b: Term3, budget: int,
           max_states: int = 200_000) -> Equal | NotEqualWithin:
    """Bidirectional breadth-first search for a rewrite path from ``a`` to ``b``.

    ``Equal`` is definitive.  ``NotEqualWithin`` only says no path of at most
    ``budget`` moves was found.
    """
    _same_boundary(sig, a, b)
    if a == b:
        return Equal(0, (a,))
    parents = ({a: None}, {b: None})
    frontiers = ([a], [b])
    depths = [0, 0]
    explored = 2
    while depths[0] + depths[1] < budget and frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, theirs = parents[side], parents[1 - side]
        nxt = []
        for state in frontiers[side]:
            for mv in applicable_moves(sig, state):
                r = mv.result
                if r in mine:
                    continue
                mine[r] = state
                explored += 1
                if r in theirs:
                    depths[side] += 1
                    return Equal(depths[0] + depths[1], _join_paths(parents, r, side))
                nxt.append(r)
                if explored > max_states:
                    return NotEqualWithin(budget, explored)
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        depths[side] += 1
    return NotEqualWithin(budget, explored)


def _join_paths(parents, meet, side) -> tuple[Term3, ...]:
    def walk(table, s):
        out = []
        while s is not None:
            out.append(s)
            s = table[s]
        return out
    from_a = walk(parents[0], meet)[::-1]
    from_b = walk(parents[1], meet)
    return tuple(from_a + from_b[1:])


def move_kinds(t: Term3) -> list[str]:
    return ["gen3" if isinstance(mv, Gen3) else "interchanger" for mv in t.moves]


__all__ = [
    "Direction", "Equal", "Move", "MoveKind", "NormalForm2", "NotEqualWithin",
    "applicable_moves", "commute_moves", "descents", "equal2", "equiv3",
    "interchange_witness", "inversion_count", "normalize2", "replay",
]
