import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import raw_terms, terms
from graycalc.errors import (
    BoundaryMismatch,
    LayerMismatch,
    MoveMismatch,
    NonComposablePath,
    NotAdjacent,
    OrientationMismatch,
    OverlappingSupport,
    UnknownGenerator,
)
from graycalc.signature import CellGenerator, build
from graycalc.term import (
    Direction,
    Layer2,
    Path1,
    Side,
    Term2,
    Term3,
    commute_at,
    compose_vertical,
    compose_vertical3,
    identity2,
    identity3,
    interchanger,
    interchanger_at,
    relative_position,
    target2,
    typecheck,
    whisker,
)


def P(*segs, start="x"):
    return Path1(start, segs)


@pytest.fixture(scope="module")
def abc():
    """x; f, f2, g, g2, h: x -> x; alpha: f => f2, beta: g => g2."""
    gens = [CellGenerator.zero("x")] + [CellGenerator.one(n, "x", "x") for n in ("f", "f2", "g", "g2", "h")]
    gens += [CellGenerator.two("alpha", P("f"), P("f2")), CellGenerator.two("beta", P("g"), P("g2"))]
    return build(gens)


def test_identity_term(abc):
    assert typecheck(abc, identity2(P("f", "g"))) == (P("f", "g"), P("f", "g"))


def test_single_whiskered_layer(abc):
    t = Term2(P("f", "h"), (Layer2(P(), "alpha", P("h")),))
    assert typecheck(abc, t) == (P("f", "h"), P("f2", "h"))


def test_layer_mismatch_reports_index(abc):
    l0 = Layer2(P(), "alpha", P("g"))
    wrong = Layer2(P("f"), "beta", P())   # expects f . g, but f2 . g is on offer
    with pytest.raises(LayerMismatch) as info:
        typecheck(abc, Term2(P("f", "g"), (l0, wrong)))
    assert info.value.index == 1


def test_non_composable_path():
    sig = build([CellGenerator.zero("x"), CellGenerator.zero("y"), CellGenerator.one("f", "x", "y")])
    with pytest.raises(NonComposablePath):
        typecheck(sig, P("f", "f"))
    with pytest.raises(UnknownGenerator):
        typecheck(sig, P("nope"))


def test_compose_vertical_units_and_concat(abc):
    a = Term2(P("f", "g"), (Layer2(P(), "alpha", P("g")),))
    b = Term2(P("f2", "g"), (Layer2(P("f2"), "beta", P()),))
    assert compose_vertical(abc, identity2(P("f", "g")), a) == a
    assert compose_vertical(abc, a, identity2(P("f2", "g"))) == a
    ab = compose_vertical(abc, a, b)
    assert ab.layers == a.layers + b.layers
    assert typecheck(abc, ab) == (P("f", "g"), P("f2", "g2"))
    with pytest.raises(BoundaryMismatch):
        compose_vertical(abc, b, a)


def test_whisker_examples(abc):
    a = Term2(P("f"), (Layer2(P(), "alpha", P()),))
    assert whisker(abc, Side.LEFT, P(), a) == a
    assert whisker(abc, Side.RIGHT, P("h"), a).layers == (Layer2(P(), "alpha", P("h")),)


def test_interchanger_example(abc):
    a = Layer2(P(), "alpha", P("g"))
    b = Layer2(P("f2"), "beta", P())
    t = interchanger(abc, a, b)
    src, tgt = typecheck(abc, t)
    assert src.layers == (a, b)
    assert tgt.layers == (Layer2(P("f"), "beta", P()), Layer2(P(), "alpha", P("g2")))
    assert src != tgt
    assert t.moves[0].direction is Direction.FORWARD


def test_interchanger_guards(abc):
    a = Layer2(P(), "alpha", P())
    a2 = Layer2(P(), "alpha", P())
    with pytest.raises(NotAdjacent):
        interchanger(abc, a, a2)   # f2 is not f
    sig = oracles.make_signature()
    over_a = Layer2(P(), "alpha", P("g"))
    over_b = Layer2(P(), "mu", P())
    with pytest.raises(OverlappingSupport):
        interchanger(sig, over_a, over_b)
    with pytest.raises(OrientationMismatch):
        interchanger(abc, Layer2(P(), "alpha", P("g")), Layer2(P("f2"), "beta", P()),
                     direction=Direction.BACKWARD)


def test_forward_then_backward_is_loop(abc):
    t = Term2(P("f", "g"), (Layer2(P(), "alpha", P("g")), Layer2(P("f2"), "beta", P())))
    fwd = interchanger_at(abc, t, 0, Direction.FORWARD)
    mid = typecheck(abc, fwd)[1]
    back = interchanger_at(abc, mid, 0, Direction.BACKWARD)
    loop = compose_vertical3(abc, fwd, back)
    src, tgt = typecheck(abc, loop)
    assert src == tgt == t


def test_move_mismatch_index(abc):
    t = Term2(P("f", "g"), (Layer2(P(), "alpha", P("g")), Layer2(P("f2"), "beta", P())))
    fwd = interchanger_at(abc, t, 0)
    with pytest.raises(MoveMismatch) as info:
        typecheck(abc, Term3(t, fwd.moves + fwd.moves))
    assert info.value.index == 1


def test_two_empty_supports_at_one_point_do_not_commute():
    sig = build([CellGenerator.zero("x"), CellGenerator.one("f", "x", "x"),
                 CellGenerator.two("eps", P("f"), P()), CellGenerator.two("eta", P(), P("f"))])
    counit, unit = Layer2(P(), "eps", P()), Layer2(P(), "eta", P())
    assert relative_position(sig, counit, unit) is None
    # an empty support at the edge of a nonempty one is ordered
    assert relative_position(sig, unit, Layer2(P(), "eta", P("f"))) is Side.RIGHT


@given(raw_terms())
def test_constructed_terms_typecheck(raw):
    sig = oracles.make_signature()
    t = oracles.to_term(raw)
    src, tgt = typecheck(sig, t)
    assert src.segments == raw[0]
    assert tgt.segments == oracles.raw_target(raw)
    for layer, wires in zip(t.layers, _gaps(raw)):
        assert oracles.layer_boundary(layer.left.segments, layer.core, layer.right.segments)[0] == wires


def _gaps(raw):
    wires, out = raw[0], []
    for p, core in raw[1]:
        out.append(wires)
        wires = oracles.apply_raw(wires, p, core)
    return out


@given(terms(), st.lists(st.sampled_from("fg"), max_size=2), st.sampled_from(list(Side)))
def test_whiskered_terms_typecheck(t, ctx, side):
    sig = oracles.make_signature()
    w = whisker(sig, side, P(*ctx), t)
    src, tgt = typecheck(sig, w)
    base_src, base_tgt = typecheck(sig, t)
    if side is Side.LEFT:
        assert src.segments == tuple(ctx) + base_src.segments
        assert tgt.segments == tuple(ctx) + base_tgt.segments
    else:
        assert src.segments == base_src.segments + tuple(ctx)
        assert tgt.segments == base_tgt.segments + tuple(ctx)


@given(terms(max_layers=3), terms(max_layers=3), terms(max_layers=3))
def test_compose_vertical_associative_when_defined(a, b, c):
    sig = oracles.make_signature()
    try:
        ab = compose_vertical(sig, a, b)
        abc_ = compose_vertical(sig, ab, c)
    except BoundaryMismatch:
        return
    assert abc_ == compose_vertical(sig, a, compose_vertical(sig, b, c))


@given(raw_terms(max_layers=5), st.data())
def test_interchanger_swaps_the_same_cores(raw, data):
    sig = oracles.make_signature()
    t = oracles.to_term(raw)
    pairs = [i for i in range(len(t.layers) - 1)
             if relative_position(sig, t.layers[i], t.layers[i + 1]) is not None]
    if not pairs:
        return
    i = data.draw(st.sampled_from(pairs))
    src, tgt = typecheck(sig, interchanger_at(sig, t, i))
    assert src == t
    assert tgt == commute_at(sig, t, i)
    assert [l.core for l in tgt.layers[i:i + 2]] == [l.core for l in src.layers[i:i + 2]][::-1]
    assert target2(sig, src) == target2(sig, tgt)
    assert identity3(t).moves == ()
