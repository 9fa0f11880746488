import itertools

import pytest
from hypothesis import given, strategies as st

from graycalc.errors import (
    DuplicateName,
    GlobularityViolation,
    UnknownBoundaryGenerator,
    ZeroCellHasNoBoundary,
)
from graycalc.signature import (
    BoundarySide,
    CellGenerator,
    GeneratorId,
    Signature,
    add_generator,
    boundary,
    build,
    validate,
)
from graycalc.term import Layer2, Path1, Term2

X = CellGenerator.zero("x")
Y = CellGenerator.zero("y")
Z = CellGenerator.zero("z")
F = CellGenerator.one("f", "x", "y")


def test_generator_id_guards():
    with pytest.raises(ValueError):
        GeneratorId("", 0)
    with pytest.raises(ValueError):
        GeneratorId("a", 4)


def test_add_object_to_empty():
    sig = add_generator(Signature(), X)
    assert sig.names(0) == ["x"]
    assert Signature().generators == ()


def test_add_endo_one_cell():
    sig = build([X, CellGenerator.one("f", "x", "x")])
    assert sig.get("f", 1).source == "x"


def test_undeclared_boundary_one_cell():
    sig = build([X, Y, F])
    alpha = CellGenerator.two("alpha", Path1("x", ("f",)), Path1("x", ("g",)))
    with pytest.raises(UnknownBoundaryGenerator):
        add_generator(sig, alpha)


def test_input_signature_is_unchanged():
    sig = build([X])
    add_generator(sig, Y)
    assert sig.names(0) == ["x"]


def test_duplicate_name_rejected_per_dimension():
    sig = build([X, CellGenerator.one("x", "x", "x")])
    with pytest.raises(DuplicateName):
        add_generator(sig, CellGenerator.zero("x"))


def test_unknown_endpoint_of_one_cell():
    with pytest.raises(UnknownBoundaryGenerator):
        build([X, CellGenerator.one("f", "x", "nowhere")])


def test_validate_empty_and_endo():
    assert validate(Signature()).ok
    sig = build([X, CellGenerator.one("f", "x", "x"),
                 CellGenerator.two("a", Path1("x", ("f",)), Path1("x", ("f",)))])
    assert validate(sig).ok


def test_validate_reports_one_globularity_violation():
    h = CellGenerator.one("h", "x", "z")
    bad = CellGenerator.two("a", Path1("x", ("f",)), Path1("x", ("h",)))
    sig = Signature((X, Y, Z, F, h, bad))
    report = validate(sig)
    assert len(report) == 1
    assert report.kinds() == {"GlobularityViolation"}
    assert "a" in report.entries[0].subject


def test_globularity_violation_on_insert():
    sig = build([X, Y, Z, F, CellGenerator.one("h", "x", "z")])
    with pytest.raises(GlobularityViolation):
        add_generator(sig, CellGenerator.two("a", Path1("x", ("f",)), Path1("x", ("h",))))


def test_three_cell_globularity():
    sig = build([X, CellGenerator.one("f", "x", "x"),
                 CellGenerator.two("a", Path1("x", ("f",)), Path1("x", ("f",))),
                 CellGenerator.two("b", Path1("x", ()), Path1("x", ("f",)))])
    t_a = Term2(Path1("x", ("f",)), (Layer2(Path1("x"), "a", Path1("x")),))
    t_b = Term2(Path1("x", ()), (Layer2(Path1("x"), "b", Path1("x")),))
    with pytest.raises(GlobularityViolation):
        add_generator(sig, CellGenerator.three("m", t_a, t_b))
    ok = add_generator(sig, CellGenerator.three("m", t_a, Term2(Path1("x", ("f",)))))
    assert ok.has("m", 3)


def test_boundary_accessors():
    alpha = CellGenerator.two("alpha", Path1("x", ("f",)), Path1("x", ("g",)))
    assert boundary(F, BoundarySide.SOURCE) == "x"
    assert boundary(alpha, BoundarySide.TARGET) == Path1("x", ("g",))
    with pytest.raises(ZeroCellHasNoBoundary):
        boundary(X, BoundarySide.SOURCE)


INDEPENDENT = [X, Y, CellGenerator.one("f", "x", "y"), CellGenerator.one("g", "y", "x"),
               CellGenerator.one("k", "x", "y")]


def _dependency_ok(order):
    seen = set()
    for g in order:
        if g.dimension == 1 and not {g.source, g.target} <= seen:
            return False
        if g.dimension == 0:
            seen.add(g.name)
    return True


def test_insertion_order_insensitive():
    reference = build(INDEPENDENT)
    for order in itertools.permutations(INDEPENDENT):
        if _dependency_ok(order):
            assert build(order).same_generators(reference)


@given(st.permutations(INDEPENDENT))
def test_validate_agrees_with_incremental_rebuild(order):
    sig = Signature(tuple(order))
    try:
        build(order)
        rebuilt = True
    except Exception:
        rebuilt = False
    assert validate(sig).ok == rebuilt
