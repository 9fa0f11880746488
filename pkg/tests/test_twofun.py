import pytest

import axioms
from graycalc import catalog
from graycalc.errors import MiddleFunctorMismatch, NotPseudo, SizeGuardExceeded
from graycalc.guard import SizeGuard
from graycalc.twocat import (
    FiniteCategory,
    check_2category,
    discrete_2category,
    locally_discrete,
    one_object_2category,
    terminal_2category,
    walking_arrow,
)
from graycalc.twofun import (
    LaxFunctorData,
    ModificationData,
    Order,
    Strength,
    TransformationData,
    check_functor,
    check_modification,
    check_transformation,
    compose_transformations,
    constant_functor,
    enumerate_functors,
    enumerate_transformations,
    hom_2category,
    identity_functor,
    identity_modification,
    identity_transformation,
    inverse_modification,
    is_identity_modification,
    mediating_modification,
    vertical_composite,
    vertical_modification,
)


def z3():
    return one_object_2category([0, 1, 2], lambda b, a: (a + b) % 3, 0, name="Z3")


def composable_pair():
    return locally_discrete(FiniteCategory.build(
        [0, 1, 2], {"f": (0, 1), "g": (1, 2), "gf": (0, 2)}, {("g", "f"): "gf"}, name="3"))


def twisted_into_z3(c=0):
    """A pseudo functor from the composable pair into Z3: units 1, unit-law
    comparison cells 2, and ``phi(g, f) = c``."""
    A, B = composable_pair(), z3()
    comp = {}
    for (g, f) in A.comp1:
        comp[(g, f)] = c if (g, f) == ("g", "f") else 2
    return LaxFunctorData(Strength.PSEUDO, A, B, {x: "*" for x in A.objects},
                          {f: "id_*" for f in A.one_cells}, {a: 0 for a in A.two_cells},
                          comp, {x: 1 for x in A.objects}, name="T")


# -- functors ----------------------------------------------------------------

def test_identity_functor_is_strict():
    for A in (walking_arrow(), catalog.twisted_pair(), composable_pair()):
        assert check_functor(identity_functor(A)).ok


def test_strict_flag_with_non_identity_comparison():
    F = catalog.twisted_functor()
    strict = LaxFunctorData(Strength.STRICT, F.source, F.target, F.obj, F.one, F.two, F.comp, F.unit)
    assert "strength" in check_functor(strict).kinds()
    assert check_functor(F).ok


def test_catalog_data_is_valid():
    assert check_functor(catalog.twisted_functor()).ok
    assert check_functor(catalog.twisted_endofunctor()).ok
    assert check_transformation(catalog.swap_transformation()).ok
    assert check_transformation(catalog.untwisting_transformation()).ok


def test_comparison_perturbations_on_three_objects():
    F = twisted_into_z3()
    assert check_functor(F).ok
    base = axioms.functor_sides(F)
    for what, bad in axioms.mutations(F, ("comp",), lambda name, key: [0, 1, 2]):
        sides = axioms.functor_sides(bad)
        report = check_functor(bad)
        assert report.ok == axioms.holds(sides), what
        assoc_broken = any(k[0] == "associativity" for k in axioms.failing(sides))
        assert ("associativity" in report.kinds()) == assoc_broken, what
        assert axioms.changed(base, sides), what


def test_free_comparison_cell():
    # phi(g, f) appears on both sides of every equation it enters, so any
    # value gives a functor even though the equation sides change
    base = axioms.functor_sides(twisted_into_z3(0))
    for c in (1, 2):
        F = twisted_into_z3(c)
        assert check_functor(F).ok
        assert any(k[0] == "associativity" for k in axioms.changed(base, axioms.functor_sides(F)))


# -- transformations ---------------------------------------------------------

def _z3_transformation():
    A, B = walking_arrow(), z3()
    F = next(F for F in enumerate_functors(A, B, Strength.PSEUDO) if F.unit[0] == 1 and F.unit[1] == 0)
    G = constant_functor(A, B, "*")
    return next(iter(enumerate_transformations(F, G, Strength.PSEUDO)))


def test_identity_transformation():
    for F in (catalog.twisted_functor(), catalog.twisted_endofunctor(), identity_functor(walking_arrow())):
        assert check_transformation(identity_transformation(F)).ok


def test_strict_flag_with_non_identity_witness():
    eta = catalog.swap_transformation()
    strict = TransformationData(Strength.STRICT, eta.source, eta.target, eta.component, eta.witness)
    assert "strength" in check_transformation(strict).kinds()


def test_inverted_witness_breaks_composition():
    eta = _z3_transformation()
    assert check_transformation(eta).ok and eta.witness["id_0"] == 1
    wit = dict(eta.witness)
    wit["id_0"] = 2
    bad = TransformationData(eta.strength, eta.source, eta.target, eta.component, wit)
    assert "composition" in check_transformation(bad).kinds()


def test_strict_transformations_are_natural_squares():
    A, B = walking_arrow(), composable_pair()
    functors = enumerate_functors(A, B, Strength.STRICT)
    for F in functors:
        for G in functors:
            for eta in enumerate_transformations(F, G, Strength.STRICT):
                for f, (x, y) in A.one_cells.items():
                    assert B.comp1[(G.one[f], eta.component[x])] == B.comp1[(eta.component[y], F.one[f])]


def test_transformation_mutations_agree_with_oracle():
    eta = catalog.untwisting_transformation()
    B = eta.source.target
    for what, bad in axioms.mutations(eta, ("witness",), lambda name, key: list(B.two_cells)):
        assert check_transformation(bad).ok == axioms.holds(axioms.transformation_sides(bad)), what


# -- modifications -----------------------------------------------------------

def test_identity_modification():
    eta = catalog.swap_transformation()
    assert check_modification(identity_modification(eta)).ok
    assert is_identity_modification(identity_modification(eta))


def test_invertible_component_on_discrete_domain():
    A, B = discrete_2category(["a"]), catalog.z2_loop()
    eta = identity_transformation(constant_functor(A, B, "*"))
    m = ModificationData(eta, eta, {"a": "s"})
    assert check_modification(m).ok
    assert not is_identity_modification(m)


def _agrees_with_squares(m, cells):
    broken = 0
    for what, bad in axioms.mutations(m, ("component",), lambda name, key: cells):
        failing = axioms.failing(axioms.modification_sides(bad))
        report = check_modification(bad)
        if any(k[0] == "typing" for k in failing):
            assert "typing" in report.kinds(), what
        else:
            assert {v.subject for v in report} == {repr(k[1]) for k in failing}, what
            broken += bool(failing)
    return broken


def test_corrupt_modification_component():
    eta = _z3_transformation()
    m = identity_modification(eta)
    bad = ModificationData(eta, eta, {0: 1, 1: 0})
    assert [v.subject for v in check_modification(bad)] == ["'a'"]
    assert _agrees_with_squares(m, [0, 1, 2]) > 0
    # every endo-2-cell of the twisted pair is compatible, so nothing breaks there
    med = mediating_modification(catalog.swap_transformation(), catalog.untwisting_transformation())
    assert _agrees_with_squares(med, list(med.source.source.target.two_cells)) == 0


# -- composites and the mediating modification -------------------------------

def test_compose_with_identity():
    eta = catalog.swap_transformation()
    B = eta.source.target
    out = compose_transformations(eta, identity_transformation(identity_functor(B)))
    assert out.component == eta.component and out.witness == eta.witness
    assert vertical_composite(identity_transformation(eta.target), eta).witness == eta.witness


def test_strict_composite():
    A = walking_arrow()
    eta = identity_transformation(identity_functor(A))
    out = compose_transformations(eta, eta)
    assert out.strength is Strength.STRICT and check_transformation(out).ok


def test_both_orders_pass():
    eta, theta = catalog.swap_transformation(), catalog.untwisting_transformation()
    for order in Order:
        assert check_transformation(compose_transformations(eta, theta, order)).ok


def test_middle_mismatch():
    eta = catalog.swap_transformation()
    with pytest.raises(MiddleFunctorMismatch):
        compose_transformations(eta, identity_transformation(identity_functor(walking_arrow())))


def test_mediating_modification():
    eta, theta = catalog.swap_transformation(), catalog.untwisting_transformation()
    m = mediating_modification(eta, theta)
    assert check_modification(m).ok
    assert not is_identity_modification(m)
    inv = inverse_modification(m)
    assert inv is not None and check_modification(inv).ok
    assert is_identity_modification(vertical_modification(inv, m))
    assert is_identity_modification(vertical_modification(m, inv))


def test_mediating_with_strict_outer():
    eta = catalog.swap_transformation()
    B = eta.source.target
    theta = identity_transformation(identity_functor(B))
    assert is_identity_modification(mediating_modification(eta, theta))


def test_mediating_needs_pseudo():
    A, B = walking_arrow(), catalog.idempotent_loop()
    F = constant_functor(A, B, "*")
    G = LaxFunctorData(Strength.LAX, A, B, F.obj, F.one, F.two, F.comp, F.unit)
    lax = TransformationData(Strength.LAX, F, G, {0: "id_*", 1: "id_*"},
                             {f: "e" for f in A.one_cells})
    assert check_transformation(lax).ok
    with pytest.raises(NotPseudo):
        mediating_modification(lax, identity_transformation(identity_functor(B)))


# -- hom 2-categories --------------------------------------------------------

@pytest.mark.parametrize("make", [catalog.twisted_pair, catalog.z2_loop, walking_arrow,
                                  lambda: discrete_2category(["a", "b", "c"])])
def test_hom_from_terminal(make):
    B = make()
    h = hom_2category(terminal_2category(), B, Strength.STRICT)
    assert h.counts() == B.counts()
    assert check_2category(h.category).ok


def test_strict_hom_into_discrete():
    A, B = walking_arrow(), discrete_2category(["a", "b", "c"])
    h = hom_2category(discrete_2category([0, 1]), B, Strength.STRICT)
    assert h.counts()[0] == 3 ** 2
    assert h.counts() == (9, 9, 9)
    assert check_2category(h.category).ok
    assert hom_2category(A, B, Strength.STRICT).counts()[0] == 3


def test_pseudo_hom_over_walking_arrow():
    h = hom_2category(walking_arrow(), catalog.twisted_pair(), Strength.PSEUDO)
    assert check_2category(h.category).ok


def test_lax_hom_refused():
    with pytest.raises(ValueError):
        hom_2category(walking_arrow(), walking_arrow(), Strength.LAX)


def test_size_guard():
    with pytest.raises(SizeGuardExceeded):
        hom_2category(discrete_2category(range(6)), walking_arrow(), Strength.STRICT,
                      guard=SizeGuard(max_index_objects=4))


def test_enumerated_pseudo_functors_pass_oracle():
    A, B = walking_arrow(), z3()
    found = enumerate_functors(A, B, Strength.PSEUDO)
    for F in found:
        assert axioms.holds(axioms.functor_sides(F))
    # units are free; the unit-law comparison cells are then forced
    assert {(F.unit[0], F.unit[1]) for F in found} == {(i, j) for i in range(3) for j in range(3)}
