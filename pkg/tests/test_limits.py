import itertools

import pytest

from graycalc.errors import SizeGuardExceeded
from graycalc.guard import SizeGuard
from graycalc.limits import (
    Cone,
    check_cone,
    comma_category,
    certify_universal,
    delete_object,
    enumerate_cones,
    inclusion,
    lax_limit,
    limit,
    pseudo_limit,
    strict_diagram,
    strict_limit,
)
from graycalc.twocat import (
    FiniteCategory,
    NatTrans,
    arrow_category,
    check_category,
    discrete_2category,
    empty_category,
    find_isomorphism,
    identity_functor,
    injective_functors,
    terminal_2category,
    terminal_category,
    walking_arrow,
    FiniteFunctor,
)
from graycalc.twofun import Strength


def chain3():
    return FiniteCategory.build([0, 1, 2], {"f": (0, 1), "g": (1, 2), "gf": (0, 2)},
                                {("g", "f"): "gf"}, name="3")


def iso_pair():
    return FiniteCategory.build(["p", "q"], {"i": ("p", "q"), "j": ("q", "p")},
                                {("j", "i"): "id_p", ("i", "j"): "id_q"}, name="I")


def z2_group():
    return FiniteCategory.build(["*"], {"s": ("*", "*")}, {("s", "s"): "id_*"}, name="Z2")


def arrow_into_chain():
    """u: 2 -> 3 sending the arrow to f, so object 2 is not hit."""
    C, D = arrow_category(), chain3()
    return FiniteFunctor(C, D, {0: 0, 1: 1}, {"id_0": "id_0", "id_1": "id_1", "a": "f"}, name="u")


def over_arrow(u):
    return strict_diagram(walking_arrow(), {0: u.source, 1: u.target}, {"a": u}, name="F")


def product_pair():
    return strict_diagram(discrete_2category(["p", "q"]), {"p": arrow_category(), "q": iso_pair()}, name="P")


# -- independent oracles -----------------------------------------------------

def is_thin(c):
    return all(len(c.hom(x, y)) <= 1 for x in c.objects for y in c.objects)


def thin_isomorphic(c, d):
    """Brute force over object bijections; valid for thin categories."""
    if len(c.objects) != len(d.objects):
        return False
    for perm in itertools.permutations(d.objects):
        m = dict(zip(c.objects, perm))
        if all(len(c.hom(x, y)) == len(d.hom(m[x], m[y])) for x in c.objects for y in c.objects):
            return True
    return False


def comma_over_target(u):
    """Objects (c, d, m: u c -> d); morphisms (h, k) with k . m = m' . u h."""
    C, D = u.source, u.target
    objects = [(c, d, m) for c in C.objects for d in D.objects for m in D.hom(u.obj[c], d)]
    arrows = {}
    for s, t in itertools.product(objects, objects):
        for h in C.hom(s[0], t[0]):
            for k in D.hom(s[1], t[1]):
                if D.compose(k, s[2]) == D.compose(t[2], u.mor[h]):
                    arrows[(s, t, h, k)] = (s, t)
    return objects, arrows


# -- cones -------------------------------------------------------------------

def test_identity_cone_over_terminal():
    C = chain3()
    F = strict_diagram(terminal_2category(), {"*": C})
    ident = identity_functor(C)
    cone = Cone(Strength.STRICT, C, {"*": ident}, {"id_*": NatTrans(ident, ident, {x: C.id(x) for x in C.objects})})
    assert check_cone(cone, F).ok


def _twisted_cone():
    C = z2_group()
    F = over_arrow(identity_functor(C))
    L = lax_limit(F)
    cells = dict(L.cone.cells)
    p0 = L.cone.legs[0]
    cells["id_0"] = NatTrans(p0, p0, {x: "s" for x in L.limit.objects})
    return F, L, cells


def test_strict_cone_with_non_identity_cell():
    F, L, cells = _twisted_cone()
    assert check_cone(L.cone, F).ok
    strict = Cone(Strength.STRICT, L.limit, L.cone.legs, L.cone.cells)
    assert "strength" in check_cone(strict, F).kinds()


def test_wrong_cone_cell():
    F, L, cells = _twisted_cone()
    bad = Cone(Strength.LAX, L.limit, L.cone.legs, cells)
    assert "composition" in check_cone(bad, F).kinds()


# -- constructions -----------------------------------------------------------

@pytest.mark.parametrize("build", [lax_limit, pseudo_limit, strict_limit])
def test_terminal_indexing(build):
    C = chain3()
    L = build(strict_diagram(terminal_2category(), {"*": C}))
    assert (len(L.limit.objects), len(L.limit.morphisms)) == (3, 6)
    assert find_isomorphism(L.limit, C) is not None
    assert thin_isomorphic(L.limit, C)


@pytest.mark.parametrize("strength", [Strength.LAX, Strength.PSEUDO, Strength.STRICT])
def test_discrete_indexing_is_product(strength):
    L = limit(product_pair(), strength)
    C, D = arrow_category(), iso_pair()
    assert len(L.limit.objects) == len(C.objects) * len(D.objects)
    assert len(L.limit.morphisms) == len(C.morphisms) * len(D.morphisms)
    assert check_category(L.limit).ok
    assert check_cone(L.cone, product_pair()).ok


def test_lax_limit_over_arrow_is_comma():
    u = arrow_into_chain()
    L = lax_limit(over_arrow(u))
    objects, arrows = comma_over_target(u)
    assert (len(L.limit.objects), len(L.limit.morphisms)) == (len(objects), len(arrows)) == (5, 14)
    comma = comma_category(u, identity_functor(u.target))
    assert is_thin(L.limit) and is_thin(comma)
    assert thin_isomorphic(L.limit, comma)
    assert find_isomorphism(L.limit, comma) is not None


def test_strict_limit_smaller_when_not_surjective():
    F = over_arrow(arrow_into_chain())
    strict, pseudo, lax = strict_limit(F), pseudo_limit(F), lax_limit(F)
    assert len(strict.limit.objects) < len(lax.limit.objects)
    assert len(strict.limit.objects) == 2
    # strict embeds in pseudo embeds in lax
    assert next(injective_functors(strict.limit, pseudo.limit), None) is not None
    assert next(injective_functors(pseudo.limit, lax.limit), None) is not None
    assert inclusion(strict.limit, lax.limit) is not None


@pytest.mark.parametrize("build", [lax_limit, pseudo_limit, strict_limit])
def test_universal_cone_passes(build):
    for F in (product_pair(), over_arrow(arrow_into_chain()), over_arrow(identity_functor(z2_group()))):
        L = build(F)
        assert L.cone.strength is L.strength
        assert check_cone(L.cone, F).ok


def test_size_guard():
    big = FiniteCategory.build(range(7))
    with pytest.raises(SizeGuardExceeded):
        lax_limit(strict_diagram(terminal_2category(), {"*": big}))
    small = SizeGuard(max_candidates=3)
    with pytest.raises(SizeGuardExceeded):
        lax_limit(product_pair(), guard=small)


# -- certification -----------------------------------------------------------

def test_certify_empty_and_terminal_apex():
    F = product_pair()
    L = lax_limit(F)
    report = certify_universal(L, F, [empty_category(), terminal_category()])
    empty, point = report.entries
    assert (empty.cones, empty.functors) == (1, 1)
    assert point.cones == len(L.limit.objects) == 4
    assert report.ok


def test_cone_count_matches_direct_enumeration():
    F = over_arrow(arrow_into_chain())
    point = terminal_category()
    # a cone from the point is an object of the comma category
    assert len(enumerate_cones(F, point, Strength.LAX)) == len(comma_over_target(arrow_into_chain())[0])


def test_certify_fails_on_deletion():
    F = over_arrow(arrow_into_chain())
    L = lax_limit(F)
    apexes = [terminal_category(), arrow_category()]
    assert certify_universal(L, F, apexes).ok
    for x in L.limit.objects:
        report = certify_universal(delete_object(L, x), F, apexes)
        assert not report.ok
        assert not report.one_dimensional
