"""Small named 2-categories, functors and transformations used by the
scripts, the tests and the golden documents."""

from __future__ import annotations

from .twocat import Finite2Category, one_object_2category, walking_arrow
from .twofun import LaxFunctorData, Strength, TransformationData, identity_functor


def z2_loop(obj="*") -> Finite2Category:
    """One object, one 1-cell, 2-cells the group of order two."""
    return one_object_2category(["e", "s"], lambda b, a: "e" if a == b else "s", "e", name="Z2", obj=obj)


def idempotent_loop(obj="*") -> Finite2Category:
    """One object, one 1-cell, 2-cells ``{e, p}`` with ``p . p = p``."""
    return one_object_2category(["e", "p"], lambda b, a: "e" if a == b == "e" else "p", "e",
                                name="Idem", obj=obj)


def twisted_pair() -> Finite2Category:
    """Objects ``X``, ``Y``; parallel 1-cells ``u, v: X -> Y`` joined by an
    isomorphism ``r: u => v``; each identity 1-cell carries an involution
    (``s`` on ``X``, ``t`` on ``Y``) acting trivially on ``r``."""
    return Finite2Category.build(
        ["X", "Y"],
        {"u": ("X", "Y"), "v": ("X", "Y")},
        {"s": ("id_X", "id_X"), "t": ("id_Y", "id_Y"), "r": ("u", "v"), "ri": ("v", "u")},
        vcomp={("s", "s"): "1_id_X", ("t", "t"): "1_id_Y",
               ("ri", "r"): "1_u", ("r", "ri"): "1_v"},
        hcomp={("s", "s"): "1_id_X", ("t", "t"): "1_id_Y"},
        name="P",
    )


def twisted_functor(image: str = "u", twisted: bool = True) -> LaxFunctorData:
    """A pseudo functor from the walking arrow into :func:`twisted_pair`
    sending ``a`` to ``image``; ``twisted`` makes its unit cells ``s``/``t``."""
    A, B = walking_arrow(), twisted_pair()
    sx, ty = ("s", "t") if twisted else ("1_id_X", "1_id_Y")
    return LaxFunctorData(
        Strength.PSEUDO, A, B,
        {0: "X", 1: "Y"},
        {"id_0": "id_X", "id_1": "id_Y", "a": image},
        {"1_id_0": "1_id_X", "1_id_1": "1_id_Y", "1_a": f"1_{image}"},
        {("id_0", "id_0"): sx, ("id_1", "id_1"): ty,
         ("a", "id_0"): f"1_{image}", ("id_1", "a"): f"1_{image}"},
        {0: sx, 1: ty},
        name="F" if twisted else "G",
    )


def swap_transformation() -> TransformationData:
    """A pseudo transformation from ``twisted_functor('u')`` to the untwisted
    functor sending ``a`` to ``v``; its witness at ``a`` is ``ri: v => u``."""
    F = twisted_functor("u", twisted=True)
    G = twisted_functor("v", twisted=False)
    return TransformationData(
        Strength.PSEUDO, F, G,
        {0: "id_X", 1: "id_Y"},
        {"id_0": "s", "id_1": "t", "a": "ri"},
        name="eta",
    )


def twisted_endofunctor() -> LaxFunctorData:
    """The identity of :func:`twisted_pair` on cells, with unit cells
    ``s``/``t`` and matching comparison cells on identity pairs."""
    B = twisted_pair()
    base = identity_functor(B)
    comp = dict(base.comp)
    comp[("id_X", "id_X")] = "s"
    comp[("id_Y", "id_Y")] = "t"
    return LaxFunctorData(Strength.PSEUDO, B, B, base.obj, base.one, base.two, comp,
                          {"X": "s", "Y": "t"}, name="H")


def untwisting_transformation() -> TransformationData:
    """The pseudo transformation from :func:`twisted_endofunctor` to the
    identity functor, with witnesses ``s``/``t`` on the identity 1-cells."""
    B = twisted_pair()
    H, K = twisted_endofunctor(), identity_functor(B)
    K = LaxFunctorData(Strength.PSEUDO, B, B, K.obj, K.one, K.two, K.comp, K.unit, name="K")
    wit = {f: B.id2[f] for f in B.one_cells}
    wit["id_X"], wit["id_Y"] = "s", "t"
    return TransformationData(Strength.PSEUDO, H, K, {"X": "id_X", "Y": "id_Y"}, wit, name="theta")
