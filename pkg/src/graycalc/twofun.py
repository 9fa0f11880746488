"""Lax, pseudo and strict functors between 2-categories, transformations,
modifications, and their coherence checkers.

Conventions: a comparison cell ``comp[(g, f)]`` goes ``Fg . Ff => F(g . f)``
and a unit cell ``unit[x]`` goes ``id_{Fx} => F(id_x)``.  A transformation
witness ``witness[f]`` for ``f: x -> y`` goes ``Gf . eta_x => eta_y . Ff``.

Sources are always :class:`~graycalc.twocat.Finite2Category`; targets may be
any object with the shared 2-category interface (including
:data:`~graycalc.twocat.CAT`).
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from typing import Callable

from .errors import (
    CompositeNotCoherent,
    GrayError,
    MiddleFunctorMismatch,
    NotPseudo,
    ValidationReport,
    Violation,
)
from .guard import SizeGuard, default_guard
from .twocat import Finite2Category, FrozenMap, check_2category


class Strength(enum.IntEnum):
    """Ordered from weakest to strongest requirement."""

    LAX = 0
    PSEUDO = 1
    STRICT = 2

    @classmethod
    def parse(cls, text: str) -> "Strength":
        return cls[text.strip().upper()]

    def __str__(self) -> str:
        return self.name.lower()


def weakest(*strengths: Strength) -> Strength:
    return Strength(min(strengths))


class Order(enum.Enum):
    LEFT_FIRST = "left-first"
    RIGHT_FIRST = "right-first"


def _freeze_fields(obj, names):
    for name in names:
        value = getattr(obj, name)
        if not isinstance(value, FrozenMap):
            object.__setattr__(obj, name, FrozenMap(value))


@dataclass(frozen=True)
class LaxFunctorData:
    strength: Strength
    source: Finite2Category
    target: object
    obj: Mapping
    one: Mapping
    two: Mapping
    comp: Mapping
    unit: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        _freeze_fields(self, ("obj", "one", "two", "comp", "unit"))

    def __repr__(self) -> str:
        return f"<{self.strength} functor {self.name or '?'}>"


@dataclass(frozen=True)
class TransformationData:
    strength: Strength
    source: LaxFunctorData
    target: LaxFunctorData
    component: Mapping
    witness: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        _freeze_fields(self, ("component", "witness"))

    def __repr__(self) -> str:
        return f"<{self.strength} transformation {self.name or '?'}>"


@dataclass(frozen=True)
class ModificationData:
    source: TransformationData
    target: TransformationData
    component: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        _freeze_fields(self, ("component",))

    def __repr__(self) -> str:
        return f"<modification {self.name or '?'}>"


# -- small helpers over the shared interface ---------------------------------

def _lw(B, g, a):
    """Whisker the 2-cell ``a`` by the 1-cell ``g`` on the later side."""
    return B.compose_h(B.identity2(g), a)


def _rw(B, a, f):
    """Whisker the 2-cell ``a`` by the 1-cell ``f`` on the earlier side."""
    return B.compose_h(a, B.identity2(f))


def _vseq(B, *cells):
    """Vertical composite of ``cells`` in the order they are applied."""
    out = cells[0]
    for c in cells[1:]:
        out = B.compose_v(c, out)
    return out


def _composable(A: Finite2Category) -> list:
    return sorted(A.comp1, key=repr)


def _triples(A: Finite2Category) -> list:
    out = []
    for (g, f) in _composable(A):
        for h in sorted(A.one_cells, key=repr):
            if (h, g) in A.comp1:
                out.append((h, g, f))
    return out


def _horizontal_2pairs(A: Finite2Category) -> list:
    return sorted(A.hcomp, key=repr)


class _Checker:
    def __init__(self):
        self.entries = []

    def equal(self, kind: str, subject: str, lhs: Callable, rhs: Callable) -> None:
        try:
            left, right = lhs(), rhs()
        except (GrayError, KeyError) as exc:
            self.entries.append(Violation(kind, subject, f"undefined: {exc}"))
            return
        if left != right:
            self.entries.append(Violation(kind, subject, f"{left!r} != {right!r}"))

    def holds(self, kind: str, subject: str, test: Callable, detail: str = "") -> None:
        try:
            ok = test()
        except (GrayError, KeyError) as exc:
            self.entries.append(Violation(kind, subject, f"undefined: {exc}"))
            return
        if not ok:
            self.entries.append(Violation(kind, subject, detail))

    def report(self) -> ValidationReport:
        return ValidationReport.of(self.entries)


def _is_invertible(B, a) -> bool:
    return B.inverse2(a) is not None


# -- functors ----------------------------------------------------------------

def _functor_typing(F: LaxFunctorData, ck: _Checker) -> None:
    A, B = F.source, F.target
    for x in A.objects:
        ck.holds("typing", f"F({x!r})", lambda: B.has_object(F.obj[x]), "object missing")
    for f, (x, y) in A.one_cells.items():
        ck.holds("typing", f"F({f!r})", lambda: B.has_one_cell(F.one[f])
                 and B.one_source(F.one[f]) == F.obj[x] and B.one_target(F.one[f]) == F.obj[y],
                 "1-cell image ill-typed")
    if ck.entries:
        return
    for a, (f, g) in A.two_cells.items():
        ck.holds("typing", f"F({a!r})", lambda: B.has_two_cell(F.two[a])
                 and B.two_source(F.two[a]) == F.one[f] and B.two_target(F.two[a]) == F.one[g],
                 "2-cell image ill-typed")
    for (g, f) in _composable(A):
        ck.holds("typing", f"phi({g!r},{f!r})", lambda: B.has_two_cell(F.comp[(g, f)])
                 and B.two_source(F.comp[(g, f)]) == B.compose1(F.one[g], F.one[f])
                 and B.two_target(F.comp[(g, f)]) == F.one[A.comp1[(g, f)]],
                 "comparison cell ill-typed")
    for x in A.objects:
        ck.holds("typing", f"phi({x!r})", lambda: B.has_two_cell(F.unit[x])
                 and B.two_source(F.unit[x]) == B.identity1(F.obj[x])
                 and B.two_target(F.unit[x]) == F.one[A.id1[x]],
                 "unit cell ill-typed")


def check_functor(F: LaxFunctorData) -> ValidationReport:
    """Every functor axiom instance, evaluated directly on the finite data."""
    A, B = F.source, F.target
    ck = _Checker()
    _functor_typing(F, ck)
    if ck.entries:
        return ck.report()
    for f in A.one_cells:
        ck.equal("functoriality", f"F(1_{f!r})", lambda: F.two[A.id2[f]],
                 lambda: B.identity2(F.one[f]))
    for (b, a), ba in sorted(A.vcomp.items(), key=repr):
        ck.equal("functoriality", f"F({b!r}.{a!r})", lambda: F.two[ba],
                 lambda: B.compose_v(F.two[b], F.two[a]))
    # naturality of phi in both arguments
    for (b, a) in _horizontal_2pairs(A):
        f, f2 = A.two_cells[a]
        g, g2 = A.two_cells[b]
        ck.equal("naturality", f"phi at ({b!r},{a!r})",
                 lambda: B.compose_v(F.comp[(g2, f2)], B.compose_h(F.two[b], F.two[a])),
                 lambda: B.compose_v(F.two[A.hcomp[(b, a)]], F.comp[(g, f)]))
    for (h, g, f) in _triples(A):
        ck.equal("associativity", f"({h!r},{g!r},{f!r})",
                 lambda: B.compose_v(F.comp[(h, A.comp1[(g, f)])], _lw(B, F.one[h], F.comp[(g, f)])),
                 lambda: B.compose_v(F.comp[(A.comp1[(h, g)], f)], _rw(B, F.comp[(h, g)], F.one[f])))
    for f, (x, y) in A.one_cells.items():
        ck.equal("left-unit", repr(f),
                 lambda: B.compose_v(F.comp[(A.id1[y], f)], _rw(B, F.unit[y], F.one[f])),
                 lambda: B.identity2(F.one[f]))
        ck.equal("right-unit", repr(f),
                 lambda: B.compose_v(F.comp[(f, A.id1[x])], _lw(B, F.one[f], F.unit[x])),
                 lambda: B.identity2(F.one[f]))
    cells = [(f"phi({g!r},{f!r})", F.comp[(g, f)]) for (g, f) in _composable(A)]
    cells += [(f"phi({x!r})", F.unit[x]) for x in A.objects]
    for subject, c in cells:
        if F.strength is Strength.STRICT:
            ck.holds("strength", subject, lambda: B.is_identity2(c), "strict comparison is not an identity")
        elif F.strength is Strength.PSEUDO:
            ck.holds("strength", subject, lambda: _is_invertible(B, c), "pseudo comparison is not invertible")
    return ck.report()


def identity_functor(A: Finite2Category) -> LaxFunctorData:
    return LaxFunctorData(
        Strength.STRICT, A, A,
        {x: x for x in A.objects}, {f: f for f in A.one_cells}, {a: a for a in A.two_cells},
        {(g, f): A.id2[gf] for (g, f), gf in A.comp1.items()},
        {x: A.id2[A.id1[x]] for x in A.objects}, name=f"Id_{A.name}")


def constant_functor(A: Finite2Category, B, b) -> LaxFunctorData:
    """The strict functor sending everything to ``b`` and its identities."""
    i1 = B.identity1(b)
    i2 = B.identity2(i1)
    return LaxFunctorData(
        Strength.STRICT, A, B,
        {x: b for x in A.objects}, {f: i1 for f in A.one_cells}, {a: i2 for a in A.two_cells},
        {k: i2 for k in A.comp1}, {x: i2 for x in A.objects}, name=f"const({b!r})")


def compose_functors(G: LaxFunctorData, F: LaxFunctorData) -> LaxFunctorData:
    """``G`` after ``F``; comparison cells paste as ``G(phi_F) . phi_G``."""
    if F.target != G.source:
        raise MiddleFunctorMismatch("functors are not composable")
    A, C = F.source, G.target
    comp = {(g, f): C.compose_v(G.two[F.comp[(g, f)]], G.comp[(F.one[g], F.one[f])])
            for (g, f) in A.comp1}
    unit = {x: C.compose_v(G.two[F.unit[x]], G.unit[F.obj[x]]) for x in A.objects}
    return LaxFunctorData(
        weakest(F.strength, G.strength), A, C,
        {x: G.obj[F.obj[x]] for x in A.objects},
        {f: G.one[F.one[f]] for f in A.one_cells},
        {a: G.two[F.two[a]] for a in A.two_cells},
        comp, unit, name=f"{G.name}{F.name}")


# -- transformations ---------------------------------------------------------

def _parallel(F: LaxFunctorData, G: LaxFunctorData) -> bool:
    return F.source == G.source and F.target == G.target


def check_transformation(eta: TransformationData) -> ValidationReport:
    F, G = eta.source, eta.target
    ck = _Checker()
    if not _parallel(F, G):
        return ValidationReport.of([Violation("typing", "functors", "source and target are not parallel")])
    A, B = F.source, F.target
    e, w = eta.component, eta.witness
    for x in A.objects:
        ck.holds("typing", f"eta({x!r})", lambda: B.has_one_cell(e[x])
                 and B.one_source(e[x]) == F.obj[x] and B.one_target(e[x]) == G.obj[x],
                 "component ill-typed")
    if ck.entries:
        return ck.report()
    for f, (x, y) in A.one_cells.items():
        ck.holds("typing", f"eta({f!r})", lambda: B.has_two_cell(w[f])
                 and B.two_source(w[f]) == B.compose1(G.one[f], e[x])
                 and B.two_target(w[f]) == B.compose1(e[y], F.one[f]),
                 "witness ill-typed")
    if ck.entries:
        return ck.report()
    for a, (f, f2) in A.two_cells.items():
        x, y = A.one_cells[f]
        ck.equal("2-cell-naturality", repr(a),
                 lambda: B.compose_v(w[f2], _rw(B, G.two[a], e[x])),
                 lambda: B.compose_v(_lw(B, e[y], F.two[a]), w[f]))
    for x in A.objects:
        i = A.id1[x]
        ck.equal("unit", repr(x),
                 lambda: B.compose_v(w[i], _rw(B, G.unit[x], e[x])),
                 lambda: _lw(B, e[x], F.unit[x]))
    for (g, f) in _composable(A):
        x, _ = A.one_cells[f]
        _, z = A.one_cells[g]
        ck.equal("composition", f"({g!r},{f!r})",
                 lambda: B.compose_v(w[A.comp1[(g, f)]], _rw(B, G.comp[(g, f)], e[x])),
                 lambda: _vseq(B, _lw(B, G.one[g], w[f]), _rw(B, w[g], F.one[f]),
                               _lw(B, e[z], F.comp[(g, f)])))
    for f in sorted(A.one_cells, key=repr):
        if eta.strength is Strength.STRICT:
            ck.holds("strength", f"eta({f!r})", lambda: B.is_identity2(w[f]), "strict witness is not an identity")
        elif eta.strength is Strength.PSEUDO:
            ck.holds("strength", f"eta({f!r})", lambda: _is_invertible(B, w[f]), "pseudo witness is not invertible")
    return ck.report()


def identity_transformation(F: LaxFunctorData) -> TransformationData:
    B = F.target
    return TransformationData(
        Strength.STRICT, F, F,
        {x: B.identity1(F.obj[x]) for x in F.source.objects},
        {f: B.identity2(F.one[f]) for f in F.source.one_cells}, name=f"1_{F.name}")


def vertical_composite(theta: TransformationData, eta: TransformationData) -> TransformationData:
    """``eta: F => G`` followed by ``theta: G => H``."""
    if eta.target != theta.source:
        raise MiddleFunctorMismatch("transformations do not share a middle functor")
    F = eta.source
    A, B = F.source, F.target
    comps = {x: B.compose1(theta.component[x], eta.component[x]) for x in A.objects}
    wits = {}
    for f, (x, y) in A.one_cells.items():
        wits[f] = B.compose_v(_lw(B, theta.component[y], eta.witness[f]),
                              _rw(B, theta.witness[f], eta.component[x]))
    return TransformationData(weakest(eta.strength, theta.strength), F, theta.target, comps, wits,
                              name=f"{theta.name}.{eta.name}")


def whisker_functor_right(theta: TransformationData, F: LaxFunctorData) -> TransformationData:
    """``theta F``: precompose ``theta: H => K`` with ``F``."""
    if F.target != theta.source.source:
        raise MiddleFunctorMismatch("functor target differs from the transformation's domain")
    A = F.source
    return TransformationData(
        theta.strength, compose_functors(theta.source, F), compose_functors(theta.target, F),
        {x: theta.component[F.obj[x]] for x in A.objects},
        {f: theta.witness[F.one[f]] for f in A.one_cells}, name=f"{theta.name}{F.name}")


def whisker_functor_left(K: LaxFunctorData, eta: TransformationData) -> TransformationData:
    """``K eta``: postcompose ``eta: F => G`` with ``K``; needs invertible
    comparison cells of ``K`` to re-associate the witnesses."""
    F, G = eta.source, eta.target
    if F.target != K.source:
        raise MiddleFunctorMismatch("transformation codomain differs from the functor's domain")
    A, C = F.source, K.target
    comps = {x: K.one[eta.component[x]] for x in A.objects}
    wits = {}
    bad = []
    for f, (x, y) in A.one_cells.items():
        top = K.comp[(G.one[f], eta.component[x])]
        bottom = C.inverse2(K.comp[(eta.component[y], F.one[f])])
        if bottom is None:
            bad.append(Violation("strength", f"phi({eta.component[y]!r},{F.one[f]!r})",
                                 "comparison cell is not invertible"))
            continue
        wits[f] = _vseq(C, top, K.two[eta.witness[f]], bottom)
    if bad:
        raise CompositeNotCoherent(ValidationReport.of(bad))
    return TransformationData(weakest(eta.strength, K.strength), compose_functors(K, F),
                              compose_functors(K, G), comps, wits, name=f"{K.name}{eta.name}")


def compose_transformations(eta: TransformationData, theta: TransformationData,
                            order: Order = Order.LEFT_FIRST, check: bool = True) -> TransformationData:
    """Horizontal composite of ``eta: F => G`` (A to B) and ``theta: H => K``
    (B to C), a transformation ``HF => KG``.

    ``LEFT_FIRST`` pastes ``theta F`` then ``K eta``; ``RIGHT_FIRST`` pastes
    ``H eta`` then ``theta G``.  The result is re-checked and a failing
    check raises :class:`CompositeNotCoherent`.
    """
    if theta.source.source != eta.source.target:
        raise MiddleFunctorMismatch("the second transformation does not start where the first ends")
    H, K = theta.source, theta.target
    F, G = eta.source, eta.target
    if order is Order.LEFT_FIRST:
        out = vertical_composite(whisker_functor_left(K, eta), whisker_functor_right(theta, F))
    else:
        out = vertical_composite(whisker_functor_right(theta, G), whisker_functor_left(H, eta))
    out = TransformationData(weakest(eta.strength, theta.strength), out.source, out.target,
                             out.component, out.witness, name=f"{theta.name}*{eta.name}")
    if check:
        report = check_transformation(out)
        if not report.ok:
            raise CompositeNotCoherent(report)
    return out


# -- modifications -----------------------------------------------------------

def check_modification(m: ModificationData) -> ValidationReport:
    eta, theta = m.source, m.target
    if eta.source != theta.source or eta.target != theta.target:
        return ValidationReport.of([Violation("typing", "transformations", "source and target are not parallel")])
    F, G = eta.source, eta.target
    A, B = F.source, F.target
    ck = _Checker()
    c = m.component
    for x in A.objects:
        ck.holds("typing", f"Xi({x!r})", lambda: B.has_two_cell(c[x])
                 and B.two_source(c[x]) == eta.component[x]
                 and B.two_target(c[x]) == theta.component[x], "component ill-typed")
    if ck.entries:
        return ck.report()
    for f, (x, y) in sorted(A.one_cells.items(), key=repr):
        ck.equal("square", repr(f),
                 lambda: B.compose_v(theta.witness[f], _lw(B, G.one[f], c[x])),
                 lambda: B.compose_v(_rw(B, c[y], F.one[f]), eta.witness[f]))
    return ck.report()


def identity_modification(eta: TransformationData) -> ModificationData:
    B = eta.source.target
    return ModificationData(eta, eta, {x: B.identity2(e) for x, e in eta.component.items()},
                            name=f"1_{eta.name}")


def vertical_modification(second: ModificationData, first: ModificationData) -> ModificationData:
    if first.target != second.source:
        raise MiddleFunctorMismatch("modifications are not composable")
    B = first.source.source.target
    return ModificationData(first.source, second.target,
                            {x: B.compose_v(second.component[x], first.component[x])
                             for x in first.component})


def horizontal_modification(second: ModificationData, first: ModificationData) -> ModificationData:
    """Componentwise ``second_x * first_x`` between vertical composites."""
    B = first.source.source.target
    return ModificationData(vertical_composite(second.source, first.source),
                            vertical_composite(second.target, first.target),
                            {x: B.compose_h(second.component[x], first.component[x])
                             for x in first.component})


def inverse_modification(m: ModificationData) -> ModificationData | None:
    B = m.source.source.target
    comps = {}
    for x, a in m.component.items():
        inv = B.inverse2(a)
        if inv is None:
            return None
        comps[x] = inv
    return ModificationData(m.target, m.source, comps, name=f"{m.name}^-1")


def is_identity_modification(m: ModificationData) -> bool:
    B = m.source.source.target
    return m.source == m.target and all(B.is_identity2(a) for a in m.component.values())


def mediating_modification(eta: TransformationData, theta: TransformationData) -> ModificationData:
    """The invertible modification from the left-first to the right-first
    composite, with components ``theta(eta_x)``."""
    if eta.strength < Strength.PSEUDO or theta.strength < Strength.PSEUDO:
        raise NotPseudo("mediating modification needs pseudo (or strict) transformations")
    left = compose_transformations(eta, theta, Order.LEFT_FIRST)
    right = compose_transformations(eta, theta, Order.RIGHT_FIRST)
    m = ModificationData(left, right, {x: theta.witness[e] for x, e in eta.component.items()},
                         name=f"mu({theta.name},{eta.name})")
    report = check_modification(m)
    if not report.ok:
        raise CompositeNotCoherent(report)
    return m


# -- enumeration and hom 2-categories ----------------------------------------

class _Budget:
    def __init__(self, guard: SizeGuard, what: str):
        self.guard, self.what, self.count = guard, what, 0

    def tick(self, n: int = 1) -> None:
        self.count += n
        self.guard.check_candidates(self.count, self.what)


def _one_cells_between(B, a, b) -> list:
    return B.one_cells_between(a, b)


def _two_cells_between(B, f, g) -> list:
    return B.two_cells_between(f, g)


def enumerate_functors(A: Finite2Category, B: Finite2Category, strength: Strength,
                       guard: SizeGuard | None = None) -> list[LaxFunctorData]:
    """All functors ``A -> B`` of exactly the given strength requirement."""
    guard = guard or default_guard()
    budget = _Budget(guard, "functor enumeration")
    guard.check_candidates(len(B.objects) ** len(A.objects), "functor object maps")
    ones = sorted(A.one_cells, key=repr)
    twos = sorted(A.two_cells, key=repr)
    pairs = _composable(A)
    out = []
    for images in itertools.product(B.objects, repeat=len(A.objects)):
        obj = dict(zip(A.objects, images))
        one_opts = [_one_cells_between(B, obj[A.one_cells[f][0]], obj[A.one_cells[f][1]]) for f in ones]
        for one_img in itertools.product(*one_opts):
            budget.tick()
            one = dict(zip(ones, one_img))
            if strength is Strength.STRICT:
                if any(one[A.id1[x]] != B.id1[obj[x]] for x in A.objects):
                    continue
                if any(B.comp1.get((one[g], one[f])) != one[gf] for (g, f), gf in A.comp1.items()):
                    continue
            two_opts = [_two_cells_between(B, one[A.two_cells[a][0]], one[A.two_cells[a][1]]) for a in twos]
            for two_img in itertools.product(*two_opts):
                budget.tick()
                two = dict(zip(twos, two_img))
                if any(two[A.id2[f]] != B.id2[one[f]] for f in ones):
                    continue
                if any(B.vcomp.get((two[b], two[a])) != two[ba] for (b, a), ba in A.vcomp.items()):
                    continue
                if strength is Strength.STRICT:
                    comp_opts = [[B.id2[one[A.comp1[k]]]] for k in pairs]
                    unit_opts = [[B.id2[one[A.id1[x]]]] for x in A.objects]
                else:
                    comp_opts = [_two_cells_between(B, B.comp1[(one[g], one[f])], one[A.comp1[(g, f)]])
                                 for (g, f) in pairs]
                    unit_opts = [_two_cells_between(B, B.id1[obj[x]], one[A.id1[x]]) for x in A.objects]
                for cells in itertools.product(*(comp_opts + unit_opts)):
                    budget.tick()
                    comp = dict(zip(pairs, cells[:len(pairs)]))
                    unit = dict(zip(A.objects, cells[len(pairs):]))
                    F = LaxFunctorData(strength, A, B, obj, one, two, comp, unit)
                    if check_functor(F).ok:
                        out.append(F)
    return out


def enumerate_transformations(F: LaxFunctorData, G: LaxFunctorData, strength: Strength,
                              guard: SizeGuard | None = None) -> list[TransformationData]:
    guard = guard or default_guard()
    budget = _Budget(guard, "transformation enumeration")
    A, B = F.source, F.target
    objs = list(A.objects)
    ones = sorted(A.one_cells, key=repr)
    out = []
    for comps in itertools.product(*[_one_cells_between(B, F.obj[x], G.obj[x]) for x in objs]):
        comp = dict(zip(objs, comps))
        if strength is Strength.STRICT:
            opts = []
            for f in ones:
                x, y = A.one_cells[f]
                src = B.comp1[(G.one[f], comp[x])]
                opts.append([B.id2[src]] if src == B.comp1[(comp[y], F.one[f])] else [])
        else:
            opts = [_two_cells_between(B, B.comp1[(G.one[f], comp[A.one_cells[f][0]])],
                                       B.comp1[(comp[A.one_cells[f][1]], F.one[f])]) for f in ones]
        for wits in itertools.product(*opts):
            budget.tick()
            eta = TransformationData(strength, F, G, comp, dict(zip(ones, wits)))
            if check_transformation(eta).ok:
                out.append(eta)
    return out


def enumerate_modifications(eta: TransformationData, theta: TransformationData,
                            guard: SizeGuard | None = None) -> list[ModificationData]:
    guard = guard or default_guard()
    budget = _Budget(guard, "modification enumeration")
    A, B = eta.source.source, eta.source.target
    objs = list(A.objects)
    out = []
    opts = [_two_cells_between(B, eta.component[x], theta.component[x]) for x in objs]
    for comps in itertools.product(*opts):
        budget.tick()
        m = ModificationData(eta, theta, dict(zip(objs, comps)))
        if check_modification(m).ok:
            out.append(m)
    return out


@dataclass(frozen=True)
class HomTwoCategory:
    """A tabulated hom 2-category together with the data behind each label."""

    category: Finite2Category
    functors: Mapping
    transformations: Mapping
    modifications: Mapping

    def counts(self) -> tuple[int, int, int]:
        return self.category.counts()


def hom_2category(A: Finite2Category, B: Finite2Category, strength: Strength = Strength.PSEUDO,
                  guard: SizeGuard | None = None) -> HomTwoCategory:
    """Functors ``A -> B``, transformations and modifications of the given
    strength, tabulated as a finite 2-category.  1-cells compose vertically."""
    if strength is Strength.LAX:
        raise ValueError("hom 2-categories are built for strict and pseudo strength only")
    guard = guard or default_guard()
    guard.check_index(len(A.objects))
    functors = enumerate_functors(A, B, strength, guard)
    f_label = {F: f"F{i}" for i, F in enumerate(functors)}
    trans = []
    for F in functors:
        for G in functors:
            trans.extend(enumerate_transformations(F, G, strength, guard))
    t_label = {t: f"t{i}" for i, t in enumerate(trans)}
    mods = []
    for t in trans:
        for u in trans:
            if t.source == u.source and t.target == u.target:
                mods.extend(enumerate_modifications(t, u, guard))
    m_label = {m: f"m{i}" for i, m in enumerate(mods)}

    def lookup(table, key, what):
        try:
            return table[key]
        except KeyError:
            raise CompositeNotCoherent(ValidationReport.of(
                [Violation("closure", what, "composite is not among the enumerated cells")])) from None

    # cells are indexed by label-level keys so composites never rebuild data
    objs, ones = list(A.objects), sorted(A.one_cells, key=repr)
    t_src = {t_label[t]: f_label[t.source] for t in trans}
    t_tgt = {t_label[t]: f_label[t.target] for t in trans}
    t_comp = {t_label[t]: tuple(t.component[x] for x in objs) for t in trans}
    t_wit = {t_label[t]: tuple(t.witness[f] for f in ones) for t in trans}
    t_index = {(t_src[k], t_tgt[k], t_comp[k], t_wit[k]): k for k in t_comp}
    m_src = {m_label[m]: t_label[m.source] for m in mods}
    m_tgt = {m_label[m]: t_label[m.target] for m in mods}
    m_comp = {m_label[m]: tuple(m.component[x] for x in objs) for m in mods}
    m_index = {(m_src[k], m_tgt[k], m_comp[k]): k for k in m_comp}

    one_cells = {k: (t_src[k], t_tgt[k]) for k in t_comp}
    two_cells = {k: (m_src[k], m_tgt[k]) for k in m_comp}
    id1 = {}
    for F in functors:
        i = replace(identity_transformation(F), strength=strength)
        key = (f_label[F], f_label[F], tuple(i.component[x] for x in objs), tuple(i.witness[f] for f in ones))
        id1[f_label[F]] = lookup(t_index, key, "identity 1-cell")
    id2 = {k: lookup(m_index, (k, k, tuple(B.identity2(e) for e in t_comp[k])), "identity 2-cell")
           for k in t_comp}
    by_source = {}
    for k in t_comp:
        by_source.setdefault(t_src[k], []).append(k)
    comp1 = {}
    for t in t_comp:
        for u in by_source.get(t_tgt[t], []):
            comps = tuple(B.compose1(cu, ct) for cu, ct in zip(t_comp[u], t_comp[t]))
            wits = []
            for i, f in enumerate(ones):
                x, y = A.one_cells[f]
                ix, iy = objs.index(x), objs.index(y)
                wits.append(B.compose_v(_lw(B, t_comp[u][iy], t_wit[t][i]), _rw(B, t_wit[u][i], t_comp[t][ix])))
            comp1[(u, t)] = lookup(t_index, (t_src[t], t_tgt[u], comps, tuple(wits)), "1-cell composite")
    m_by_source = {}
    m_by_source_functor = {}
    for k in m_comp:
        m_by_source.setdefault(m_src[k], []).append(k)
        m_by_source_functor.setdefault(t_src[m_src[k]], []).append(k)
    vcomp, hcomp = {}, {}
    for m in m_comp:
        for n in m_by_source.get(m_tgt[m], []):
            comps = tuple(B.compose_v(b, a) for b, a in zip(m_comp[n], m_comp[m]))
            vcomp[(n, m)] = lookup(m_index, (m_src[m], m_tgt[n], comps), "vertical composite")
        for n in m_by_source_functor.get(t_tgt[m_src[m]], []):
            comps = tuple(B.compose_h(b, a) for b, a in zip(m_comp[n], m_comp[m]))
            key = (comp1[(m_src[n], m_src[m])], comp1[(m_tgt[n], m_tgt[m])], comps)
            hcomp[(n, m)] = lookup(m_index, key, "horizontal composite")
    cat = Finite2Category(tuple(f_label[F] for F in functors), one_cells, two_cells, id1, id2,
                          comp1, vcomp, hcomp, name=f"[{A.name},{B.name}]")
    return HomTwoCategory(cat, {v: k for k, v in f_label.items()}, {v: k for k, v in t_label.items()},
                          {v: k for k, v in m_label.items()})


def check_hom_2category(h: HomTwoCategory) -> ValidationReport:
    return check_2category(h.category)
