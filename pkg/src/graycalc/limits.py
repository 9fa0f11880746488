"""Cones and lax, pseudo and strict limits of 2-functors into finite
categories, with brute-force certification of the universal property.

An object of the lax limit of ``F`` is a family ``(x_a, xi_f)``: an object
``x_a`` of each ``F(a)`` and, for every 1-cell ``f: a -> b`` of the indexing
2-category, a morphism ``xi_f: F(f)(x_a) -> x_b`` such that

* ``xi_{g.f} . phi(g, f)_{x_a} = xi_g . F(g)(xi_f)``,
* ``xi_{id_a} . (phi_a)_{x_a} = id``,
* ``xi_f = xi_{f'} . F(alpha)_{x_a}`` for every 2-cell ``alpha: f => f'``.

Pseudo limits ask every ``xi_f`` to be invertible, strict limits ask for
identities.  Morphisms are families ``h_a`` commuting with the ``xi``.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import GrayError, ValidationReport, Violation
from .guard import SizeGuard, default_guard
from .twocat import (
    CAT,
    Finite2Category,
    FiniteCategory,
    FiniteFunctor,
    FrozenMap,
    NatTrans,
    compose_functors,
    enumerate_functors,
    enumerate_nats,
    full_subcategory,
    identity_functor,
    identity_nat,
)
from .twofun import (
    LaxFunctorData,
    ModificationData,
    Strength,
    TransformationData,
    check_functor,
    check_modification,
    check_transformation,
    constant_functor,
)


@dataclass(frozen=True)
class Diagram2Functor:
    """A functor from a finite 2-category into finite categories."""

    indexing: Finite2Category
    value: LaxFunctorData
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.value.source != self.indexing:
            raise ValueError("functor source must be the indexing 2-category")

    def check(self) -> ValidationReport:
        return check_functor(self.value)

    def at(self, a) -> FiniteCategory:
        return self.value.obj[a]


def strict_diagram(indexing: Finite2Category, obj: Mapping, one: Mapping | None = None,
                   two: Mapping | None = None, name: str = "") -> Diagram2Functor:
    """A strict diagram from categories, functors on the non-identity
    1-cells, and natural transformations on the non-identity 2-cells.
    Composite 1-cells are sent to composite functors."""
    A = indexing
    one = dict(one or {})
    for x in A.objects:
        one.setdefault(A.id1[x], identity_functor(obj[x]))
    for (g, f), gf in sorted(A.comp1.items(), key=repr):
        if gf not in one and g in one and f in one:
            one[gf] = compose_functors(one[g], one[f])
    two = dict(two or {})
    for f, i in A.id2.items():
        two.setdefault(i, identity_nat(one[f]))
    comp = {(g, f): identity_nat(one[gf]) for (g, f), gf in A.comp1.items()}
    unit = {x: identity_nat(one[A.id1[x]]) for x in A.objects}
    F = LaxFunctorData(Strength.STRICT, A, CAT, obj, one, two, comp, unit, name=name)
    return Diagram2Functor(A, F, name)


@dataclass(frozen=True)
class Cone:
    strength: Strength
    apex: FiniteCategory
    legs: Mapping
    cells: Mapping

    def __post_init__(self):
        for name in ("legs", "cells"):
            if not isinstance(getattr(self, name), FrozenMap):
                object.__setattr__(self, name, FrozenMap(getattr(self, name)))

    def as_transformation(self, F: Diagram2Functor) -> TransformationData:
        const = constant_functor(F.indexing, CAT, self.apex)
        return TransformationData(self.strength, const, F.value, self.legs, self.cells)

    def precompose(self, H: FiniteFunctor) -> "Cone":
        """The cone ``self . H`` with apex ``H.source``."""
        legs = {a: compose_functors(p, H) for a, p in self.legs.items()}
        cells = {}
        for f, g in self.cells.items():
            src = compose_functors(g.source, H)
            tgt = compose_functors(g.target, H)
            cells[f] = NatTrans(src, tgt, {x: g[H.obj[x]] for x in H.source.objects})
        return Cone(self.strength, H.source, legs, cells)


def check_cone(c: Cone, F: Diagram2Functor) -> ValidationReport:
    entries = []
    for a in F.indexing.objects:
        leg = c.legs.get(a)
        if leg is None or leg.source != c.apex or leg.target != F.at(a):
            entries.append(Violation("typing", f"p({a!r})", "leg ill-typed"))
    if entries:
        return ValidationReport.of(entries)
    return check_transformation(c.as_transformation(F))


@dataclass(frozen=True)
class ApexReport:
    apex: str
    cones: int
    functors: int
    one_dimensional: bool
    two_dimensional: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.one_dimensional and self.two_dimensional


@dataclass(frozen=True)
class UniversalityReport:
    entries: tuple[ApexReport, ...] = ()

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def one_dimensional(self) -> bool:
        return all(e.one_dimensional for e in self.entries)

    @property
    def two_dimensional(self) -> bool:
        return all(e.two_dimensional for e in self.entries)

    def summary(self) -> str:
        return "; ".join(
            f"{e.apex}: cones={e.cones} functors={e.functors} "
            f"1d={'ok' if e.one_dimensional else 'FAIL'} 2d={'ok' if e.two_dimensional else 'FAIL'}"
            for e in self.entries)


@dataclass(frozen=True)
class LimitResult:
    strength: Strength
    limit: FiniteCategory
    cone: Cone
    certification: UniversalityReport | None = None


# -- the construction --------------------------------------------------------

def _check_sizes(F: Diagram2Functor, guard: SizeGuard) -> None:
    guard.check_index(len(F.indexing.objects))
    for a in F.indexing.objects:
        guard.check_value(len(F.at(a).objects), f"value at {a!r}")


def _families(F: Diagram2Functor, strength: Strength, guard: SizeGuard) -> list[tuple]:
    A = F.indexing
    V = F.value
    objs = list(A.objects)
    ones = sorted(A.one_cells, key=repr)
    pos = {f: i for i, f in enumerate(ones)}
    # an equation becomes checkable once every xi it mentions is assigned
    checks = {i: [] for i in range(len(ones))}
    for (g, f), gf in A.comp1.items():
        checks[max(pos[g], pos[f], pos[gf])].append(("comp", g, f, gf))
    for x in objs:
        checks[pos[A.id1[x]]].append(("unit", x))
    for al, (f, f2) in A.two_cells.items():
        checks[max(pos[f], pos[f2])].append(("two", al, f, f2))

    def holds(check, xs, xi):
        kind = check[0]
        if kind == "comp":
            _, g, f, gf = check
            a = A.one_cells[f][0]
            c = F.at(A.one_cells[g][1])
            phi = V.comp[(g, f)][xs[a]]
            return c.compose(xi[gf], phi) == c.compose(xi[g], V.one[g].mor[xi[f]])
        if kind == "unit":
            x = check[1]
            c = F.at(x)
            return c.compose(xi[A.id1[x]], V.unit[x][xs[x]]) == c.id(xs[x])
        _, al, f, f2 = check
        a, b = A.one_cells[f]
        return xi[f] == F.at(b).compose(xi[f2], V.two[al][xs[a]])

    out = []
    count = 0
    for images in itertools.product(*[F.at(a).objects for a in objs]):
        xs = dict(zip(objs, images))
        xi = {}

        def search(i):
            nonlocal count
            count += 1
            guard.check_candidates(count, "limit family search")
            if i == len(ones):
                out.append((images, tuple(xi[f] for f in ones)))
                return
            f = ones[i]
            a, b = A.one_cells[f]
            cat = F.at(b)
            start = V.one[f].obj[xs[a]]
            if strength is Strength.STRICT:
                options = [cat.id(start)] if start == xs[b] else []
            else:
                options = cat.hom(start, xs[b])
                if strength is Strength.PSEUDO:
                    options = [m for m in options if cat.is_iso(m)]
            for m in options:
                xi[f] = m
                if all(holds(ck, xs, xi) for ck in checks[i]):
                    search(i + 1)
            xi.pop(f, None)

        search(0)
    return out


def _limit(F: Diagram2Functor, strength: Strength, guard: SizeGuard | None) -> LimitResult:
    guard = guard or default_guard()
    _check_sizes(F, guard)
    A, V = F.indexing, F.value
    objs = list(A.objects)
    ones = sorted(A.one_cells, key=repr)
    families = _families(F, strength, guard)
    morphisms = {}
    count = 0
    for s in families:
        for t in families:
            opts = [F.at(a).hom(s[0][i], t[0][i]) for i, a in enumerate(objs)]
            for hs in itertools.product(*opts):
                count += 1
                guard.check_candidates(count, "limit morphism search")
                ok = True
                for j, f in enumerate(ones):
                    a, b = A.one_cells[f]
                    ia, ib = objs.index(a), objs.index(b)
                    cat = F.at(b)
                    if cat.compose(t[1][j], V.one[f].mor[hs[ia]]) != cat.compose(hs[ib], s[1][j]):
                        ok = False
                        break
                if ok:
                    morphisms[(s, t, hs)] = (s, t)
    identity = {s: (s, s, tuple(F.at(a).id(s[0][i]) for i, a in enumerate(objs))) for s in families}
    table = {}
    by_source = {}
    for m, (s, t) in morphisms.items():
        by_source.setdefault(s, []).append(m)
    for f, (s, t) in morphisms.items():
        for g in by_source.get(t, []):
            u = morphisms[g][1]
            hs = tuple(F.at(a).compose(g[2][i], f[2][i]) for i, a in enumerate(objs))
            table[(g, f)] = (s, u, hs)
    L = FiniteCategory(tuple(families), morphisms, identity, table,
                       name=f"{strength}lim({F.name or 'F'})")
    return LimitResult(strength, L, universal_cone(L, F, strength))


def universal_cone(L: FiniteCategory, F: Diagram2Functor, strength: Strength) -> Cone:
    """Projections out of a limit category, with cone cells read off the xi."""
    A = F.indexing
    objs = list(A.objects)
    ones = sorted(A.one_cells, key=repr)
    legs = {}
    for i, a in enumerate(objs):
        legs[a] = FiniteFunctor(L, F.at(a), {s: s[0][i] for s in L.objects},
                                {m: m[2][i] for m in L.morphisms}, name=f"p{a}")
    cells = {}
    for j, f in enumerate(ones):
        a, b = A.one_cells[f]
        src = compose_functors(F.value.one[f], legs[a])
        cells[f] = NatTrans(src, legs[b], {s: s[1][j] for s in L.objects})
    return Cone(strength, L, legs, cells)


def lax_limit(F: Diagram2Functor, guard: SizeGuard | None = None) -> LimitResult:
    return _limit(F, Strength.LAX, guard)


def pseudo_limit(F: Diagram2Functor, guard: SizeGuard | None = None) -> LimitResult:
    return _limit(F, Strength.PSEUDO, guard)


def strict_limit(F: Diagram2Functor, guard: SizeGuard | None = None) -> LimitResult:
    return _limit(F, Strength.STRICT, guard)


def limit(F: Diagram2Functor, strength: Strength, guard: SizeGuard | None = None) -> LimitResult:
    return _limit(F, strength, guard)


def delete_object(L: LimitResult, obj) -> LimitResult:
    """Shrink the limit category by one object, restricting the cone."""
    keep = [x for x in L.limit.objects if x != obj]
    sub = full_subcategory(L.limit, keep)
    legs = {a: FiniteFunctor(sub, p.target, {x: p.obj[x] for x in keep},
                             {m: p.mor[m] for m in sub.morphisms}, name=p.name)
            for a, p in L.cone.legs.items()}
    cells = {}
    for f, g in L.cone.cells.items():
        src = FiniteFunctor(sub, g.source.target, {x: g.source.obj[x] for x in keep},
                            {m: g.source.mor[m] for m in sub.morphisms})
        tgt = FiniteFunctor(sub, g.target.target, {x: g.target.obj[x] for x in keep},
                            {m: g.target.mor[m] for m in sub.morphisms})
        cells[f] = NatTrans(src, tgt, {x: g[x] for x in keep})
    return LimitResult(L.strength, sub, Cone(L.strength, sub, legs, cells))


# -- universality ------------------------------------------------------------

def enumerate_cones(F: Diagram2Functor, apex: FiniteCategory, strength: Strength,
                    guard: SizeGuard | None = None) -> list[Cone]:
    guard = guard or default_guard()
    A = F.indexing
    objs = list(A.objects)
    ones = sorted(A.one_cells, key=repr)
    leg_opts = [enumerate_functors(apex, F.at(a), guard) for a in objs]
    out = []
    count = 0
    for legs in itertools.product(*leg_opts):
        leg = dict(zip(objs, legs))
        cell_opts = []
        for f in ones:
            a, b = A.one_cells[f]
            src = compose_functors(F.value.one[f], leg[a])
            cell_opts.append(enumerate_nats(src, leg[b], guard))
        for cells in itertools.product(*cell_opts):
            count += 1
            guard.check_candidates(count, "cone enumeration")
            cone = Cone(strength, apex, leg, dict(zip(ones, cells)))
            if check_transformation(cone.as_transformation(F)).ok:
                out.append(cone)
    return out


def _cone_key(c: Cone):
    return (tuple(sorted(((a, p.obj, p.mor) for a, p in c.legs.items()), key=repr)),
            tuple(sorted(((f, g.components) for f, g in c.cells.items()), key=repr)))


def enumerate_cone_modifications(F: Diagram2Functor, c: Cone, d: Cone,
                                 guard: SizeGuard | None = None) -> list[ModificationData]:
    guard = guard or default_guard()
    objs = list(F.indexing.objects)
    opts = [enumerate_nats(c.legs[a], d.legs[a], guard) for a in objs]
    eta, theta = c.as_transformation(F), d.as_transformation(F)
    out = []
    for comps in itertools.product(*opts):
        m = ModificationData(eta, theta, dict(zip(objs, comps)))
        if check_modification(m).ok:
            out.append(m)
    return out


def _nat_to_modification(L: LimitResult, F: Diagram2Functor, tau: NatTrans) -> tuple:
    """The component families ``p_a tau`` induced by ``tau: H => H'``."""
    return tuple(
        tuple(sorted(((x, p.mor[tau[x]]) for x in tau.source.source.objects), key=repr))
        for a, p in sorted(L.cone.legs.items(), key=repr))


def _mod_key(m: ModificationData) -> tuple:
    return tuple(tuple(sorted(m.component[a].components.items(), key=repr))
                 for a in sorted(m.component, key=repr))


def certify_universal(L: LimitResult, F: Diagram2Functor, apexes,
                      guard: SizeGuard | None = None) -> UniversalityReport:
    """For each apex, compare cones against functors into the limit (1-dim)
    and cone modifications against natural transformations (2-dim)."""
    guard = guard or default_guard()
    entries = []
    for apex in apexes:
        name = apex.name or repr(apex)
        try:
            cones = enumerate_cones(F, apex, L.strength, guard)
            functors = enumerate_functors(apex, L.limit, guard)
        except GrayError as exc:
            entries.append(ApexReport(name, 0, 0, False, False, str(exc)))
            continue
        cone_keys = {_cone_key(c): c for c in cones}
        induced = [L.cone.precompose(H) for H in functors]
        induced_keys = [_cone_key(c) for c in induced]
        problems = []
        if len(set(induced_keys)) != len(induced_keys):
            problems.append("not injective on functors")
        missing = set(cone_keys) - set(induced_keys)
        if missing:
            problems.append(f"{len(missing)} cones not induced (not surjective)")
        if set(induced_keys) - set(cone_keys):
            problems.append("induced cone failed the cone check")
        one_dim = not problems
        # full faithfulness is certified on its own, whatever the 1-dim outcome
        two_dim = True
        for H1, c1 in zip(functors, induced):
            for H2, c2 in zip(functors, induced):
                nats = enumerate_nats(H1, H2, guard)
                mods = enumerate_cone_modifications(F, c1, c2, guard)
                image = [_nat_to_modification(L, F, t) for t in nats]
                if len(set(image)) != len(image) or set(image) != {_mod_key(m) for m in mods}:
                    two_dim = False
            if not two_dim:
                problems.append("2-cells are not in bijection")
                break
        entries.append(ApexReport(name, len(cones), len(functors), one_dim, two_dim, "; ".join(problems)))
    return UniversalityReport(tuple(entries))


# -- oracle constructions ----------------------------------------------------

def comma_category(u: FiniteFunctor, v: FiniteFunctor) -> FiniteCategory:
    """``(u | v)`` for ``u: C -> E`` and ``v: D -> E``: objects ``(c, d, m)``
    with ``m: u(c) -> v(d)``, morphisms pairs of morphisms making the square
    commute."""
    C, D, E = u.source, v.source, u.target
    objects = [(c, d, m) for c in C.objects for d in D.objects for m in E.hom(u.obj[c], v.obj[d])]
    morphisms = {}
    for s in objects:
        for t in objects:
            for h in C.hom(s[0], t[0]):
                for k in D.hom(s[1], t[1]):
                    if E.compose(v.mor[k], s[2]) == E.compose(t[2], u.mor[h]):
                        morphisms[(s, t, h, k)] = (s, t)
    identity = {s: (s, s, C.id(s[0]), D.id(s[1])) for s in objects}
    table = {}
    for f, (s, t) in morphisms.items():
        for g, (t2, w) in morphisms.items():
            if t2 == t:
                table[(g, f)] = (s, w, C.compose(g[2], f[2]), D.compose(g[3], f[3]))
    return FiniteCategory(tuple(objects), morphisms, identity, table, name="comma")


def inclusion(small: FiniteCategory, big: FiniteCategory) -> FiniteFunctor | None:
    """The identity-on-labels functor when ``small`` sits inside ``big``."""
    if not set(small.objects) <= set(big.objects) or not set(small.morphisms) <= set(big.morphisms):
        return None
    return FiniteFunctor(small, big, {x: x for x in small.objects}, {m: m for m in small.morphisms})
