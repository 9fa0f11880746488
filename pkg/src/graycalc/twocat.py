"""Finite categories, finite strict 2-categories, and the 2-category of
finite categories.

:class:`Finite2Category` and :class:`CatTwo` expose the same small set of
operations (``compose1``, ``compose_v``, ``compose_h``, ``identity1``, ...),
so the coherence checkers in :mod:`graycalc.twofun` work against either.
Cell labels may be any hashable value; composition tables are explicit.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import NotACategory, ValidationReport, Violation
from .guard import SizeGuard, default_guard


class FrozenMap(Mapping):
    """An immutable, hashable mapping."""

    __slots__ = ("_data", "_hash")

    def __init__(self, data=()):
        self._data = dict(data)
        self._hash = None

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, FrozenMap):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == dict(other)
        return NotImplemented

    def __repr__(self):
        return f"FrozenMap({self._data!r})"

    def updated(self, key, value) -> "FrozenMap":
        data = dict(self._data)
        data[key] = value
        return FrozenMap(data)


def _sort_key(x) -> str:
    return repr(x)


def _freeze(obj, name):
    value = getattr(obj, name)
    if not isinstance(value, FrozenMap):
        object.__setattr__(obj, name, FrozenMap(value))


# -- finite categories -------------------------------------------------------

@dataclass(frozen=True)
class FiniteCategory:
    """Objects, named morphisms with endpoints, identities and a full
    composition table ``(g, f) -> g . f`` for every composable pair."""

    objects: tuple
    morphisms: Mapping
    identity: Mapping
    composition: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        for attr in ("morphisms", "identity", "composition"):
            _freeze(self, attr)

    @classmethod
    def build(cls, objects, arrows: Mapping | None = None,
              compose: Mapping | None = None, name: str = "") -> "FiniteCategory":
        """Add identities ``id_<x>`` and all unit-law composites."""
        objects = tuple(objects)
        identity = {x: f"id_{x}" for x in objects}
        morphisms = {identity[x]: (x, x) for x in objects}
        morphisms.update(arrows or {})
        table = {}
        for f, (a, b) in morphisms.items():
            table[(f, identity[a])] = f
            table[(identity[b], f)] = f
        table.update(compose or {})
        return cls(objects, morphisms, identity, table, name)

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def id(self, x):
        return self.identity[x]

    def compose(self, g, f):
        """``g`` after ``f``."""
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise NotACategory(f"{g!r} . {f!r} is not defined") from None

    @cached_property
    def _homs(self) -> dict:
        homs = {(a, b): [] for a in self.objects for b in self.objects}
        for f, ends in self.morphisms.items():
            homs.setdefault(ends, []).append(f)
        return homs

    def hom(self, a, b) -> list:
        return self._homs.get((a, b), [])

    def inverse(self, f):
        a, b = self.morphisms[f]
        for g in self.hom(b, a):
            if self.composition.get((g, f)) == self.identity[a] \
                    and self.composition.get((f, g)) == self.identity[b]:
                return g
        return None

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def __repr__(self) -> str:
        label = self.name or "FiniteCategory"
        return f"<{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"


def check_category(c: FiniteCategory) -> ValidationReport:
    entries = []
    objs = set(c.objects)
    for x in c.objects:
        i = c.identity.get(x)
        if i is None or c.morphisms.get(i) != (x, x):
            entries.append(Violation("identity", repr(x), "identity missing or ill-typed"))
    for f, (a, b) in c.morphisms.items():
        if a not in objs or b not in objs:
            entries.append(Violation("typing", repr(f), "endpoint is not an object"))
    if entries:
        return ValidationReport.of(entries)
    for (g, f), h in c.composition.items():
        if f not in c.morphisms or g not in c.morphisms or c.tgt(f) != c.src(g):
            entries.append(Violation("closure", repr((g, f)), "composite of a non-composable pair"))
        elif c.morphisms.get(h) != (c.src(f), c.tgt(g)):
            entries.append(Violation("typing", repr((g, f)), f"composite {h!r} is ill-typed"))
    if entries:
        return ValidationReport.of(entries)
    for f, (a, b) in c.morphisms.items():
        for g in c.hom(b, b) + [h for x in c.objects for h in c.hom(b, x) if x != b]:
            if (g, f) not in c.composition:
                entries.append(Violation("closure", repr((g, f)), "composite missing"))
    if entries:
        return ValidationReport.of(entries)
    for f, (a, b) in c.morphisms.items():
        if c.compose(f, c.id(a)) != f or c.compose(c.id(b), f) != f:
            entries.append(Violation("unit", repr(f)))
    for f, (a, b) in c.morphisms.items():
        for x in c.objects:
            for g in c.hom(b, x):
                for y in c.objects:
                    for h in c.hom(x, y):
                        if c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f):
                            entries.append(Violation("associativity", repr((h, g, f))))
    return ValidationReport.of(entries)


def terminal_category() -> FiniteCategory:
    return FiniteCategory.build(["*"], name="1")


def empty_category() -> FiniteCategory:
    return FiniteCategory.build([], name="0")


def discrete_category(objects, name: str = "") -> FiniteCategory:
    return FiniteCategory.build(objects, name=name)


def arrow_category() -> FiniteCategory:
    return FiniteCategory.build([0, 1], {"a": (0, 1)}, name="2")


def product_category(c: FiniteCategory, d: FiniteCategory) -> FiniteCategory:
    objects = [(x, y) for x in c.objects for y in d.objects]
    morphisms = {(f, g): ((c.src(f), d.src(g)), (c.tgt(f), d.tgt(g)))
                 for f in c.morphisms for g in d.morphisms}
    identity = {(x, y): (c.id(x), d.id(y)) for x, y in objects}
    table = {}
    for (f1, g1) in morphisms:
        for (f2, g2) in morphisms:
            if (f2, f1) in c.composition and (g2, g1) in d.composition:
                table[((f2, g2), (f1, g1))] = (c.compose(f2, f1), d.compose(g2, g1))
    return FiniteCategory(tuple(objects), morphisms, identity, table,
                          name=f"{c.name or 'C'}x{d.name or 'D'}")


def full_subcategory(c: FiniteCategory, keep: Iterable) -> FiniteCategory:
    keep = [x for x in c.objects if x in set(keep)]
    ks = set(keep)
    morphisms = {f: e for f, e in c.morphisms.items() if e[0] in ks and e[1] in ks}
    table = {k: v for k, v in c.composition.items() if k[0] in morphisms and k[1] in morphisms}
    return FiniteCategory(tuple(keep), morphisms, {x: c.id(x) for x in keep}, table, c.name)


# -- functors and natural transformations between finite categories ---------

@dataclass(frozen=True)
class FiniteFunctor:
    source: FiniteCategory
    target: FiniteCategory
    obj: Mapping
    mor: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        _freeze(self, "obj")
        _freeze(self, "mor")

    def __repr__(self) -> str:
        return f"<functor {self.name or '?'}: {self.source.name or '?'} -> {self.target.name or '?'}>"


def check_finite_functor(F: FiniteFunctor) -> ValidationReport:
    c, d = F.source, F.target
    entries = []
    for x in c.objects:
        if F.obj.get(x) not in set(d.objects):
            entries.append(Violation("typing", repr(x), "object not mapped into the target"))
    for f, (a, b) in c.morphisms.items():
        g = F.mor.get(f)
        if g not in d.morphisms:
            entries.append(Violation("typing", repr(f), "morphism not mapped"))
        elif d.morphisms[g] != (F.obj.get(a), F.obj.get(b)):
            entries.append(Violation("typing", repr(f), "image has wrong endpoints"))
    if entries:
        return ValidationReport.of(entries)
    for x in c.objects:
        if F.mor[c.id(x)] != d.id(F.obj[x]):
            entries.append(Violation("identity", repr(x)))
    for (g, f), h in c.composition.items():
        if d.compose(F.mor[g], F.mor[f]) != F.mor[h]:
            entries.append(Violation("composition", repr((g, f))))
    return ValidationReport.of(entries)


def identity_functor(c: FiniteCategory) -> FiniteFunctor:
    return FiniteFunctor(c, c, {x: x for x in c.objects}, {f: f for f in c.morphisms},
                         name=f"id_{c.name}")


def compose_functors(G: FiniteFunctor, F: FiniteFunctor) -> FiniteFunctor:
    """``G`` after ``F``."""
    if F.target != G.source:
        raise NotACategory("functors are not composable")
    return FiniteFunctor(F.source, G.target,
                         {x: G.obj[F.obj[x]] for x in F.source.objects},
                         {f: G.mor[F.mor[f]] for f in F.source.morphisms},
                         name=f"{G.name}.{F.name}")


def constant_functor(c: FiniteCategory, d: FiniteCategory, x) -> FiniteFunctor:
    return FiniteFunctor(c, d, {y: x for y in c.objects}, {f: d.id(x) for f in c.morphisms},
                         name=f"const_{x}")


@dataclass(frozen=True)
class NatTrans:
    source: FiniteFunctor
    target: FiniteFunctor
    components: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        _freeze(self, "components")

    def __getitem__(self, x):
        return self.components[x]

    def __repr__(self) -> str:
        return f"<nat {self.name or '?'}: {self.source.name or '?'} => {self.target.name or '?'}>"


def check_nat(alpha: NatTrans) -> ValidationReport:
    F, G = alpha.source, alpha.target
    if F.source != G.source or F.target != G.target:
        return ValidationReport.of([Violation("typing", "functors", "parallel functors required")])
    d = F.target
    entries = []
    for x in F.source.objects:
        comp = alpha.components.get(x)
        if comp not in d.morphisms or d.morphisms[comp] != (F.obj[x], G.obj[x]):
            entries.append(Violation("typing", repr(x), "component ill-typed"))
    if entries:
        return ValidationReport.of(entries)
    for f, (a, b) in F.source.morphisms.items():
        if d.compose(G.mor[f], alpha[a]) != d.compose(alpha[b], F.mor[f]):
            entries.append(Violation("naturality", repr(f)))
    return ValidationReport.of(entries)


def identity_nat(F: FiniteFunctor) -> NatTrans:
    return NatTrans(F, F, {x: F.target.id(F.obj[x]) for x in F.source.objects}, name=f"1_{F.name}")


def vcomp_nat(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """``beta`` after ``alpha``."""
    if alpha.target != beta.source:
        raise NotACategory("natural transformations are not vertically composable")
    d = alpha.source.target
    return NatTrans(alpha.source, beta.target,
                    {x: d.compose(beta[x], alpha[x]) for x in alpha.source.source.objects})


def hcomp_nat(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """``beta * alpha`` for ``alpha: F => F'`` and ``beta: G => G'`` with ``G`` after ``F``."""
    F, F2, G, G2 = alpha.source, alpha.target, beta.source, beta.target
    if F.target != G.source:
        raise NotACategory("natural transformations are not horizontally composable")
    e = G.target
    return NatTrans(compose_functors(G, F), compose_functors(G2, F2),
                    {x: e.compose(beta[F2.obj[x]], G.mor[alpha[x]]) for x in F.source.objects})


def inverse_nat(alpha: NatTrans) -> NatTrans | None:
    d = alpha.source.target
    comps = {}
    for x, f in alpha.components.items():
        g = d.inverse(f)
        if g is None:
            return None
        comps[x] = g
    return NatTrans(alpha.target, alpha.source, comps)


# -- enumeration and isomorphism search --------------------------------------

def _composition_constraints(c: FiniteCategory, order: list) -> dict:
    """For each position in ``order``, the composition triples that become
    checkable once that morphism is assigned."""
    pos = {f: i for i, f in enumerate(order)}
    checks = {i: [] for i in range(len(order))}
    for (g, f), h in c.composition.items():
        last = max(pos[g], pos[f], pos[h])
        checks[last].append((g, f, h))
    return checks


def enumerate_functors(a: FiniteCategory, b: FiniteCategory,
                       guard: SizeGuard | None = None) -> list[FiniteFunctor]:
    """Every functor ``a -> b``, by backtracking search."""
    guard = guard or default_guard()
    guard.check_candidates(len(b.objects) ** len(a.objects), "object assignments")
    order = sorted(a.morphisms, key=_sort_key)
    checks = _composition_constraints(a, order)
    out = []
    visited = 0
    for images in itertools.product(b.objects, repeat=len(a.objects)):
        obj = dict(zip(a.objects, images))
        mor = {}

        def search(i):
            nonlocal visited
            visited += 1
            guard.check_candidates(visited, "functor search")
            if i == len(order):
                out.append(FiniteFunctor(a, b, dict(obj), dict(mor)))
                return
            f = order[i]
            x, y = a.morphisms[f]
            if f == a.id(x):
                options = [b.id(obj[x])]
            else:
                options = b.hom(obj[x], obj[y])
            for g in options:
                mor[f] = g
                if all(b.composition.get((mor[p], mor[q])) == mor[r] for p, q, r in checks[i]):
                    search(i + 1)
            mor.pop(f, None)

        search(0)
    return out


def enumerate_nats(F: FiniteFunctor, G: FiniteFunctor,
                   guard: SizeGuard | None = None) -> list[NatTrans]:
    guard = guard or default_guard()
    d = F.target
    objs = list(F.source.objects)
    options = [d.hom(F.obj[x], G.obj[x]) for x in objs]
    total = 1
    for o in options:
        total *= max(len(o), 1)
    guard.check_candidates(total, "natural transformation candidates")
    out = []
    for comps in itertools.product(*options):
        alpha = NatTrans(F, G, dict(zip(objs, comps)))
        if all(d.compose(G.mor[f], alpha[s]) == d.compose(alpha[t], F.mor[f])
               for f, (s, t) in F.source.morphisms.items()):
            out.append(alpha)
    return out


def find_isomorphism(c: FiniteCategory, d: FiniteCategory):
    """An isomorphism ``c -> d`` as ``(object map, morphism map)``, or None."""
    if len(c.objects) != len(d.objects) or len(c.morphisms) != len(d.morphisms):
        return None

    def profile(cat, x):
        return (len(cat.hom(x, x)),
                sorted(len(cat.hom(x, y)) for y in cat.objects),
                sorted(len(cat.hom(y, x)) for y in cat.objects))

    c_objs = sorted(c.objects, key=_sort_key)
    candidates = {x: [y for y in d.objects if profile(d, y) == profile(c, x)] for x in c_objs}
    order = sorted(c.morphisms, key=lambda f: (_sort_key(c.src(f)), _sort_key(c.tgt(f)), _sort_key(f)))
    checks = _composition_constraints(c, order)

    def assign_objects(i, obj, used):
        if i == len(c_objs):
            for x in c_objs:
                for y in c_objs:
                    if len(c.hom(x, y)) != len(d.hom(obj[x], obj[y])):
                        return None
            return assign_morphisms(0, obj, {}, set())
        x = c_objs[i]
        for y in candidates[x]:
            if y in used:
                continue
            if any(len(c.hom(x, z)) != len(d.hom(y, obj[z])) or len(c.hom(z, x)) != len(d.hom(obj[z], y))
                   for z in c_objs[:i]):
                continue
            obj[x] = y
            used.add(y)
            found = assign_objects(i + 1, obj, used)
            if found:
                return found
            used.discard(y)
            del obj[x]
        return None

    def assign_morphisms(i, obj, mor, used):
        if i == len(order):
            return dict(obj), dict(mor)
        f = order[i]
        x, y = c.morphisms[f]
        options = [d.id(obj[x])] if f == c.id(x) else d.hom(obj[x], obj[y])
        for g in options:
            if g in used:
                continue
            mor[f] = g
            if all(d.composition.get((mor[p], mor[q])) == mor[r] for p, q, r in checks[i]):
                used.add(g)
                found = assign_morphisms(i + 1, obj, mor, used)
                if found:
                    return found
                used.discard(g)
            del mor[f]
        return None

    return assign_objects(0, {}, set())


def injective_functors(a: FiniteCategory, b: FiniteCategory,
                       guard: SizeGuard | None = None) -> Iterator[FiniteFunctor]:
    for F in enumerate_functors(a, b, guard):
        if len(set(F.obj.values())) == len(a.objects):
            yield F


# -- finite strict 2-categories ----------------------------------------------

@dataclass(frozen=True)
class Finite2Category:
    """A strict 2-category given by explicit tables.

    ``comp1[(g, f)]`` is ``g . f``; ``vcomp[(b, a)]`` is ``a`` then ``b``;
    ``hcomp[(b, a)]`` is ``b * a`` with ``b`` on the later 1-cell.
    """

    objects: tuple
    one_cells: Mapping
    two_cells: Mapping
    id1: Mapping
    id2: Mapping
    comp1: Mapping
    vcomp: Mapping
    hcomp: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        for attr in ("one_cells", "two_cells", "id1", "id2", "comp1", "vcomp", "hcomp"):
            _freeze(self, attr)

    @classmethod
    def build(cls, objects, one_cells=None, two_cells=None, comp1=None, vcomp=None,
              hcomp=None, name: str = "", fill_forced: bool = True) -> "Finite2Category":
        """Add identity cells ``id_<x>``/``1_<f>``, all unit-law entries, and
        (with ``fill_forced``) every composite whose type has a single cell."""
        objects = tuple(objects)
        id1 = {x: f"id_{x}" for x in objects}
        ones = {id1[x]: (x, x) for x in objects}
        ones.update(one_cells or {})
        id2 = {f: f"1_{f}" for f in ones}
        twos = {id2[f]: (f, f) for f in ones}
        twos.update(two_cells or {})
        c1 = {}
        for f, (a, b) in ones.items():
            c1[(f, id1[a])] = f
            c1[(id1[b], f)] = f
        c1.update(comp1 or {})
        v = {}
        for al, (f, g) in twos.items():
            v[(al, id2[f])] = al
            v[(id2[g], al)] = al
        v.update(vcomp or {})
        h = {}
        for al, (f, g) in twos.items():
            a, b = ones[f]
            h[(al, id2[id1[a]])] = al
            h[(id2[id1[b]], al)] = al
        for (g, f), gf in c1.items():
            h[(id2[g], id2[f])] = id2[gf]
        h.update(hcomp or {})
        if fill_forced:
            by_type = {}
            for al, ends in twos.items():
                by_type.setdefault(ends, []).append(al)
            for a1, (f, g) in twos.items():
                for a2, (g2, k) in twos.items():
                    if g2 == g and (a2, a1) not in v:
                        cands = by_type.get((f, k), [])
                        if len(cands) == 1:
                            v[(a2, a1)] = cands[0]
            for a1, (f, f2) in twos.items():
                for b1, (g, g2) in twos.items():
                    if ones[g][0] != ones[f][1] or (b1, a1) in h:
                        continue
                    if (g, f) in c1 and (g2, f2) in c1:
                        cands = by_type.get((c1[(g, f)], c1[(g2, f2)]), [])
                        if len(cands) == 1:
                            h[(b1, a1)] = cands[0]
        return cls(objects, ones, twos, id1, id2, c1, v, h, name)

    # shared 2-category interface
    def has_object(self, x) -> bool:
        return x in self._objset

    def has_one_cell(self, f) -> bool:
        return f in self.one_cells

    def has_two_cell(self, a) -> bool:
        return a in self.two_cells

    @cached_property
    def _objset(self) -> frozenset:
        return frozenset(self.objects)

    def one_source(self, f):
        return self.one_cells[f][0]

    def one_target(self, f):
        return self.one_cells[f][1]

    def two_source(self, a):
        return self.two_cells[a][0]

    def two_target(self, a):
        return self.two_cells[a][1]

    def identity1(self, x):
        return self.id1[x]

    def identity2(self, f):
        return self.id2[f]

    def _lookup(self, table, key, what):
        try:
            return table[key]
        except KeyError:
            raise NotACategory(f"{what} of {key!r} is not defined") from None

    def compose1(self, g, f):
        return self._lookup(self.comp1, (g, f), "1-cell composite")

    def compose_v(self, b, a):
        return self._lookup(self.vcomp, (b, a), "vertical composite")

    def compose_h(self, b, a):
        return self._lookup(self.hcomp, (b, a), "horizontal composite")

    def is_identity2(self, a) -> bool:
        return self.id2.get(self.two_cells[a][0]) == a

    def inverse2(self, a):
        f, g = self.two_cells[a]
        for b in self.two_cells_between(g, f):
            if self.vcomp.get((b, a)) == self.id2[f] and self.vcomp.get((a, b)) == self.id2[g]:
                return b
        return None

    @cached_property
    def _ones_between(self) -> dict:
        out = {}
        for f, ends in self.one_cells.items():
            out.setdefault(ends, []).append(f)
        return out

    @cached_property
    def _twos_between(self) -> dict:
        out = {}
        for a, ends in self.two_cells.items():
            out.setdefault(ends, []).append(a)
        return out

    def one_cells_between(self, a, b) -> list:
        return self._ones_between.get((a, b), [])

    def two_cells_between(self, f, g) -> list:
        return self._twos_between.get((f, g), [])

    def hom(self, a, b) -> FiniteCategory:
        objs = self.one_cells_between(a, b)
        morphisms = {al: self.two_cells[al] for f in objs for g in objs
                     for al in self.two_cells_between(f, g)}
        table = {k: v for k, v in self.vcomp.items() if k[0] in morphisms and k[1] in morphisms}
        return FiniteCategory(tuple(objs), morphisms, {f: self.id2[f] for f in objs}, table,
                              name=f"{self.name}({a},{b})")

    def counts(self) -> tuple[int, int, int]:
        return len(self.objects), len(self.one_cells), len(self.two_cells)

    def __repr__(self) -> str:
        n0, n1, n2 = self.counts()
        return f"<2-category {self.name or '?'}: {n0}/{n1}/{n2} cells>"


def check_2category(c: Finite2Category) -> ValidationReport:
    """Exhaustively verify every strict 2-category law."""
    entries = []
    objs = set(c.objects)
    for x in c.objects:
        i = c.id1.get(x)
        if c.one_cells.get(i) != (x, x):
            entries.append(Violation("identity1", repr(x)))
    for f, (a, b) in c.one_cells.items():
        if a not in objs or b not in objs:
            entries.append(Violation("typing", repr(f), "1-cell endpoint is not an object"))
        if c.two_cells.get(c.id2.get(f)) != (f, f):
            entries.append(Violation("identity2", repr(f)))
    for al, (f, g) in c.two_cells.items():
        if f not in c.one_cells or g not in c.one_cells or c.one_cells[f] != c.one_cells[g]:
            entries.append(Violation("typing", repr(al), "2-cell boundary is not parallel"))
    if entries:
        return ValidationReport.of(entries)

    # 1-cells form a category
    under = FiniteCategory(c.objects, c.one_cells, c.id1, c.comp1)
    entries += [Violation("1-cells:" + v.kind, v.subject, v.detail) for v in check_category(under)]
    # each hom is a category under vertical composition
    for a in c.objects:
        for b in c.objects:
            entries += [Violation("vertical:" + v.kind, f"hom({a!r},{b!r}) {v.subject}", v.detail)
                        for v in check_category(c.hom(a, b))]
    if entries:
        return ValidationReport.of(entries)

    # horizontal composition: typing and closure
    for a1, (f, f2) in c.two_cells.items():
        for b1, (g, g2) in c.two_cells.items():
            if c.one_source(g) != c.one_target(f):
                if (b1, a1) in c.hcomp:
                    entries.append(Violation("horizontal:closure", repr((b1, a1)), "non-composable pair"))
                continue
            r = c.hcomp.get((b1, a1))
            if r is None:
                entries.append(Violation("horizontal:closure", repr((b1, a1)), "composite missing"))
            elif c.two_cells.get(r) != (c.comp1[(g, f)], c.comp1[(g2, f2)]):
                entries.append(Violation("horizontal:typing", repr((b1, a1))))
    if entries:
        return ValidationReport.of(entries)

    for (g, f), gf in c.comp1.items():
        if c.hcomp[(c.id2[g], c.id2[f])] != c.id2[gf]:
            entries.append(Violation("horizontal:identity", repr((g, f))))
    for al, (f, _) in c.two_cells.items():
        a, b = c.one_cells[f]
        if c.hcomp[(al, c.id2[c.id1[a]])] != al or c.hcomp[(c.id2[c.id1[b]], al)] != al:
            entries.append(Violation("horizontal:unit", repr(al)))
    composable = _horizontal_pairs(c)
    for (b1, a1) in composable:
        ba = c.hcomp[(b1, a1)]
        for g1 in composable.get_left(b1):
            if c.hcomp[(g1, ba)] != c.hcomp[(c.hcomp[(g1, b1)], a1)]:
                entries.append(Violation("horizontal:associativity", repr((g1, b1, a1))))
    # interchange: (b2 . b1) * (a2 . a1) = (b2 * a2) . (b1 * a1)
    by_ends = {}
    for key in c.vcomp:
        by_ends.setdefault(c.one_cells[c.two_source(key[1])], []).append(key)
    for (x, y), lower in sorted(by_ends.items(), key=repr):
        uppers = [k for z in c.objects for k in by_ends.get((y, z), [])]
        for (a2, a1), (b2, b1) in itertools.product(lower, uppers):
            lhs = c.hcomp[(c.vcomp[(b2, b1)], c.vcomp[(a2, a1)])]
            rhs = c.vcomp.get((c.hcomp[(b2, a2)], c.hcomp[(b1, a1)]))
            if lhs != rhs:
                entries.append(Violation("interchange", repr(((b2, b1), (a2, a1)))))
    return ValidationReport.of(entries)


class _PairIndex(dict):
    def get_left(self, b):
        return self._left.get(b, [])


def _horizontal_pairs(c: Finite2Category) -> _PairIndex:
    pairs = _PairIndex()
    left = {}
    for (b1, a1) in c.hcomp:
        pairs[(b1, a1)] = True
        left.setdefault(a1, []).append(b1)
    pairs._left = left
    return pairs


def terminal_2category() -> Finite2Category:
    return Finite2Category.build(["*"], name="1")


def discrete_2category(objects, name: str = "") -> Finite2Category:
    return Finite2Category.build(objects, name=name)


def locally_discrete(c: FiniteCategory, name: str = "") -> Finite2Category:
    """``c`` with identity 2-cells only; identity names follow ``c``."""
    id1 = dict(c.identity)
    id2 = {f: ("1", f) for f in c.morphisms}
    twos = {id2[f]: (f, f) for f in c.morphisms}
    vcomp = {(id2[f], id2[f]): id2[f] for f in c.morphisms}
    hcomp = {(id2[g], id2[f]): id2[h] for (g, f), h in c.composition.items()}
    return Finite2Category(c.objects, c.morphisms, twos, id1, id2, c.composition, vcomp, hcomp,
                           name=name or c.name)


def walking_arrow() -> Finite2Category:
    """Objects 0 and 1 and a single non-identity 1-cell ``a: 0 -> 1``."""
    return Finite2Category.build([0, 1], {"a": (0, 1)}, name="2")


def one_object_2category(elements, product, unit, name: str = "", obj="*") -> Finite2Category:
    """One object, one 1-cell, and 2-cells a commutative monoid acting as both
    vertical and horizontal composition."""
    elements = list(elements)
    i = f"id_{obj}"
    twos = {e: (i, i) for e in elements}
    table = {(b, a): product(b, a) for a in elements for b in elements}
    return Finite2Category((obj,), {i: (obj, obj)}, twos, {obj: i}, {i: unit},
                           {(i, i): i}, table, table, name=name)


# -- the 2-category of finite categories -------------------------------------

class CatTwo:
    """Finite categories, functors and natural transformations, composed on
    demand rather than tabulated."""

    name = "Cat"

    def has_object(self, x) -> bool:
        return isinstance(x, FiniteCategory)

    def has_one_cell(self, f) -> bool:
        return isinstance(f, FiniteFunctor)

    def has_two_cell(self, a) -> bool:
        return isinstance(a, NatTrans)

    def one_source(self, f: FiniteFunctor):
        return f.source

    def one_target(self, f: FiniteFunctor):
        return f.target

    def two_source(self, a: NatTrans):
        return a.source

    def two_target(self, a: NatTrans):
        return a.target

    def identity1(self, x):
        return identity_functor(x)

    def identity2(self, f):
        return identity_nat(f)

    def compose1(self, g, f):
        return compose_functors(g, f)

    def compose_v(self, b, a):
        return vcomp_nat(b, a)

    def compose_h(self, b, a):
        return hcomp_nat(b, a)

    def is_identity2(self, a: NatTrans) -> bool:
        return a.source == a.target and a == identity_nat(a.source)

    def inverse2(self, a: NatTrans):
        return inverse_nat(a)

    def __eq__(self, other):
        return isinstance(other, CatTwo)

    def __hash__(self):
        return hash("CatTwo")

    def __repr__(self):
        return "Cat"


CAT = CatTwo()

__all__ = [
    "CAT", "CatTwo", "Finite2Category", "FiniteCategory", "FiniteFunctor", "FrozenMap",
    "NatTrans", "arrow_category", "check_2category", "check_category",
    "check_finite_functor", "check_nat", "compose_functors", "constant_functor",
    "discrete_2category", "discrete_category", "empty_category", "enumerate_functors",
    "enumerate_nats", "find_isomorphism", "full_subcategory", "hcomp_nat", "identity_functor",
    "identity_nat", "injective_functors", "inverse_nat", "locally_discrete",
    "one_object_2category", "product_category", "terminal_2category", "terminal_category",
    "vcomp_nat", "walking_arrow",
]
