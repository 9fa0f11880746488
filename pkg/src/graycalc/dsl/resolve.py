"""Name resolution and validation of parsed documents.

Signatures, terms, diagrams, categories and 2-categories are validated as
they are declared.  Functor, transformation and modification coherence is
left to the ``check`` command, so that incoherent data can be loaded and
reported on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import catalog
from ..diagram import Diagram2, InterchangeMove, Movie, Slice, VertexMove, Wire, evaluate2, make_movie
from ..errors import GrayError, ValidationReport, Violation
from ..signature import CellGenerator, Signature, add_generator
from ..term import (
    Direction,
    Layer2,
    Path1,
    Term2,
    Term3,
    compose_vertical3,
    gen3_at,
    identity3,
    interchanger_at,
    layer_source,
    move_boundary,
    path_objects,
    typecheck,
)
from ..twocat import (
    CAT,
    Finite2Category,
    FiniteCategory,
    FiniteFunctor,
    NatTrans,
    check_2category,
    check_category,
    check_finite_functor,
    check_nat,
    empty_category,
)
from ..twofun import LaxFunctorData, ModificationData, Strength, TransformationData
from .syntax import (
    CatFunctorDecl,
    CategoryDecl,
    CellDecl,
    Command,
    DiagramDecl,
    Document,
    FunctorDecl,
    Loc,
    ModificationDecl,
    MovieDecl,
    NatTransDecl,
    PathExpr,
    TermExpr,
    Term3Decl,
    TermDecl,
    TransformationDecl,
    TwoCategoryDecl,
    UnresolvedName,
    ValidationFailed,
)


def _walking_arrow() -> Finite2Category:
    return Finite2Category.build(["0", "1"], {"a": ("0", "1")}, name="2")


BUILTIN_2CATEGORIES = {
    "terminal": lambda: Finite2Category.build(["pt"], name="1"),
    "walking_arrow": _walking_arrow,
    "z2": lambda: catalog.z2_loop("pt"),
    "idempotent": lambda: catalog.idempotent_loop("pt"),
    "twisted_pair": catalog.twisted_pair,
}

BUILTIN_CATEGORIES = {
    "empty": empty_category,
    "terminal": lambda: FiniteCategory.build(["pt"], name="1"),
    "arrow": lambda: FiniteCategory.build(["0", "1"], {"a": ("0", "1")}, name="2"),
}


@dataclass
class Env:
    sig: Signature = field(default_factory=Signature)
    kinds: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)

    def define(self, name: str, kind: str, value, loc: Loc) -> None:
        if name in self.kinds:
            raise ValidationFailed(loc, f"{name!r} is already declared as a {self.kinds[name]}")
        self.kinds[name] = kind
        self.values[name] = value

    def get(self, name: str, kinds, loc: Loc):
        kinds = (kinds,) if isinstance(kinds, str) else tuple(kinds)
        if self.kinds.get(name) not in kinds:
            raise UnresolvedName(loc, name, " or ".join(kinds))
        return self.values[name]

    def kind(self, name: str):
        return self.kinds.get(name)


# -- paths and terms ---------------------------------------------------------

def _cell(env: Env, name: str, dim: int, loc: Loc) -> CellGenerator:
    if not env.sig.has(name, dim):
        raise UnresolvedName(loc, name, f"{dim}-cell")
    return env.sig.get(name, dim)


def resolve_path(env: Env, p: PathExpr, start: str | None = None) -> Path1:
    """``start`` is used for an empty path written without ``id(...)``."""
    if p.start is not None:
        _cell(env, p.start, 0, p.loc)
        return Path1(p.start, ())
    if not p.segments:
        if start is None:
            raise ValidationFailed(p.loc, "cannot infer the 0-cell of an empty path")
        return Path1(start, ())
    first = _cell(env, p.segments[0], 1, p.loc)
    for s in p.segments[1:]:
        _cell(env, s, 1, p.loc)
    path = Path1(first.source, p.segments)
    try:
        path_objects(env.sig, path)
    except GrayError as exc:
        raise ValidationFailed(p.loc, str(exc)) from exc
    return path


def resolve_term(env: Env, t: TermExpr) -> Term2:
    if t.identity is not None:
        return Term2(resolve_path(env, t.identity), ())
    layers = []
    for lx in t.layers:
        gen = _cell(env, lx.core, 2, lx.loc)
        src = gen.source
        left = resolve_path(env, lx.left, src.start)
        right = resolve_path(env, lx.right, path_objects(env.sig, src)[-1])
        layers.append(Layer2(left, lx.core, right))
    try:
        term = Term2(layer_source(env.sig, layers[0]), tuple(layers))
        typecheck(env.sig, term)
    except GrayError as exc:
        raise ValidationFailed(t.loc, str(exc)) from exc
    return term


# -- declarations ------------------------------------------------------------

def _declare_cell(env: Env, d: CellDecl) -> None:
    if d.dim == 0:
        gen = CellGenerator.zero(d.name)
    elif d.dim == 1:
        for end in (d.source, d.target):
            _cell(env, end, 0, d.loc)
        gen = CellGenerator.one(d.name, d.source, d.target)
    elif d.dim == 2:
        gen = CellGenerator.two(d.name, resolve_path(env, d.source), resolve_path(env, d.target))
    else:
        gen = CellGenerator.three(d.name, resolve_term(env, d.source), resolve_term(env, d.target))
    try:
        env.sig = add_generator(env.sig, gen)
    except GrayError as exc:
        raise ValidationFailed(d.loc, ValidationReport.of(
            [Violation(type(exc).__name__, f"{d.dim}-cell {d.name}", str(exc))])) from exc


def _declare_term3(env: Env, d: Term3Decl) -> Term3:
    current = env.get(d.source, "term", d.loc)
    result = identity3(current)
    for mv in d.moves:
        try:
            if mv.kind == "gen":
                _cell(env, mv.cell, 3, mv.loc)
                step = Term3(current, (gen3_at(env.sig, current, mv.cell, mv.index, mv.offset),))
            else:
                direction = Direction.FORWARD if mv.kind == "sigma" else Direction.BACKWARD
                step = interchanger_at(env.sig, current, mv.index, direction)
            result = compose_vertical3(env.sig, result, step)
            current = move_boundary(env.sig, step.moves[0])[1]
        except UnresolvedName:
            raise
        except GrayError as exc:
            raise ValidationFailed(mv.loc, str(exc)) from exc
    return result


def _declare_diagram(env: Env, d: DiagramDecl) -> Diagram2:
    for w in d.top:
        _cell(env, w, 1, d.loc)
    if d.start is not None:
        _cell(env, d.start, 0, d.loc)
        start = d.start
    elif d.top:
        start = env.sig.get(d.top[0], 1).source
    else:
        raise ValidationFailed(d.loc, "a diagram without wires needs 'start:'")
    wires = tuple(Wire(w) for w in d.top)
    slices = []
    for i, (cell, pos) in enumerate(d.slices):
        gen = _cell(env, cell, 2, d.loc)
        src, tgt = gen.source.segments, gen.target.segments
        labels = tuple(w.label for w in wires)
        if labels[pos:pos + len(src)] != src or pos > len(labels):
            raise ValidationFailed(d.loc, f"slice {i}: {cell} does not fit at wire {pos}")
        out = labels[:pos] + tgt + labels[pos + len(src):]
        slices.append(Slice(wires, cell, pos, tuple(Wire(w) for w in out)))
        wires = tuple(Wire(w) for w in out)
    diagram = Diagram2(start, tuple(Wire(w) for w in d.top), tuple(slices))
    try:
        evaluate2(env.sig, diagram)
    except GrayError as exc:
        raise ValidationFailed(d.loc, str(exc)) from exc
    return diagram


def _declare_movie(env: Env, d: MovieDecl) -> Movie:
    first = env.get(d.source, "diagram", d.loc)
    descriptors = []
    for st in d.steps:
        if st.kind == "interchange":
            descriptors.append(InterchangeMove(st.slice, Direction(st.direction)))
        else:
            _cell(env, st.cell, 3, st.loc)
            descriptors.append(VertexMove(st.cell, st.slice, st.offset))
    try:
        return make_movie(env.sig, first, descriptors)
    except GrayError as exc:
        raise ValidationFailed(d.loc, str(exc)) from exc


def _declare_category(env: Env, d: CategoryDecl) -> FiniteCategory:
    if d.builtin is not None:
        if d.builtin not in BUILTIN_CATEGORIES:
            raise UnresolvedName(d.loc, d.builtin, "built-in category")
        c = BUILTIN_CATEGORIES[d.builtin]()
        return FiniteCategory(c.objects, c.morphisms, c.identity, c.composition, name=d.name)
    objs = set(d.objects)
    for f, a, b in d.arrows:
        for x in (a, b):
            if x not in objs:
                raise UnresolvedName(d.loc, x, "object")
    c = FiniteCategory.build(d.objects, {f: (a, b) for f, a, b in d.arrows},
                             {(g, f): h for g, f, h in d.composites}, name=d.name)
    for g, f, h in d.composites:
        for m in (g, f, h):
            if m not in c.morphisms:
                raise UnresolvedName(d.loc, m, "arrow")
    report = check_category(c)
    if not report.ok:
        raise ValidationFailed(d.loc, report)
    return c


def _declare_2category(env: Env, d: TwoCategoryDecl) -> Finite2Category:
    if d.builtin is not None:
        if d.builtin not in BUILTIN_2CATEGORIES:
            raise UnresolvedName(d.loc, d.builtin, "built-in 2-category")
        c = BUILTIN_2CATEGORIES[d.builtin]()
        return Finite2Category(c.objects, c.one_cells, c.two_cells, c.id1, c.id2, c.comp1,
                               c.vcomp, c.hcomp, name=d.name)
    objs = set(d.objects)
    for n, a, b in d.one_cells:
        for x in (a, b):
            if x not in objs:
                raise UnresolvedName(d.loc, x, "object")
    c = Finite2Category.build(d.objects, {n: (a, b) for n, a, b in d.one_cells}, name=d.name)
    for n, f, g in d.two_cells:
        for x in (f, g):
            if x not in c.one_cells:
                raise UnresolvedName(d.loc, x, "1-cell")
    twos = {n: (f, g) for n, f, g in d.two_cells}
    c = Finite2Category.build(
        d.objects, {n: (a, b) for n, a, b in d.one_cells}, twos,
        {(g, f): h for g, f, h in d.comp1}, {(b, a): r for b, a, r in d.vcomp},
        {(b, a): r for b, a, r in d.hcomp}, name=d.name)
    for table, known in ((d.comp1, c.one_cells), (d.vcomp, c.two_cells), (d.hcomp, c.two_cells)):
        for row in table:
            for x in row:
                if x not in known:
                    raise UnresolvedName(d.loc, x, "cell")
    report = check_2category(c)
    if not report.ok:
        raise ValidationFailed(d.loc, report)
    return c


def _map(d, pairs, domain, codomain, what, loc: Loc) -> dict:
    out = {}
    for a, b in pairs:
        if a not in domain:
            raise UnresolvedName(loc, a, f"source {what}")
        if b not in codomain:
            raise UnresolvedName(loc, b, f"target {what}")
        out[a] = b
    return out


def _declare_catfunctor(env: Env, d: CatFunctorDecl) -> FiniteFunctor:
    C = env.get(d.source, "category", d.loc)
    D = env.get(d.target, "category", d.loc)
    obj = _map(d, d.objects, C.objects, D.objects, "object", d.loc)
    mor = _map(d, d.morphisms, C.morphisms, D.morphisms, "morphism", d.loc)
    for x in C.objects:
        if x in obj:
            mor.setdefault(C.id(x), D.id(obj[x]))
    F = FiniteFunctor(C, D, obj, mor, name=d.name)
    report = check_finite_functor(F)
    if not report.ok:
        raise ValidationFailed(d.loc, report)
    return F


def _declare_nattrans(env: Env, d: NatTransDecl) -> NatTrans:
    F = env.get(d.source, "catfunctor", d.loc)
    G = env.get(d.target, "catfunctor", d.loc)
    comps = _map(d, d.components, F.source.objects, F.target.morphisms, "component", d.loc)
    alpha = NatTrans(F, G, comps, name=d.name)
    report = check_nat(alpha)
    if not report.ok:
        raise ValidationFailed(d.loc, report)
    return alpha


def _unique_or_identity(B, src, tgt):
    """Default 2-cell of type ``src => tgt``: the identity when the ends
    agree, else the only cell of that type if there is exactly one."""
    if src == tgt:
        return B.identity2(src)
    if isinstance(B, Finite2Category):
        cands = B.two_cells_between(src, tgt)
        if len(cands) == 1:
            return cands[0]
    return None


def _declare_functor(env: Env, d: FunctorDecl) -> LaxFunctorData:
    A = env.get(d.source, "2category", d.loc)
    if d.target == "Cat":
        B = CAT
    else:
        B = env.get(d.target, "2category", d.loc)
    if B is CAT:
        obj = {}
        for a, b in d.obj:
            if a not in A.objects:
                raise UnresolvedName(d.loc, a, "source object")
            obj[a] = env.get(b, "category", d.loc)
        one = {}
        for a, b in d.one:
            if a not in A.one_cells:
                raise UnresolvedName(d.loc, a, "source 1-cell")
            one[a] = env.get(b, "catfunctor", d.loc)
        two = {}
        for a, b in d.two:
            if a not in A.two_cells:
                raise UnresolvedName(d.loc, a, "source 2-cell")
            two[a] = env.get(b, "nattrans", d.loc)
        comp_given = {}
        for g, f, c in d.comp:
            if (g, f) not in A.comp1:
                raise UnresolvedName(d.loc, f"{g} . {f}", "composable pair")
            comp_given[(g, f)] = env.get(c, "nattrans", d.loc)
        unit_given = {}
        for x, c in d.unit:
            if x not in A.objects:
                raise UnresolvedName(d.loc, x, "source object")
            unit_given[x] = env.get(c, "nattrans", d.loc)
    else:
        obj = _map(d, d.obj, A.objects, B.objects, "object", d.loc)
        one = _map(d, d.one, A.one_cells, B.one_cells, "1-cell", d.loc)
        two = _map(d, d.two, A.two_cells, B.two_cells, "2-cell", d.loc)
        comp_given = {}
        for g, f, c in d.comp:
            if (g, f) not in A.comp1:
                raise UnresolvedName(d.loc, f"{g} . {f}", "composable pair")
            if c not in B.two_cells:
                raise UnresolvedName(d.loc, c, "target 2-cell")
            comp_given[(g, f)] = c
        unit_given = dict(_map(d, d.unit, A.objects, B.two_cells, "unit", d.loc))
    missing = [x for x in A.objects if x not in obj]
    if missing:
        raise ValidationFailed(d.loc, f"no image given for object {missing[0]!r}")
    try:
        for x in A.objects:
            one.setdefault(A.id1[x], B.identity1(obj[x]))
        for f in A.one_cells:
            if f not in one:
                raise ValidationFailed(d.loc, f"no image given for 1-cell {f!r}")
        for f, i in A.id2.items():
            two.setdefault(i, B.identity2(one[f]))
        for a in A.two_cells:
            if a not in two:
                raise ValidationFailed(d.loc, f"no image given for 2-cell {a!r}")
        comp = dict(comp_given)
        for (g, f), gf in A.comp1.items():
            if (g, f) not in comp:
                cell = _unique_or_identity(B, B.compose1(one[g], one[f]), one[gf])
                if cell is None:
                    raise ValidationFailed(d.loc, f"no comparison cell given for {g} . {f}")
                comp[(g, f)] = cell
        unit = dict(unit_given)
        for x in A.objects:
            if x not in unit:
                cell = _unique_or_identity(B, B.identity1(obj[x]), one[A.id1[x]])
                if cell is None:
                    raise ValidationFailed(d.loc, f"no unit cell given for {x!r}")
                unit[x] = cell
    except GrayError as exc:
        if isinstance(exc, (ValidationFailed, UnresolvedName)):
            raise
        raise ValidationFailed(d.loc, str(exc)) from exc
    return LaxFunctorData(Strength.parse(d.strength), A, B, obj, one, two, comp, unit, name=d.name)


def _declare_transformation(env: Env, d: TransformationDecl) -> TransformationData:
    F = env.get(d.source, "functor", d.loc)
    G = env.get(d.target, "functor", d.loc)
    if F.source != G.source or F.target != G.target:
        raise ValidationFailed(d.loc, "source and target functors are not parallel")
    A, B = F.source, F.target
    if B is CAT:
        comp = {}
        for x, c in d.component:
            if x not in A.objects:
                raise UnresolvedName(d.loc, x, "object")
            comp[x] = env.get(c, "catfunctor", d.loc)
        wit = {}
        for f, c in d.witness:
            if f not in A.one_cells:
                raise UnresolvedName(d.loc, f, "1-cell")
            wit[f] = env.get(c, "nattrans", d.loc)
    else:
        comp = _map(d, d.component, A.objects, B.one_cells, "component", d.loc)
        wit = _map(d, d.witness, A.one_cells, B.two_cells, "witness", d.loc)
    try:
        for x in A.objects:
            if x not in comp:
                if F.obj[x] != G.obj[x]:
                    raise ValidationFailed(d.loc, f"no component given for {x!r}")
                comp[x] = B.identity1(F.obj[x])
        for f, (x, y) in A.one_cells.items():
            if f not in wit:
                cell = _unique_or_identity(B, B.compose1(G.one[f], comp[x]), B.compose1(comp[y], F.one[f]))
                if cell is None:
                    raise ValidationFailed(d.loc, f"no witness given for {f!r}")
                wit[f] = cell
    except GrayError as exc:
        if isinstance(exc, (ValidationFailed, UnresolvedName)):
            raise
        raise ValidationFailed(d.loc, str(exc)) from exc
    return TransformationData(Strength.parse(d.strength), F, G, comp, wit, name=d.name)


def _declare_modification(env: Env, d: ModificationDecl) -> ModificationData:
    eta = env.get(d.source, "transformation", d.loc)
    theta = env.get(d.target, "transformation", d.loc)
    A, B = eta.source.source, eta.source.target
    if B is CAT:
        comps = {}
        for x, c in d.component:
            if x not in A.objects:
                raise UnresolvedName(d.loc, x, "object")
            comps[x] = env.get(c, "nattrans", d.loc)
    else:
        comps = _map(d, d.component, A.objects, B.two_cells, "component", d.loc)
    for x in A.objects:
        if x not in comps:
            cell = _unique_or_identity(B, eta.component[x], theta.component[x])
            if cell is None:
                raise ValidationFailed(d.loc, f"no component given for {x!r}")
            comps[x] = cell
    return ModificationData(eta, theta, comps, name=d.name)


_RESOLVABLE = ("term", "term3", "diagram", "movie", "category", "2category", "catfunctor",
               "nattrans", "functor", "transformation", "modification")


def _check_command(env: Env, c: Command) -> None:
    v, a = c.verb, c.args
    if v == "check":
        if a[0] != "signature":
            env.get(a[0], _RESOLVABLE, c.loc)
    elif v == "normalize":
        env.get(a[0], "term", c.loc)
    elif v == "eq":
        env.get(a[0], "term", c.loc)
        env.get(a[1], "term", c.loc)
    elif v == "eq3":
        env.get(a[0], "term3", c.loc)
        env.get(a[1], "term3", c.loc)
    elif v in ("compose", "mediate"):
        env.get(a[0], "transformation", c.loc)
        env.get(a[1], "transformation", c.loc)
    elif v == "homcat":
        env.get(a[0], "2category", c.loc)
        env.get(a[1], "2category", c.loc)
    elif v == "limit":
        F = env.get(a[1], "functor", c.loc)
        if F.target is not CAT:
            raise ValidationFailed(c.loc, f"{a[1]!r} is not valued in finite categories")
        for apex in (c.option("certify") or "").split(","):
            if apex:
                env.get(apex, "category", c.loc)
    elif v == "render":
        env.get(a[0], ("diagram", "movie", "term"), c.loc)


_HANDLERS = {
    TermDecl: ("term", lambda env, d: resolve_term(env, d.expr)),
    Term3Decl: ("term3", _declare_term3),
    DiagramDecl: ("diagram", _declare_diagram),
    MovieDecl: ("movie", _declare_movie),
    CategoryDecl: ("category", _declare_category),
    TwoCategoryDecl: ("2category", _declare_2category),
    CatFunctorDecl: ("catfunctor", _declare_catfunctor),
    NatTransDecl: ("nattrans", _declare_nattrans),
    FunctorDecl: ("functor", _declare_functor),
    TransformationDecl: ("transformation", _declare_transformation),
    ModificationDecl: ("modification", _declare_modification),
}


def resolve(doc: Document) -> Document:
    """Resolve every name in declaration order and attach the environment."""
    env = Env()
    for d in doc.decls:
        try:
            if isinstance(d, CellDecl):
                _declare_cell(env, d)
            elif isinstance(d, Command):
                _check_command(env, d)
            else:
                kind, handler = _HANDLERS[type(d)]
                env.define(d.name, kind, handler(env, d), d.loc)
        except (UnresolvedName, ValidationFailed):
            raise
        except (GrayError, KeyError, ValueError, TypeError, IndexError) as exc:
            # anything the module checkers reject surfaces with the statement's location
            raise ValidationFailed(d.loc, f"{type(exc).__name__}: {exc}") from exc
    return Document(doc.decls, env)
