"""Command execution: each command yields a block of ``key: value`` records."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..diagram import layout2
from ..errors import GrayError
from ..limits import Diagram2Functor, certify_universal, limit
from ..render import RenderOptions, layout
from ..rewrite import Equal, equal2, equiv3, normalize2
from ..signature import validate
from ..term import Direction, interchanger_at
from ..twocat import check_2category, check_category, check_finite_functor, check_nat
from ..twofun import (
    Order,
    Strength,
    check_functor,
    check_hom_2category,
    check_modification,
    check_transformation,
    compose_transformations,
    hom_2category,
    inverse_modification,
    is_identity_modification,
    mediating_modification,
    vertical_modification,
)
from .printer import command_text
from .syntax import Command, Document

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class CommandResult:
    index: int
    command: str
    status: str = PASS
    records: list[tuple[str, str]] = field(default_factory=list)

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.records.append((key, str(value)))

    def require(self, ok: bool) -> None:
        if not ok and self.status == PASS:
            self.status = FAIL

    def get(self, key: str) -> str | None:
        for k, v in self.records:
            if k == key:
                return v
        return None

    def format(self) -> str:
        lines = [f"[{self.index}] {self.command}"]
        lines += [f"{k}: {v}" for k, v in self.records]
        lines.append(f"status: {self.status}")
        return "\n".join(lines)


@dataclass
class CommandOutputs:
    results: list[CommandResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == PASS for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def format(self) -> str:
        return "".join(r.format() + "\n\n" for r in self.results)


def _report(res: CommandResult, report) -> None:
    res.add("violations", len(report))
    for v in report:
        res.add("violation", v)
    res.require(report.ok)


def _check(env, res: CommandResult, name: str) -> None:
    if name == "signature":
        res.add("cells", sum(len(env.sig.cells(k)) for k in range(4)))
        _report(res, validate(env.sig))
        return
    kind, value = env.kind(name), env.values[name]
    res.add("kind", kind)
    checkers = {
        "category": check_category, "2category": check_2category, "catfunctor": check_finite_functor,
        "nattrans": check_nat, "functor": check_functor, "transformation": check_transformation,
        "modification": check_modification,
    }
    if kind in checkers:
        _report(res, checkers[kind](value))
    else:
        # terms, diagrams and movies were validated when declared
        res.add("violations", 0)


def _script(sig, t, certificate) -> str:
    steps = []
    for mv in certificate:
        step = interchanger_at(sig, t, mv.index).moves[0]
        steps.append(f"{'sigma' if step.direction is Direction.FORWARD else 'sigma_inv'}({mv.index})")
        t = mv.result
    return " ; ".join(steps) if steps else "id"


def _normalize(env, res: CommandResult, name: str) -> None:
    t = env.values[name]
    nf = normalize2(env.sig, t)
    res.add("normal_form", nf.term)
    res.add("steps", len(nf.certificate))
    res.add("certificate", _script(env.sig, t, nf.certificate))


def _compose(env, res: CommandResult, c: Command) -> None:
    eta, theta = env.values[c.args[0]], env.values[c.args[1]]
    which = c.option("order", "both")
    orders = {"left": [Order.LEFT_FIRST], "right": [Order.RIGHT_FIRST],
              "both": [Order.LEFT_FIRST, Order.RIGHT_FIRST]}[which]
    for order in orders:
        key = "left_first" if order is Order.LEFT_FIRST else "right_first"
        try:
            out = compose_transformations(eta, theta, order)
        except GrayError as exc:
            res.add(key, f"fail ({exc})")
            res.require(False)
            continue
        res.add(key, "pass")
        res.add(f"{key}.strength", out.strength)
        res.add(f"{key}.components", _mapping(out.component))
        res.add(f"{key}.witnesses", _mapping(out.witness))


def _mapping(m) -> str:
    return ", ".join(f"{k} -> {v}" for k, v in sorted(m.items(), key=lambda kv: repr(kv[0])))


def _mediate(env, res: CommandResult, c: Command) -> None:
    eta, theta = env.values[c.args[0]], env.values[c.args[1]]
    m = mediating_modification(eta, theta)
    res.add("components", _mapping(m.component))
    report = check_modification(m)
    res.add("check", report.summary())
    inv = inverse_modification(m)
    res.add("invertible", inv is not None)
    ident = inv is not None and is_identity_modification(vertical_modification(inv, m)) \
        and is_identity_modification(vertical_modification(m, inv))
    res.add("inverse_identity", ident)
    res.require(report.ok and ident)


def _homcat(env, res: CommandResult, c: Command) -> None:
    A, B = env.values[c.args[0]], env.values[c.args[1]]
    h = hom_2category(A, B, Strength.parse(c.args[2]))
    o, one, two = h.counts()
    res.add("objects", o)
    res.add("one_cells", one)
    res.add("two_cells", two)
    report = check_hom_2category(h)
    res.add("check_2category", report.summary())
    res.require(report.ok)


def _limit(env, res: CommandResult, c: Command) -> None:
    strength = Strength.parse(c.args[0])
    F = env.values[c.args[1]]
    D = Diagram2Functor(F.source, F, name=c.args[1])
    L = limit(D, strength)
    cat = L.limit
    res.add("objects", len(cat.objects))
    res.add("morphisms", len(cat.morphisms))
    objs = sorted(cat.objects, key=repr)
    for k, x in enumerate(objs):
        res.add(f"object {k}", _plain(x))
    for k, x in enumerate(objs):
        for j, y in enumerate(objs):
            n = len(cat.hom(x, y))
            if n:
                res.add(f"hom {k} {j}", n)
    apexes = [a for a in (c.option("certify") or "").split(",") if a]
    if apexes:
        report = certify_universal(L, D, [env.values[a] for a in apexes])
        for name, entry in zip(apexes, report.entries):
            res.add(f"certify {name}", f"cones={entry.cones} functors={entry.functors} "
                                       f"one_dimensional={str(entry.one_dimensional).lower()} "
                                       f"two_dimensional={str(entry.two_dimensional).lower()}")
        res.add("certified", report.ok)
        res.require(report.ok)


def _plain(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_plain(y) for y in x) + ")"
    if isinstance(x, str):
        return x
    if hasattr(x, "items"):
        return "{" + ", ".join(f"{_plain(k)}: {_plain(v)}" for k, v in sorted(x.items(), key=repr)) + "}"
    return str(x)


def _render(env, res: CommandResult, name: str) -> None:
    kind, value = env.kind(name), env.values[name]
    if kind == "term":
        value, kind = layout2(env.sig, value), "diagram"
    frames = value.frames if kind == "movie" else (value,)
    res.add("frames", len(frames))
    lays = [layout(f, RenderOptions(), env.sig) for f in frames]
    res.add("vertices", " ".join(str(len(lay.vertices)) for lay in lays))
    res.add("wires", " ".join(str(len(lay.segments)) for lay in lays))


def _dispatch(env, res: CommandResult, c: Command) -> None:
    v, a = c.verb, c.args
    if v == "check":
        _check(env, res, a[0])
    elif v == "normalize":
        _normalize(env, res, a[0])
    elif v == "eq":
        eq = equal2(env.sig, env.values[a[0]], env.values[a[1]])
        res.add("equal", eq)
    elif v == "eq3":
        budget = int(c.option("budget", "6"))
        out = equiv3(env.sig, env.values[a[0]], env.values[a[1]], budget)
        res.add("equal", bool(out))
        if isinstance(out, Equal):
            res.add("steps", out.steps)
        else:
            res.add("budget", out.budget)
            res.add("explored", out.explored)
    elif v == "compose":
        _compose(env, res, c)
    elif v == "mediate":
        _mediate(env, res, c)
    elif v == "homcat":
        _homcat(env, res, c)
    elif v == "limit":
        _limit(env, res, c)
    elif v == "render":
        _render(env, res, a[0])
    else:  # pragma: no cover - the parser only produces the verbs above
        raise ValueError(f"unknown command {v!r}")


def run(doc: Document) -> CommandOutputs:
    """Execute the commands of a resolved document in order.

    A command that raises is reported with status ``error`` and does not stop
    the later commands.
    """
    out = CommandOutputs()
    for index, c in enumerate(doc.commands, start=1):
        res = CommandResult(index, command_text(c))
        try:
            _dispatch(doc.env, res, c)
        except (GrayError, KeyError, ValueError) as exc:
            res.add("error", f"{type(exc).__name__}: {exc}")
            res.status = ERROR
        out.results.append(res)
    return out
