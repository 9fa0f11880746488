"""Canonical text for syntax trees: one statement per line, block entries
indented two spaces, single spaces around operators."""

from __future__ import annotations

from .syntax import (
    CatFunctorDecl,
    CategoryDecl,
    CellDecl,
    Command,
    DiagramDecl,
    Document,
    FunctorDecl,
    LayerExpr,
    ModificationDecl,
    MovieDecl,
    NatTransDecl,
    PathExpr,
    Term3Decl,
    TermDecl,
    TermExpr,
    TransformationDecl,
    TwoCategoryDecl,
)

HEADER = "# graycalc document"


def path_text(p: PathExpr) -> str:
    if p.start is not None:
        return f"id({p.start})"
    return " . ".join(p.segments)


def layer_text(lx: LayerExpr) -> str:
    return f"[{path_text(lx.left)} | {lx.core} | {path_text(lx.right)}]"


def term_text(t: TermExpr) -> str:
    if t.identity is not None:
        return f"id({path_text(t.identity)})"
    return " ; ".join(layer_text(lx) for lx in t.layers)


def _block(header: str, items: list[str]) -> list[str]:
    return [header + " {"] + ["  " + i for i in items] + ["}"]


def decl_lines(d) -> list[str]:
    if isinstance(d, CellDecl):
        if d.dim == 0:
            return [f"0-cell {d.name}"]
        if d.dim == 1:
            return [f"1-cell {d.name} : {d.source} -> {d.target}"]
        if d.dim == 2:
            return [f"2-cell {d.name} : {path_text(d.source)} => {path_text(d.target)}"]
        return [f"3-cell {d.name} : {term_text(d.source)} -> {term_text(d.target)}"]
    if isinstance(d, TermDecl):
        return [f"term {d.name} = {term_text(d.expr)}"]
    if isinstance(d, Term3Decl):
        moves = []
        for m in d.moves:
            moves.append(f"{m.kind}({m.index})" if m.kind != "gen" else f"{m.cell} @ {m.index} : {m.offset}")
        return [f"term3 {d.name} : {d.source} = {' ; '.join(moves) if moves else 'id'}"]
    if isinstance(d, DiagramDecl):
        items = []
        if d.start is not None:
            items.append(f"start: {d.start}")
        items.append("top: " + " ".join(d.top) if d.top else "top:")
        items += [f"slice: {c} @ {p}" for c, p in d.slices]
        return _block(f"diagram {d.name}", items)
    if isinstance(d, MovieDecl):
        items = [f"from: {d.source}"]
        for s in d.steps:
            if s.kind == "interchange":
                items.append(f"interchange: {s.slice} {s.direction}")
            else:
                items.append(f"vertex: {s.cell} @ {s.slice} : {s.offset}")
        return _block(f"movie {d.name}", items)
    if isinstance(d, CategoryDecl):
        if d.builtin is not None:
            return [f"category {d.name} = {d.builtin}"]
        items = ["objects: " + " ".join(d.objects) if d.objects else "objects:"]
        items += [f"arrow {f} : {a} -> {b}" for f, a, b in d.arrows]
        items += [f"compose {g} . {f} = {h}" for g, f, h in d.composites]
        return _block(f"category {d.name}", items)
    if isinstance(d, TwoCategoryDecl):
        if d.builtin is not None:
            return [f"2category {d.name} = {d.builtin}"]
        items = ["objects: " + " ".join(d.objects) if d.objects else "objects:"]
        items += [f"1-cell {n} : {a} -> {b}" for n, a, b in d.one_cells]
        items += [f"2-cell {n} : {a} => {b}" for n, a, b in d.two_cells]
        items += [f"comp1 {g} . {f} = {h}" for g, f, h in d.comp1]
        items += [f"vcomp {b} . {a} = {c}" for b, a, c in d.vcomp]
        items += [f"hcomp {b} * {a} = {c}" for b, a, c in d.hcomp]
        return _block(f"2category {d.name}", items)
    if isinstance(d, CatFunctorDecl):
        items = [f"obj {a} -> {b}" for a, b in d.objects] + [f"mor {a} -> {b}" for a, b in d.morphisms]
        return _block(f"catfunctor {d.name} : {d.source} -> {d.target}", items)
    if isinstance(d, NatTransDecl):
        return _block(f"nattrans {d.name} : {d.source} => {d.target}", [f"{a} -> {b}" for a, b in d.components])
    if isinstance(d, FunctorDecl):
        items = [f"obj {a} -> {b}" for a, b in d.obj] + [f"one {a} -> {b}" for a, b in d.one]
        items += [f"two {a} -> {b}" for a, b in d.two]
        items += [f"comp {g} . {f} -> {c}" for g, f, c in d.comp]
        items += [f"unit {a} -> {b}" for a, b in d.unit]
        return _block(f"functor {d.name} ({d.strength}) : {d.source} -> {d.target}", items)
    if isinstance(d, TransformationDecl):
        items = [f"component {a} -> {b}" for a, b in d.component]
        items += [f"witness {a} -> {b}" for a, b in d.witness]
        return _block(f"transformation {d.name} ({d.strength}) : {d.source} => {d.target}", items)
    if isinstance(d, ModificationDecl):
        return _block(f"modification {d.name} : {d.source} => {d.target}",
                      [f"component {a} -> {b}" for a, b in d.component])
    if isinstance(d, Command):
        return [command_text(d)]
    raise TypeError(f"cannot print {type(d).__name__}")


def command_text(c: Command) -> str:
    if c.verb == "limit":
        text = f"limit {c.args[0]} of {c.args[1]}"
        apexes = c.option("certify")
        if apexes:
            text += " certify " + ", ".join(apexes.split(","))
        return text
    text = " ".join((c.verb,) + c.args)
    if c.verb == "eq3" and c.option("budget") is not None:
        text += f" budget {c.option('budget')}"
    if c.verb == "compose" and c.option("order") is not None:
        text += f" {c.option('order')}"
    return text


def print_document(doc: Document) -> str:
    lines = [HEADER]
    for d in doc.decls:
        lines.extend(decl_lines(d))
    return "\n".join(lines) + "\n"
