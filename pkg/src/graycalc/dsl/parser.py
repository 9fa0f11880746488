"""Recursive-descent parser from DSL text to a syntax tree.

Statements are line-oriented; inside ``{ ... }`` blocks items are separated
by newlines or ``;``.  Name resolution and validation happen afterwards in
:mod:`graycalc.dsl.resolve`.
"""

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
    Loc,
    ModificationDecl,
    MovieDecl,
    MovieStep,
    MoveExpr,
    NatTransDecl,
    PathExpr,
    SyntaxError,
    Term3Decl,
    TermDecl,
    TermExpr,
    Token,
    TransformationDecl,
    TwoCategoryDecl,
    tokenize,
)

STRENGTHS = ("strict", "pseudo", "lax")
ORDERS = ("left", "right", "both")


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    # -- token helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "eof" else ("end of line" if t.kind == "newline" else repr(t.text))
        raise SyntaxError(t.loc, expected, found)

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def at_word(self, word: str) -> bool:
        return self.at("name", word)

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> Token:
        if not self.at(kind, text):
            self.fail(what or repr(text) if text else (what or kind))
        return self.advance()

    def punct(self, ch: str) -> Token:
        return self.expect("punct", ch, repr(ch))

    def word(self, w: str) -> Token:
        return self.expect("name", w, repr(w))

    def name(self, what: str = "a name") -> str:
        return self.expect("name", what=what).text

    def integer(self, what: str = "an integer") -> int:
        t = self.tok
        if t.kind != "name" or not t.text.isdigit():
            self.fail(what)
        self.advance()
        return int(t.text)

    def end_of_statement(self) -> None:
        if self.at("eof"):
            return
        self.expect("newline", what="end of line")

    def skip_newlines(self) -> None:
        while self.at("newline"):
            self.advance()

    def names_until_separator(self) -> tuple[str, ...]:
        out = []
        while self.at("name"):
            out.append(self.advance().text)
        return tuple(out)

    # -- document
    def document(self) -> Document:
        decls = []
        self.skip_newlines()
        while not self.at("eof"):
            decls.append(self.statement())
            self.end_of_statement()
            self.skip_newlines()
        return Document(tuple(decls))

    def statement(self):
        t = self.tok
        if t.kind == "cellkw":
            return self.cell_decl()
        if t.kind != "name":
            self.fail("a declaration or command")
        handlers = {
            "term": self.term_decl, "term3": self.term3_decl, "diagram": self.diagram_decl,
            "movie": self.movie_decl, "category": self.category_decl,
            "2category": self.two_category_decl, "catfunctor": self.catfunctor_decl,
            "nattrans": self.nattrans_decl, "functor": self.functor_decl,
            "transformation": self.transformation_decl, "modification": self.modification_decl,
            "check": self.cmd_check, "normalize": self.cmd_one, "render": self.cmd_one,
            "eq": self.cmd_two, "mediate": self.cmd_two, "eq3": self.cmd_eq3,
            "compose": self.cmd_compose, "homcat": self.cmd_homcat, "limit": self.cmd_limit,
        }
        handler = handlers.get(t.text)
        if handler is None:
            self.fail("a declaration or command")
        return handler()

    # -- signature and terms
    def cell_decl(self) -> CellDecl:
        t = self.advance()
        dim = int(t.text[0])
        name = self.name("a cell name")
        if dim == 0:
            return CellDecl(0, name, loc=t.loc)
        self.punct(":")
        if dim == 1:
            src = self.name("a 0-cell")
            self.expect("arrow", what="'->'")
            return CellDecl(1, name, src, self.name("a 0-cell"), loc=t.loc)
        if dim == 2:
            src = self.path()
            self.expect("darrow", what="'=>'")
            return CellDecl(2, name, src, self.path(), loc=t.loc)
        src = self.term()
        self.expect("arrow", what="'->'")
        return CellDecl(3, name, src, self.term(), loc=t.loc)

    def path(self, allow_empty: bool = False) -> PathExpr:
        loc = self.tok.loc
        if self.at_word("id") and self.peek().kind == "punct" and self.peek().text == "(":
            self.advance()
            self.punct("(")
            start = self.name("a 0-cell")
            self.punct(")")
            return PathExpr((), start, loc)
        if not self.at("name"):
            if allow_empty:
                return PathExpr((), None, loc)
            self.fail("a path")
        segs = [self.advance().text]
        while self.at("punct", "."):
            self.advance()
            segs.append(self.name("a 1-cell"))
        return PathExpr(tuple(segs), None, loc)

    def layer(self) -> LayerExpr:
        loc = self.punct("[").loc
        left = self.path(allow_empty=True)
        self.punct("|")
        core = self.name("a 2-cell")
        self.punct("|")
        right = self.path(allow_empty=True)
        self.punct("]")
        return LayerExpr(left, core, right, loc)

    def term(self) -> TermExpr:
        loc = self.tok.loc
        if self.at_word("id"):
            self.advance()
            self.punct("(")
            p = self.path()
            self.punct(")")
            return TermExpr((), p, loc)
        layers = [self.layer()]
        while self.at("punct", ";"):
            self.advance()
            layers.append(self.layer())
        return TermExpr(tuple(layers), None, loc)

    def term_decl(self) -> TermDecl:
        loc = self.advance().loc
        name = self.name("a term name")
        self.punct("=")
        return TermDecl(name, self.term(), loc)

    def move(self) -> MoveExpr:
        loc = self.tok.loc
        if self.at_word("sigma") or self.at_word("sigma_inv"):
            kind = self.advance().text
            self.punct("(")
            i = self.integer("a layer index")
            self.punct(")")
            return MoveExpr(kind, i, loc=loc)
        cell = self.name("a move")
        self.punct("@")
        k = self.integer("a layer index")
        self.punct(":")
        return MoveExpr("gen", k, cell, self.integer("an offset"), loc)

    def term3_decl(self) -> Term3Decl:
        loc = self.advance().loc
        name = self.name("a term name")
        self.punct(":")
        source = self.name("a term name")
        self.punct("=")
        if self.at_word("id") and self.peek().kind in ("newline", "eof"):
            self.advance()
            return Term3Decl(name, source, (), loc)
        moves = [self.move()]
        while self.at("punct", ";"):
            self.advance()
            moves.append(self.move())
        return Term3Decl(name, source, tuple(moves), loc)

    # -- blocks
    def block(self, item) -> None:
        self.punct("{")
        while True:
            while self.at("newline") or self.at("punct", ";"):
                self.advance()
            if self.at("punct", "}"):
                self.advance()
                return
            if self.at("eof"):
                self.fail("'}'")
            item()
            if not (self.at("newline") or self.at("punct", ";") or self.at("punct", "}")):
                self.fail("';', end of line or '}'")

    def diagram_decl(self) -> DiagramDecl:
        loc = self.advance().loc
        name = self.name("a diagram name")
        data = {"start": None, "top": (), "slices": []}

        def item():
            key = self.name("'start', 'top' or 'slice'")
            self.punct(":")
            if key == "start":
                data["start"] = self.name("a 0-cell")
            elif key == "top":
                data["top"] = self.names_until_separator()
            elif key == "slice":
                cell = self.name("a 2-cell")
                self.punct("@")
                data["slices"].append((cell, self.integer("a wire position")))
            else:
                raise SyntaxError(self.tokens[self.i - 2].loc, "'start', 'top' or 'slice'", repr(key))

        self.block(item)
        return DiagramDecl(name, data["start"], data["top"], tuple(data["slices"]), loc)

    def movie_decl(self) -> MovieDecl:
        loc = self.advance().loc
        name = self.name("a movie name")
        data = {"from": None, "steps": []}

        def item():
            t = self.tok
            key = self.name("'from', 'interchange' or 'vertex'")
            self.punct(":")
            if key == "from":
                data["from"] = self.name("a diagram name")
            elif key == "interchange":
                k = self.integer("a slice index")
                d = self.name("'forward' or 'backward'")
                if d not in ("forward", "backward"):
                    raise SyntaxError(self.tokens[self.i - 1].loc, "'forward' or 'backward'", repr(d))
                data["steps"].append(MovieStep("interchange", k, d, loc=t.loc))
            elif key == "vertex":
                cell = self.name("a 3-cell")
                self.punct("@")
                k = self.integer("a slice index")
                self.punct(":")
                data["steps"].append(MovieStep("vertex", k, "", cell, self.integer("an offset"), t.loc))
            else:
                raise SyntaxError(t.loc, "'from', 'interchange' or 'vertex'", repr(key))

        self.block(item)
        if data["from"] is None:
            raise SyntaxError(loc, "a 'from:' entry in the movie")
        return MovieDecl(name, data["from"], tuple(data["steps"]), loc)

    def _builtin_or_block(self, item):
        if self.at("punct", "="):
            self.advance()
            return self.name("a built-in name")
        self.block(item)
        return None

    def category_decl(self) -> CategoryDecl:
        loc = self.advance().loc
        name = self.name("a category name")
        data = {"objects": (), "arrows": [], "composites": []}

        def item():
            t = self.tok
            key = self.name("'objects', 'arrow' or 'compose'")
            if key == "objects":
                self.punct(":")
                data["objects"] = self.names_until_separator()
            elif key == "arrow":
                f = self.name("an arrow name")
                self.punct(":")
                a = self.name("an object")
                self.expect("arrow", what="'->'")
                data["arrows"].append((f, a, self.name("an object")))
            elif key == "compose":
                g = self.name("an arrow")
                self.punct(".")
                f = self.name("an arrow")
                self.punct("=")
                data["composites"].append((g, f, self.name("an arrow")))
            else:
                raise SyntaxError(t.loc, "'objects', 'arrow' or 'compose'", repr(key))

        builtin = self._builtin_or_block(item)
        return CategoryDecl(name, builtin, data["objects"], tuple(data["arrows"]),
                            tuple(data["composites"]), loc)

    def two_category_decl(self) -> TwoCategoryDecl:
        loc = self.advance().loc
        name = self.name("a 2-category name")
        data = {k: [] for k in ("one", "two", "comp1", "vcomp", "hcomp")}
        data["objects"] = ()

        def triple(sep_kind, sep_text):
            a = self.name("a cell")
            self.expect(sep_kind, sep_text, repr(sep_text))
            b = self.name("a cell")
            self.punct("=")
            return (a, b, self.name("a cell"))

        def item():
            t = self.tok
            if t.kind == "cellkw" and t.text in ("1-cell", "2-cell"):
                self.advance()
                n = self.name("a cell name")
                self.punct(":")
                a = self.name("a cell")
                if t.text == "1-cell":
                    self.expect("arrow", what="'->'")
                    data["one"].append((n, a, self.name("an object")))
                else:
                    self.expect("darrow", what="'=>'")
                    data["two"].append((n, a, self.name("a 1-cell")))
                return
            key = self.name("a 2-category entry")
            if key == "objects":
                self.punct(":")
                data["objects"] = self.names_until_separator()
            elif key in ("comp1", "vcomp"):
                data[key].append(triple("punct", "."))
            elif key == "hcomp":
                data[key].append(triple("punct", "*"))
            else:
                raise SyntaxError(t.loc, "a 2-category entry", repr(key))

        builtin = self._builtin_or_block(item)
        return TwoCategoryDecl(name, builtin, data["objects"], tuple(data["one"]), tuple(data["two"]),
                               tuple(data["comp1"]), tuple(data["vcomp"]), tuple(data["hcomp"]), loc)

    def _mapping(self):
        a = self.name("a name")
        self.expect("arrow", what="'->'")
        return (a, self.name("a name"))

    def _header(self, arrow_kind: str, strength: bool):
        loc = self.advance().loc
        name = self.name("a name")
        s = None
        if strength:
            self.punct("(")
            s = self.name("'strict', 'pseudo' or 'lax'")
            if s not in STRENGTHS:
                raise SyntaxError(self.tokens[self.i - 1].loc, "'strict', 'pseudo' or 'lax'", repr(s))
            self.punct(")")
        self.punct(":")
        src = self.name("a name")
        self.expect(arrow_kind, what="'->'" if arrow_kind == "arrow" else "'=>'")
        return loc, name, s, src, self.name("a name")

    def catfunctor_decl(self) -> CatFunctorDecl:
        loc, name, _, src, tgt = self._header("arrow", False)
        data = {"obj": [], "mor": []}

        def item():
            t = self.tok
            key = self.name("'obj' or 'mor'")
            if key not in data:
                raise SyntaxError(t.loc, "'obj' or 'mor'", repr(key))
            data[key].append(self._mapping())

        self.block(item)
        return CatFunctorDecl(name, src, tgt, tuple(data["obj"]), tuple(data["mor"]), loc)

    def nattrans_decl(self) -> NatTransDecl:
        loc, name, _, src, tgt = self._header("darrow", False)
        comps = []
        self.block(lambda: comps.append(self._mapping()))
        return NatTransDecl(name, src, tgt, tuple(comps), loc)

    def functor_decl(self) -> FunctorDecl:
        loc, name, s, src, tgt = self._header("arrow", True)
        data = {k: [] for k in ("obj", "one", "two", "comp", "unit")}

        def item():
            t = self.tok
            key = self.name("a functor entry")
            if key not in data:
                raise SyntaxError(t.loc, "'obj', 'one', 'two', 'comp' or 'unit'", repr(key))
            if key == "comp":
                g = self.name("a 1-cell")
                self.punct(".")
                f = self.name("a 1-cell")
                self.expect("arrow", what="'->'")
                data["comp"].append((g, f, self.name("a 2-cell")))
            else:
                data[key].append(self._mapping())

        self.block(item)
        return FunctorDecl(name, s, src, tgt, *(tuple(data[k]) for k in ("obj", "one", "two", "comp", "unit")),
                           loc=loc)

    def transformation_decl(self) -> TransformationDecl:
        loc, name, s, src, tgt = self._header("darrow", True)
        data = {"component": [], "witness": []}

        def item():
            t = self.tok
            key = self.name("'component' or 'witness'")
            if key not in data:
                raise SyntaxError(t.loc, "'component' or 'witness'", repr(key))
            data[key].append(self._mapping())

        self.block(item)
        return TransformationDecl(name, s, src, tgt, tuple(data["component"]), tuple(data["witness"]), loc)

    def modification_decl(self) -> ModificationDecl:
        loc, name, _, src, tgt = self._header("darrow", False)
        comps = []

        def item():
            t = self.tok
            if self.name("'component'") != "component":
                raise SyntaxError(t.loc, "'component'", repr(t.text))
            comps.append(self._mapping())

        self.block(item)
        return ModificationDecl(name, src, tgt, tuple(comps), loc)

    # -- commands
    def cmd_check(self) -> Command:
        t = self.advance()
        return Command("check", (self.name("a name or 'signature'"),), loc=t.loc)

    def cmd_one(self) -> Command:
        t = self.advance()
        return Command(t.text, (self.name(),), loc=t.loc)

    def cmd_two(self) -> Command:
        t = self.advance()
        return Command(t.text, (self.name(), self.name()), loc=t.loc)

    def cmd_eq3(self) -> Command:
        t = self.advance()
        args = (self.name(), self.name())
        opts = ()
        if self.at_word("budget"):
            self.advance()
            opts = (("budget", str(self.integer("a budget"))),)
        return Command("eq3", args, opts, t.loc)

    def cmd_compose(self) -> Command:
        t = self.advance()
        args = (self.name(), self.name())
        opts = ()
        if self.at("name"):
            opts = (("order", self._order()),)
        return Command("compose", args, opts, t.loc)

    def _order(self) -> str:
        loc = self.tok.loc
        text = self.name("'left', 'right' or 'both'")
        if text not in ORDERS:
            raise SyntaxError(loc, "'left', 'right' or 'both'", repr(text))
        return text

    def cmd_homcat(self) -> Command:
        t = self.advance()
        a, b = self.name(), self.name()
        s = self.name("'strict' or 'pseudo'")
        if s not in ("strict", "pseudo"):
            raise SyntaxError(self.tokens[self.i - 1].loc, "'strict' or 'pseudo'", repr(s))
        return Command("homcat", (a, b, s), loc=t.loc)

    def cmd_limit(self) -> Command:
        t = self.advance()
        s = self.name("'strict', 'pseudo' or 'lax'")
        if s not in STRENGTHS:
            raise SyntaxError(self.tokens[self.i - 1].loc, "'strict', 'pseudo' or 'lax'", repr(s))
        self.word("of")
        f = self.name("a functor name")
        opts = ()
        if self.at_word("certify"):
            self.advance()
            apexes = [self.name("a category name")]
            while self.at("punct", ","):
                self.advance()
                apexes.append(self.name("a category name"))
            opts = (("certify", ",".join(apexes)),)
        return Command("limit", (s, f), opts, t.loc)


def parse_syntax(text: str) -> Document:
    """Parse without resolving names."""
    return Parser(text).document()


__all__ = ["Parser", "parse_syntax", "STRENGTHS", "ORDERS", "Loc"]
