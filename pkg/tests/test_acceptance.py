"""The nine acceptance criteria, each timed against its budget.

Every criterion prints one PASS/FAIL line; the lines are repeated in the
``acceptance criteria`` section of the pytest terminal summary.
"""

import contextlib
import io
import random
import xml.etree.ElementTree as ET
from functools import lru_cache
from pathlib import Path

import axioms
import globular
import oracles
from graycalc import catalog
from graycalc.cli import main
from graycalc.diagram import evaluate2, layout2
from graycalc.dsl import parse, print_document
from graycalc.errors import GrayError
from graycalc.limits import (
    certify_universal,
    comma_category,
    delete_object,
    lax_limit,
    limit,
    strict_diagram,
)
from graycalc.rewrite import Equal, descents, equiv3, inversion_count, normalize2
from graycalc.signature import add_generator
from graycalc.term import compose_vertical3, identity3, interchanger_at, typecheck
from graycalc.twocat import (
    FiniteCategory,
    FiniteFunctor,
    arrow_category,
    check_2category,
    discrete_2category,
    find_isomorphism,
    identity_functor,
    one_object_2category,
    product_category,
    terminal_2category,
    terminal_category,
    walking_arrow,
)
from graycalc.twofun import (
    Order,
    Strength,
    check_functor,
    check_modification,
    check_transformation,
    compose_transformations,
    hom_2category,
    inverse_modification,
    is_identity_modification,
    mediating_modification,
    vertical_modification,
)

GOLDEN = Path(__file__).parent / "golden"


@lru_cache(maxsize=1)
def universe():
    """Every raw term over start paths of length <= 2 with at most 5 layers."""
    return [r for s in oracles.start_paths(2) for r in oracles.raw_terms(s, 5)]


# -- 1 ------------------------------------------------------------------------

def test_globularity_fuzz(criterion):
    with criterion(1, "globularity fuzz", 5) as c:
        sig = globular.base_signature()
        corrupted = accepted = 0
        for gen, bad in globular.fuzz(seed=2024, n=1000):
            expected = globular.well_formed(gen)
            c.check(expected != bad, f"oracle disagrees with fuzzer on {gen.name}")
            try:
                add_generator(sig, gen)
                ok = True
            except GrayError:
                ok = False
            c.check(ok == expected, f"{gen.name} ({gen.dimension}-cell): accepted={ok}, oracle={expected}")
            corrupted += bad
            accepted += ok
        c.note(f"1000 insertions, {corrupted} corrupted and rejected, {accepted} accepted")


# -- 2 ------------------------------------------------------------------------

def test_diagram_round_trip(criterion):
    with criterion(2, "diagram round trip", 30) as c:
        sig = oracles.make_signature()
        raws = universe()
        for raw in raws:
            t, d = oracles.to_term(raw), oracles.to_diagram(raw)
            c.check(layout2(sig, t) == d, f"layout2 of {raw}")
            c.check(evaluate2(sig, layout2(sig, t)) == t, f"evaluate2 . layout2 on {raw}")
            c.check(layout2(sig, evaluate2(sig, d)) == d, f"layout2 . evaluate2 on {raw}")
        c.note(f"{len(raws)} terms, 4 two-cell generators, up to 5 layers")


# -- 3 ------------------------------------------------------------------------

def _descent_successors(layers):
    return [oracles.raw_swap(layers, i) for i in range(len(layers) - 1) if oracles.is_descent(layers, i)]


def test_rewriting_confluence(criterion):
    with criterion(3, "rewriting confluence", 60) as c:
        sig = oracles.make_signature()
        raws = universe()
        sinks, lengths = {}, {}

        def explore(start, layers):
            """Sinks and (shortest, longest) lengths of all maximal descent-removing sequences."""
            key = (start, layers)
            if key not in sinks:
                succ = _descent_successors(layers)
                if not succ:
                    sinks[key], lengths[key] = {layers}, (0, 0)
                else:
                    found, lo, hi = set(), None, 0
                    for s in succ:
                        explore(start, s)
                        found |= sinks[(start, s)]
                        a, b = lengths[(start, s)]
                        lo = a + 1 if lo is None else min(lo, a + 1)
                        hi = max(hi, b + 1)
                    sinks[key], lengths[key] = found, (lo, hi)

        counts = {}
        for raw in raws:
            t = oracles.to_term(raw)
            counts[raw] = inversion_count(sig, t)
        steps = 0
        for raw in raws:
            start, layers = raw
            t = oracles.to_term(raw)
            c.check(descents(sig, t) == [i for i in range(len(layers) - 1) if oracles.is_descent(layers, i)],
                    f"rewrite sites of {raw}")
            explore(start, layers)
            nf = normalize2(sig, t)
            reached = sinks[raw]
            c.check(len(reached) == 1, f"{raw} has {len(reached)} normal forms")
            c.check({oracles.to_term((start, s)) for s in reached} == {nf.term}, f"normalize2 fixpoint of {raw}")
            again = normalize2(sig, nf.term)
            c.check(again.term == nf.term and not again.certificate, f"normalize2 not idempotent on {raw}")
            n = counts[raw]
            c.check(lengths[raw] == (n, n) == (len(nf.certificate), len(nf.certificate)),
                    f"sequence lengths {lengths[raw]} vs inversion count {n} on {raw}")
            for s in _descent_successors(layers):
                steps += 1
                c.check(counts[(start, s)] == n - 1, f"inversion count does not drop on {raw} -> {s}")
        c.note(f"{len(raws)} terms, {steps} rewrite steps, one fixpoint each")


# -- 4 ------------------------------------------------------------------------

def test_interchanger_cancellation(criterion):
    with criterion(4, "interchanger cancellation", 5) as c:
        sig = oracles.make_signature()
        pairs = 0
        for start in oracles.start_paths(3):
            for raw in oracles.raw_terms(start, 2):
                layers = raw[1]
                if len(layers) != 2 or oracles.raw_swap(layers, 0) is None:
                    continue
                pairs += 1
                t = oracles.to_term(raw)
                there = interchanger_at(sig, t, 0)
                back = interchanger_at(sig, typecheck(sig, there)[1], 0)
                res = equiv3(sig, compose_vertical3(sig, there, back), identity3(t), 4)
                c.check(isinstance(res, Equal), f"no cancellation for {raw}: {res}")
        c.check(pairs > 0, "no disjoint pairs enumerated")
        c.note(f"{pairs} adjacent disjoint pairs over start paths of length <= 3")


# -- 5 ------------------------------------------------------------------------

def _cell_choices(B):
    cells = {"obj": list(B.objects), "one": list(B.one_cells), "component": list(B.one_cells)}
    return lambda field, key: cells.get(field, list(B.two_cells))


def test_coherence_mutations(criterion):
    with criterion(5, "coherence mutation suite", 10) as c:
        F = catalog.twisted_functor()
        eta = catalog.swap_transformation()
        c.check(F.source.objects == walking_arrow().objects, "functor domain is not the walking arrow")
        c.check(check_functor(F).ok and axioms.holds(axioms.functor_sides(F)), "base functor")
        c.check(check_transformation(eta).ok and axioms.holds(axioms.transformation_sides(eta)),
                "base transformation")
        B = F.target
        counted = {"functor": [0, 0], "transformation": [0, 0]}
        suites = [("functor", F, ("obj", "one", "two", "comp", "unit"), axioms.functor_sides, check_functor),
                  ("transformation", eta, ("component", "witness"), axioms.transformation_sides,
                   check_transformation)]
        for label, data, fields, sides, checker in suites:
            base = sides(data)
            for what, bad in axioms.mutations(data, fields, _cell_choices(B)):
                after = sides(bad)
                report = checker(bad)
                counted[label][0] += 1
                if axioms.changed(base, after):
                    counted[label][1] += 1
                    c.check(not report.ok, f"{label} mutation {what} changes an axiom side but is not reported")
                c.check(report.ok == axioms.holds(after), f"{label} mutation {what} disagrees with evaluation")
        c.note(", ".join(f"{k}: {n} mutations, {m} side-changing" for k, (n, m) in counted.items()))


# -- 6 ------------------------------------------------------------------------

def test_lax_functoriality(criterion):
    with criterion(6, "lax functoriality", 5) as c:
        eta, theta = catalog.swap_transformation(), catalog.untwisting_transformation()
        c.check(eta.source.source.objects == walking_arrow().objects, "eta is not over the walking arrow")
        c.check(any(w != eta.source.target.id2[eta.source.target.two_cells[w][0]] for w in eta.witness.values()),
                "eta has only identity witnesses")
        for order in Order:
            composite = compose_transformations(eta, theta, order)
            c.check(check_transformation(composite).ok, f"{order.name} composite fails check_transformation")
        m = mediating_modification(eta, theta)
        c.check(check_modification(m).ok, "mediating modification fails check_modification")
        inv = inverse_modification(m)
        c.check(inv is not None, "mediating modification is not invertible")
        if inv is not None:
            c.check(check_modification(inv).ok, "inverse fails check_modification")
            c.check(is_identity_modification(vertical_modification(inv, m)), "inverse after m is not the identity")
            c.check(is_identity_modification(vertical_modification(m, inv)), "m after inverse is not the identity")
        c.note(f"mediating components {dict(m.component)}")


# -- 7 ------------------------------------------------------------------------

def test_hom_from_terminal(criterion):
    with criterion(7, "hom_2category from terminal", 10) as c:
        targets = [catalog.twisted_pair(), catalog.z2_loop(), walking_arrow(),
                   one_object_2category([0, 1, 2], lambda b, a: (a + b) % 3, 0, name="Z3")]
        seen = []
        for B in targets:
            h = hom_2category(terminal_2category(), B, Strength.STRICT)
            c.check(h.counts() == B.counts(), f"{B.name}: {h.counts()} != {B.counts()}")
            c.check(check_2category(h.category).ok, f"{B.name}: hom fails check_2category")
            seen.append(f"{B.name or 'B'} {h.counts()}")
        c.note("; ".join(seen))


# -- 8 ------------------------------------------------------------------------

def _iso_pair():
    return FiniteCategory.build(["p", "q"], {"i": ("p", "q"), "j": ("q", "p")},
                                {("j", "i"): "id_p", ("i", "j"): "id_q"}, name="I")


def _arrow_into_chain():
    D = FiniteCategory.build([0, 1, 2], {"f": (0, 1), "g": (1, 2), "gf": (0, 2)}, {("g", "f"): "gf"}, name="3")
    return FiniteFunctor(arrow_category(), D, {0: 0, 1: 1}, {"id_0": "id_0", "id_1": "id_1", "a": "f"}, name="u")


def test_limits(criterion):
    with criterion(8, "limits", 60) as c:
        C, D = arrow_category(), _iso_pair()
        product = strict_diagram(discrete_2category(["p", "q"]), {"p": C, "q": D}, name="P")
        direct = product_category(C, D)
        apexes = [terminal_category(), arrow_category()]
        cases = []
        for strength in (Strength.LAX, Strength.STRICT):
            L = limit(product, strength)
            c.check(len(L.limit.objects) == len(C.objects) * len(D.objects) == len(direct.objects),
                    f"{strength.name} product objects {len(L.limit.objects)}")
            c.check(len(L.limit.morphisms) == len(C.morphisms) * len(D.morphisms) == len(direct.morphisms),
                    f"{strength.name} product morphisms {len(L.limit.morphisms)}")
            c.check(find_isomorphism(L.limit, direct) is not None, f"{strength.name} product not isomorphic")
            cases.append((f"{strength.name.lower()} product", L, product))

        u = _arrow_into_chain()
        over = strict_diagram(walking_arrow(), {0: u.source, 1: u.target}, {"a": u}, name="F")
        L = lax_limit(over)
        comma = comma_category(u, identity_functor(u.target))
        c.check(find_isomorphism(L.limit, comma) is not None, "lax limit over the arrow is not the comma category")
        cases.append(("comma", L, over))

        deletions = 0
        for label, L, F in cases:
            c.check(certify_universal(L, F, apexes).ok, f"{label}: certify_universal fails")
            for x in L.limit.objects:
                deletions += 1
                c.check(not certify_universal(delete_object(L, x), F, apexes).ok,
                        f"{label}: deleting {x!r} still certifies")
        c.note(f"product {len(direct.objects)}/{len(direct.morphisms)}, comma "
               f"{len(comma.objects)}/{len(comma.morphisms)}, {deletions} deletions rejected")


# -- 9 ------------------------------------------------------------------------

def _quiet_main(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue()


def _expected_counts(sig, d):
    if not d.slices:
        return 0, len(d.top)
    wires = 0
    for s in d.slices:
        wires += len(s.inputs) + len(sig.get(s.vertex, 2).target.segments)
    return len(d.slices), wires


def test_cli(criterion, tmp_path):
    with criterion(9, "cli", 10) as c:
        docs = sorted(GOLDEN.glob("*.gc"))
        c.check(len(docs) >= 20, f"only {len(docs)} golden documents")
        renders = 0
        for path in docs:
            doc = parse(path.read_text())
            printed = print_document(doc)
            c.check(print_document(parse(printed)) == printed, f"{path.name}: print is not a fixpoint")
            c.check(parse(printed).decls == doc.decls, f"{path.name}: reparse differs")
            env = doc.env
            for name, kind in env.kinds.items():
                if kind not in ("diagram", "movie"):
                    continue
                out = tmp_path / f"{path.stem}_{name}.svg"
                code, _ = _quiet_main(["render", str(path), "--name", name, "-o", str(out)])
                c.check(code == 0, f"{path.name}: render {name} exited {code}")
                root = ET.parse(out).getroot()
                frames = env.values[name].frames if kind == "movie" else [env.values[name]]
                panels = root.findall("{http://www.w3.org/2000/svg}g")
                got = [(len(p.findall("{http://www.w3.org/2000/svg}circle")),
                        len(p.findall("{http://www.w3.org/2000/svg}path"))) for p in panels]
                c.check(got == [_expected_counts(env.sig, f) for f in frames], f"{path.name}: {name} counts {got}")
                renders += 1
        c.check(renders > 0, "no golden renders")

        rng = random.Random(9)
        texts = [path.read_bytes() for path in docs]
        blobs = [bytes(rng.randrange(256) for _ in range(rng.randrange(200))) for _ in range(150)]
        for _ in range(150):
            b = bytearray(rng.choice(texts))
            for _ in range(rng.randint(1, 4)):
                i = rng.randrange(len(b) + 1)
                op = rng.randrange(3)
                if op == 0 and i < len(b):
                    b[i] = rng.randrange(256)
                elif op == 1:
                    b[i:i] = bytes([rng.choice(b" \n{}:;.|[]()@=->#xfa0")])
                else:
                    del b[i:i + rng.randint(1, 8)]
            blobs.append(bytes(b))
        fuzz = tmp_path / "fuzz.gc"
        codes = {}
        for blob in blobs:
            fuzz.write_bytes(blob)
            for verb in ("run", "fmt", "render"):
                try:
                    code, _ = _quiet_main([verb, str(fuzz)])
                except Exception as exc:  # a crash is any escaping exception
                    c.check(False, f"{verb} crashed with {type(exc).__name__}: {exc} on {blob[:60]!r}")
                    continue
                c.check(code in (0, 1, 2), f"{verb} returned {code!r}")
                codes[code] = codes.get(code, 0) + 1
        c.note(f"{len(docs)} documents, {renders} renders, {len(blobs)} fuzz inputs, exit codes {codes}")
