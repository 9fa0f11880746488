"""Commutation rewriting over every 2-term of a one-object signature with
2-cells alpha: f => f, beta: g => g, mu: f.g => g and eta: id => f.

Prints, per layer count, how many terms there are, how many commutation
classes they fall into, and the largest and mean normalization length.
"""

import argparse
import time
from collections import defaultdict

from graycalc.rewrite import normalize2
from graycalc.signature import CellGenerator, build
from graycalc.term import Layer2, Path1, Term2

CELLS = {"alpha": (("f",), ("f",)), "beta": (("g",), ("g",)), "mu": (("f", "g"), ("g",)), "eta": ((), ("f",))}


def signature():
    gens = [CellGenerator.zero("x"), CellGenerator.one("f", "x", "x"), CellGenerator.one("g", "x", "x")]
    gens += [CellGenerator.two(n, Path1("x", s), Path1("x", t)) for n, (s, t) in CELLS.items()]
    return build(gens)


def terms(max_start: int, max_layers: int):
    starts = [()]
    for _ in range(max_start):
        starts += [s + (w,) for s in starts if len(s) == max(map(len, starts)) for w in "fg"]

    def go(start, wires, layers):
        yield Term2(Path1("x", start), tuple(layers))
        if len(layers) == max_layers:
            return
        for core, (src, tgt) in CELLS.items():
            for p in range(len(wires) - len(src) + 1):
                if wires[p:p + len(src)] == src:
                    layer = Layer2(Path1("x", wires[:p]), core, Path1("x", wires[p + len(src):]))
                    yield from go(start, wires[:p] + tgt + wires[p + len(src):], layers + [layer])

    for start in sorted(set(starts), key=lambda s: (len(s), s)):
        yield from go(start, start, [])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-start", type=int, default=2, help="longest start path")
    ap.add_argument("--max-layers", type=int, default=5)
    args = ap.parse_args()
    sig = signature()
    count, classes, lengths = defaultdict(int), defaultdict(set), defaultdict(list)
    start = time.perf_counter()
    for t in terms(args.max_start, args.max_layers):
        nf = normalize2(sig, t)
        n = len(t.layers)
        count[n] += 1
        classes[n].add(nf.term)
        lengths[n].append(len(nf.certificate))
    print(f"{'layers':>6} {'terms':>8} {'classes':>8} {'max steps':>9} {'mean steps':>10}")
    for n in sorted(count):
        ls = lengths[n]
        print(f"{n:>6} {count[n]:>8} {len(classes[n]):>8} {max(ls):>9} {sum(ls) / len(ls):>10.3f}")
    print(f"total {sum(count.values())} terms in {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
