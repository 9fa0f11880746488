"""Cell counts of hom 2-categories out of the terminal 2-category and the
walking arrow, strict against pseudo.

From the terminal 2-category the strict hom reproduces the target exactly,
while the pseudo hom also counts pseudo functors whose unit cell is a
non-identity invertible 2-cell.

The pseudo hom from the walking arrow into z3 takes a few minutes.
"""

import argparse
import time

from graycalc import catalog
from graycalc.twocat import discrete_2category, one_object_2category, terminal_2category, walking_arrow
from graycalc.twofun import Strength, check_hom_2category, hom_2category

TARGETS = {
    "twisted_pair": catalog.twisted_pair,
    "z2": catalog.z2_loop,
    "z3": lambda: one_object_2category([0, 1, 2], lambda b, a: (a + b) % 3, 0, name="Z3"),
    "idempotent": catalog.idempotent_loop,
    "walking_arrow": walking_arrow,
    "discrete3": lambda: discrete_2category(["a", "b", "c"]),
}
SOURCES = {"terminal": terminal_2category, "walking_arrow": walking_arrow}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--source", choices=sorted(SOURCES), action="append")
    ap.add_argument("--target", choices=sorted(TARGETS), action="append")
    args = ap.parse_args()
    sources = args.source or ["terminal"]
    targets = args.target or sorted(TARGETS)
    print(f"{'source':<14} {'target':<14} {'target cells':<14} {'strict':<14} {'pseudo':<14} coherent  secs")
    for s in sources:
        for t in targets:
            A, B = SOURCES[s](), TARGETS[t]()
            start = time.perf_counter()
            row = []
            ok = True
            for strength in (Strength.STRICT, Strength.PSEUDO):
                h = hom_2category(A, B, strength)
                row.append(str(h.counts()))
                ok = ok and check_hom_2category(h).ok
            secs = time.perf_counter() - start
            print(f"{s:<14} {t:<14} {str(B.counts()):<14} {row[0]:<14} {row[1]:<14} {str(ok):<9} {secs:.2f}")


if __name__ == "__main__":
    main()
