"""Rewrite tests/golden/*.out from the current runner.

Run after an intentional output change, then review the diff before
committing; the golden test compares against these files verbatim.
"""

import argparse
from pathlib import Path

from graycalc.dsl import parse, run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def render(path: Path) -> str:
    out = run(parse(path.read_text()))
    return out.format() + f"exit: {out.exit_code}\n"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="only report files that would change")
    args = ap.parse_args()
    stale = 0
    for gc in sorted(GOLDEN.glob("*.gc")):
        want = render(gc)
        out = gc.with_suffix(".out")
        if out.exists() and out.read_text() == want:
            continue
        stale += 1
        print(("stale " if args.check else "wrote ") + out.name)
        if not args.check:
            out.write_text(want)
    if args.check and stale:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
