"""Draw every diagram and movie declared in the golden documents."""

import argparse
from pathlib import Path

from graycalc.dsl import parse
from graycalc.render import Format, RenderOptions, render2, render_movie

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--format", choices=[f.value for f in Format], default="svg")
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    opts = RenderOptions(format=Format(args.format))
    suffix = ".svg" if opts.format is Format.SVG else ".tex"
    for path in sorted(GOLDEN.glob("*.gc")):
        env = parse(path.read_text()).env
        for name, kind in env.kinds.items():
            if kind == "diagram":
                text = render2(env.values[name], opts, env.sig, title=name)
            elif kind == "movie":
                text = render_movie(env.values[name], opts, env.sig, title=name)
            else:
                continue
            out = args.outdir / f"{path.stem}_{name}{suffix}"
            out.write_text(text)
            print(out)


if __name__ == "__main__":
    main()
