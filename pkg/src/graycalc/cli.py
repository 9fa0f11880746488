"""``graycalc run | render | fmt``.

Exit codes: 0 when every command passes, 1 when a check fails or a command
errors, 2 when the document does not parse or validate.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dsl import DSLError, parse, print_document, run
from .dsl.parser import parse_syntax
from .errors import GrayError
from .render import Format, LabelPlacement, RenderOptions, render2, render_movie


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_run(args) -> int:
    doc = parse(_read(args.file))
    outputs = run(doc)
    sys.stdout.write(outputs.format())
    return outputs.exit_code


def cmd_fmt(args) -> int:
    text = print_document(parse_syntax(_read(args.file)))
    _write(text, args.output)
    return 0


def cmd_render(args) -> int:
    doc = parse(_read(args.file))
    env = doc.env
    names = [args.name] if args.name else [n for n, k in env.kinds.items() if k in ("diagram", "movie")]
    if not names:
        print("graycalc: no diagram or movie to render", file=sys.stderr)
        return 2
    opts = RenderOptions(format=Format(args.format), wire_spacing=args.wire_spacing,
                         slice_height=args.slice_height, label_placement=LabelPlacement(args.labels))
    name = names[0]
    if env.kind(name) == "movie":
        text = render_movie(env.values[name], opts, env.sig, title=name)
    elif env.kind(name) == "diagram":
        text = render2(env.values[name], opts, env.sig, title=name)
    else:
        print(f"graycalc: {name!r} is not a diagram or movie", file=sys.stderr)
        return 2
    _write(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graycalc", description="Gray-category diagram calculus.")
    sub = p.add_subparsers(dest="verb", required=True)

    r = sub.add_parser("run", help="execute the commands of a document")
    r.add_argument("file")
    r.set_defaults(func=cmd_run)

    f = sub.add_parser("fmt", help="print a document in canonical form")
    f.add_argument("file")
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_fmt)

    d = sub.add_parser("render", help="draw a diagram or movie as SVG or TikZ")
    d.add_argument("file")
    d.add_argument("--format", choices=[x.value for x in Format], default="svg")
    d.add_argument("--name", help="diagram or movie to draw (default: the first declared)")
    d.add_argument("--wire-spacing", type=float, default=40.0)
    d.add_argument("--slice-height", type=float, default=50.0)
    d.add_argument("--labels", choices=[x.value for x in LabelPlacement], default="above")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DSLError as exc:
        print(f"graycalc: {args.file}:{exc}", file=sys.stderr)
        return 2
    except (OSError, UnicodeDecodeError, ValueError) as exc:
        print(f"graycalc: {exc}", file=sys.stderr)
        return 2
    except GrayError as exc:
        print(f"graycalc: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
