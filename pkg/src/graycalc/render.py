"""SVG and TikZ rendering of layered diagrams and movies.

Layout: wire levels are spaced ``slice_height`` apart, wires within a level
``wire_spacing`` apart and centred; each slice has one vertex halfway between
its levels.  Every wire segment is a cubic curve.  SVG elements carry
``class`` and ``data-*`` attributes so renders can be counted and tested.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .diagram import Diagram2, Movie
from .errors import MalformedDiagram
from .signature import Signature


class Format(enum.Enum):
    SVG = "svg"
    TIKZ = "tikz"


class LabelPlacement(enum.Enum):
    ABOVE = "above"
    INLINE = "inline"


@dataclass(frozen=True)
class RenderOptions:
    format: Format = Format.SVG
    wire_spacing: float = 40.0
    slice_height: float = 50.0
    label_placement: LabelPlacement = LabelPlacement.ABOVE
    margin: float = 20.0

    def __post_init__(self):
        if self.wire_spacing <= 0 or self.slice_height <= 0 or self.margin < 0:
            raise ValueError("render dimensions must be positive")


@dataclass(frozen=True)
class Segment:
    role: str          # "in", "out" or "through"
    slice: int         # -1 for the wires of a diagram without slices
    label: str
    start: tuple[float, float]
    end: tuple[float, float]
    top: bool          # starts on the top edge


@dataclass(frozen=True)
class Vertex:
    slice: int
    label: str
    at: tuple[float, float]
    inputs: int
    outputs: int


@dataclass(frozen=True)
class Layout:
    width: float
    height: float
    segments: tuple[Segment, ...]
    vertices: tuple[Vertex, ...]


def _arity(d: Diagram2, i: int, sig: Signature | None) -> tuple[int, int]:
    s = d.slices[i]
    ins, outs, pos = [w.label for w in s.inputs], [w.label for w in s.outputs], s.vertex_position
    if pos < 0 or pos > len(ins) or pos > len(outs) or ins[:pos] != outs[:pos]:
        raise MalformedDiagram(f"slice {i}: vertex position {pos} does not fit")
    if sig is not None:
        if not sig.has(s.vertex, 2):
            raise MalformedDiagram(f"slice {i}: unknown 2-cell {s.vertex!r}")
        gen = sig.get(s.vertex, 2)
        k_in, k_out = len(gen.source.segments), len(gen.target.segments)
        if ins[pos:pos + k_in] != list(gen.source.segments) \
                or outs[pos:pos + k_out] != list(gen.target.segments):
            raise MalformedDiagram(f"slice {i}: wires do not match {s.vertex!r}")
    else:
        # without a signature the arities are inferred from the longest shared suffix
        rest_in, rest_out = ins[pos:], outs[pos:]
        common = 0
        while common < min(len(rest_in), len(rest_out)) and rest_in[-1 - common] == rest_out[-1 - common]:
            common += 1
        k_in, k_out = len(rest_in) - common, len(rest_out) - common
    if ins[pos + k_in:] != outs[pos + k_out:]:
        raise MalformedDiagram(f"slice {i}: wires right of the vertex do not pass through")
    return k_in, k_out


def layout(d: Diagram2, opts: RenderOptions = RenderOptions(), sig: Signature | None = None) -> Layout:
    levels = [list(d.top)]
    for i, s in enumerate(d.slices):
        if list(s.inputs) != levels[-1]:
            raise MalformedDiagram(f"slice {i}: inputs do not match the wires above")
        levels.append(list(s.outputs))
    n_max = max([len(lv) for lv in levels] + [1])
    sp, h, m = opts.wire_spacing, opts.slice_height, opts.margin
    width = 2 * m + n_max * sp
    n_slices = len(d.slices)
    height = 2 * m + max(n_slices, 1) * h

    def x(level: int, j: int) -> float:
        n = len(levels[level])
        return m + (n_max - n) * sp / 2 + (j + 0.5) * sp

    def y(level: int) -> float:
        return m + level * h

    segments, vertices = [], []
    if not d.slices:
        for j, w in enumerate(d.top):
            segments.append(Segment("through", -1, w.label, (x(0, j), y(0)), (x(0, j), y(1)), True))
    for i, s in enumerate(d.slices):
        k_in, k_out = _arity(d, i, sig)
        pos = s.vertex_position
        xs = [x(i, j) for j in range(pos, pos + k_in)] + [x(i + 1, j) for j in range(pos, pos + k_out)]
        if xs:
            vx = sum(xs) / len(xs)
        else:
            # a vertex with no wires sits in the gap at its position
            n = len(levels[i])
            left = x(i, pos - 1) if pos > 0 else x(i, 0) - sp
            right = x(i, pos) if pos < n else left + sp
            vx = (left + right) / 2 if n else m + n_max * sp / 2
        vy = y(i) + h / 2
        vertices.append(Vertex(i, s.vertex, (vx, vy), k_in, k_out))
        for j, w in enumerate(s.inputs):
            if pos <= j < pos + k_in:
                segments.append(Segment("in", i, w.label, (x(i, j), y(i)), (vx, vy), i == 0))
            else:
                jo = j if j < pos else j - k_in + k_out
                segments.append(Segment("through", i, w.label, (x(i, j), y(i)), (x(i + 1, jo), y(i + 1)), i == 0))
        for j in range(pos, pos + k_out):
            segments.append(Segment("out", i, s.outputs[j].label, (vx, vy), (x(i + 1, j), y(i + 1)), False))
    return Layout(width, height, tuple(segments), tuple(vertices))


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _curve(seg: Segment) -> tuple[tuple[float, float], tuple[float, float]]:
    (x1, y1), (x2, y2) = seg.start, seg.end
    ym = (y1 + y2) / 2
    return (x1, ym), (x2, ym)


def _label_point(seg: Segment, opts: RenderOptions) -> tuple[float, float]:
    if opts.label_placement is LabelPlacement.ABOVE:
        return seg.start[0] + 3, seg.start[1] - 3 if seg.top else seg.start[1] + 12
    return (seg.start[0] + seg.end[0]) / 2 + 4, (seg.start[1] + seg.end[1]) / 2


def _svg_panel(lay: Layout, opts: RenderOptions, frame: int | None, dx: float) -> list[str]:
    attrs = f' class="panel" transform="translate({_fmt(dx)},0)"'
    if frame is not None:
        attrs += f' data-frame="{frame}"'
    out = [f"<g{attrs}>"]
    for seg in lay.segments:
        c1, c2 = _curve(seg)
        d = (f"M {_fmt(seg.start[0])} {_fmt(seg.start[1])} C {_fmt(c1[0])} {_fmt(c1[1])}, "
             f"{_fmt(c2[0])} {_fmt(c2[1])}, {_fmt(seg.end[0])} {_fmt(seg.end[1])}")
        top = ' data-top="1"' if seg.top else ""
        out.append(f'<path class="wire" data-role="{seg.role}" data-slice="{seg.slice}"'
                   f'{top} d="{d}" fill="none" stroke="black"/>')
        if seg.role != "in" or opts.label_placement is LabelPlacement.INLINE:
            lx, ly = _label_point(seg, opts)
            out.append(f'<text class="wire-label" x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="10">'
                       f'{escape(seg.label)}</text>')
    for v in lay.vertices:
        out.append(f'<circle class="vertex" data-slice="{v.slice}" data-inputs="{v.inputs}" '
                   f'data-outputs="{v.outputs}" cx="{_fmt(v.at[0])}" cy="{_fmt(v.at[1])}" r="6" '
                   f'fill="white" stroke="black"/>')
        out.append(f'<text class="vertex-label" x="{_fmt(v.at[0] + 9)}" y="{_fmt(v.at[1] + 4)}" '
                   f'font-size="11">{escape(v.label)}</text>')
    out.append("</g>")
    return out


def _svg(layouts: list[Layout], opts: RenderOptions, movie: bool, title: str) -> str:
    gap = opts.margin
    width = sum(l.width for l in layouts) + gap * (len(layouts) - 1)
    height = max(l.height for l in layouts)
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
             f'viewBox="0 0 {_fmt(width)} {_fmt(height)}" data-title={quoteattr(title)}>']
    dx = 0.0
    for k, lay in enumerate(layouts):
        lines += _svg_panel(lay, opts, k if movie else None, dx)
        dx += lay.width + gap
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _tex(label: str) -> str:
    out = label
    for ch, rep in (("\\", r"\textbackslash{}"), ("_", r"\_"), ("&", r"\&"), ("%", r"\%"),
                    ("$", r"\$"), ("#", r"\#"), ("{", r"\{"), ("}", r"\}"), ("'", r"\textquotesingle{}")):
        out = out.replace(ch, rep) if ch != "\\" else out.replace(ch, rep)
    return out


def _tikz(layouts: list[Layout], opts: RenderOptions, movie: bool) -> str:
    lines = [r"\begin{tikzpicture}[x=1pt, y=-1pt, wire/.style={thick},"
             r" vertex/.style={circle, draw, fill=white, inner sep=1.5pt}]"]
    dx = 0.0
    for k, lay in enumerate(layouts):
        if movie:
            lines.append(f"% frame {k}")
        lines.append(f"\\begin{{scope}}[xshift={_fmt(dx)}pt]")
        for seg in lay.segments:
            c1, c2 = _curve(seg)
            lines.append(f"  \\draw[wire] ({_fmt(seg.start[0])},{_fmt(seg.start[1])}) .. controls "
                         f"({_fmt(c1[0])},{_fmt(c1[1])}) and ({_fmt(c2[0])},{_fmt(c2[1])}) .. "
                         f"({_fmt(seg.end[0])},{_fmt(seg.end[1])});")
            if seg.role != "in" or opts.label_placement is LabelPlacement.INLINE:
                lx, ly = _label_point(seg, opts)
                lines.append(f"  \\node[font=\\scriptsize, anchor=west] at ({_fmt(lx)},{_fmt(ly)}) "
                             f"{{{_tex(seg.label)}}};")
        for v in lay.vertices:
            lines.append(f"  \\node[vertex, label=right:{{{_tex(v.label)}}}] at "
                         f"({_fmt(v.at[0])},{_fmt(v.at[1])}) {{}};")
        lines.append(r"\end{scope}")
        dx += lay.width + opts.margin
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render2(d: Diagram2, opts: RenderOptions = RenderOptions(), sig: Signature | None = None,
            title: str = "") -> str:
    lay = layout(d, opts, sig)
    if opts.format is Format.SVG:
        return _svg([lay], opts, False, title)
    return _tikz([lay], opts, False)


def render_movie(m: Movie, opts: RenderOptions = RenderOptions(), sig: Signature | None = None,
                 title: str = "") -> str:
    """One panel per frame, left to right."""
    lays = [layout(f, opts, sig) for f in m.frames]
    if opts.format is Format.SVG:
        return _svg(lays, opts, True, title)
    return _tikz(lays, opts, True)
