"""ASCII and SVG drawings of digital segments."""

from __future__ import annotations

from dataclasses import dataclass

from .grid import DigitalSegment

MARKS = "#*o@%&"


@dataclass(frozen=True)
class RenderStyle:
    format: str = "svg"
    cell_size: int = 24
    annotate_sums: bool = False

    def __post_init__(self):
        if self.format not in ("svg", "ascii"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.cell_size < 1:
            raise ValueError("cell size must be at least 1")


def _bounds(segments: list):
    xs = [p.x for s in segments for p in s]
    ys = [p.y for s in segments for p in s]
    return min(xs), max(xs), min(ys), max(ys)


def render_ascii(segments: list, style: RenderStyle = RenderStyle("ascii")) -> str:
    """One character per grid point, top row is the largest y.

    Segments are marked ``#``, ``*``, ``o`` ... in input order; points shared
    by several segments are marked ``+``.  With ``annotate_sums`` each marked
    point shows its coordinate sum modulo 10 instead.
    """
    if not segments:
        raise ValueError("nothing to render")
    x0, x1, y0, y1 = _bounds(segments)
    owner = {}
    for k, seg in enumerate(segments):
        for p in seg:
            owner.setdefault(p, set()).add(k)
    lines = []
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            marks = owner.get((x, y))
            if not marks:
                row.append(".")
            elif style.annotate_sums:
                row.append(str((x + y) % 10))
            elif len(marks) > 1:
                row.append("+")
            else:
                row.append(MARKS[next(iter(marks)) % len(MARKS)])
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def render_svg(segments: list, style: RenderStyle = RenderStyle()) -> str:
    """SVG 1.1 drawing: grid lines, axis labels, one polyline per segment through cell centers."""
    if not segments:
        raise ValueError("nothing to render")
    x0, x1, y0, y1 = _bounds(segments)
    c = style.cell_size
    pad = 2 * c
    cols = x1 - x0 + 1
    rows = y1 - y0 + 1
    width = cols * c + pad
    height = rows * c + pad

    def cx(x):
        return pad + (x - x0) * c + c / 2

    def cy(y):
        return (y1 - y) * c + c / 2

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="#cccccc" stroke-width="1" fill="none">',
    ]
    for k in range(cols + 1):
        x = pad + k * c
        out.append(f'<line x1="{x}" y1="0" x2="{x}" y2="{rows * c}"/>')
    for k in range(rows + 1):
        y = k * c
        out.append(f'<line x1="{pad}" y1="{y}" x2="{pad + cols * c}" y2="{y}"/>')
    out.append("</g>")
    font = max(6, c // 2)
    out.append(f'<g font-family="monospace" font-size="{font}" fill="#333333" text-anchor="middle">')
    for x in range(x0, x1 + 1):
        out.append(f'<text x="{cx(x)}" y="{rows * c + c}">{x}</text>')
    for y in range(y0, y1 + 1):
        out.append(f'<text x="{pad / 2}" y="{cy(y) + font / 3}">{y}</text>')
    out.append("</g>")
    for k, seg in enumerate(segments):
        color = COLORS[k % len(COLORS)]
        coords = " ".join(f"{cx(p.x)},{cy(p.y)}" for p in seg)
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{max(1, c // 6)}" stroke-linejoin="round"/>'
        )
        for p in seg:
            out.append(f'<circle cx="{cx(p.x)}" cy="{cy(p.y)}" r="{max(1, c // 8)}" fill="{color}"/>')
        if style.annotate_sums:
            for a, b in zip(seg.points, seg.points[1:]):
                mx = (cx(a.x) + cx(b.x)) / 2
                my = (cy(a.y) + cy(b.y)) / 2
                out.append(
                    f'<text x="{mx}" y="{my}" font-size="{max(5, c // 3)}" fill="{color}" '
                    f'text-anchor="middle">{a.x + a.y}</text>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(segments: list, style: RenderStyle) -> str:
    segments = [s if isinstance(s, DigitalSegment) else DigitalSegment(tuple(s)) for s in segments]
    if style.format == "ascii":
        return render_ascii(segments, style)
    return render_svg(segments, style)
