"""SVG and TikZ output for webs that carry construction geometry.

Edges follow the semicircles they came from; crossing vertices sit a small
step above or below the crossing point. Floats appear only here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .errors import ValidationError
from .web import Web, boundary_signs, depth_map

_NUDGE = 0.15
_SAMPLES = 24
_UNIT = 40.0


@dataclass(frozen=True)
class RenderSpec:
    format: str = "svg"
    scale: Fraction = Fraction(1)
    label_depths: bool = False
    label_signs: bool = True

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise ValidationError(f"scale must be positive, got {self.scale}", code="BadScale")
        if self.format not in ("svg", "tikz"):
            raise ValidationError(f"unknown format {self.format!r}", code="BadFormat")


def _position(w: Web, v: int) -> tuple[float, float]:
    p = w.geometry.points[v]
    return float(p.x), math.sqrt(float(p.y_sq)) + _NUDGE * p.nudge


def _edge_path(w: Web, e: int, d: int) -> list[tuple[float, float]]:
    src, dst = _position(w, w.vertex[d]), _position(w, w.head(d))
    arc = w.geometry.arcs[e]
    if arc is None:
        return [src, dst]
    c, r = float(arc[0]), float(arc[1])
    pts = [src]
    for k in range(1, _SAMPLES):
        x = src[0] + (dst[0] - src[0]) * k / _SAMPLES
        pts.append((x, math.sqrt(max(r * r - (x - c) ** 2, 0.0))))
    pts.append(dst)
    return pts


def _layout(w: Web):
    if w.geometry is None:
        raise ValidationError("web has no geometry; rebuild it from its tableau before rendering",
                              code="MissingGeometry")
    edges = []
    for d in w.web_darts():
        if w.outward[d]:
            edges.append(_edge_path(w, d // 2, d))
    xs = [_position(w, b)[0] for b in w.boundary]
    gaps = []
    if w.boundary:
        depths = depth_map(w).gap_depths
        mids = [xs[0] - 0.5] + [(a + b) / 2 for a, b in zip(xs, xs[1:])] + [xs[-1] + 0.5]
        gaps = list(zip(mids, depths))
    return edges, xs, gaps


def render(w: Web, spec: RenderSpec = RenderSpec()) -> str:
    edges, xs, gaps = _layout(w)
    if spec.format == "svg":
        return _svg(w, spec, edges, xs, gaps)
    return _tikz(w, spec, edges, xs, gaps)


def _svg(w, spec, edges, xs, gaps) -> str:
    unit = _UNIT * float(spec.scale)
    pts = [_position(w, v) for v in range(len(w.kinds))] or [(0.0, 0.0)]
    lo = min([p[0] for p in pts] + [x - 1 for x in xs] or [0.0])
    hi = max([p[0] for p in pts] + [x + 1 for x in xs] or [1.0])
    top = max(p[1] for p in pts) + 1
    width, height = (hi - lo) * unit, (top + 1) * unit

    def tx(x, y):
        return f"{(x - lo) * unit:.2f}", f"{(top - y) * unit:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" height="{height:.2f}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" '
        'orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>',
    ]
    if xs:
        x0, y0 = tx(xs[0] - 0.5, 0)
        x1, _ = tx(xs[-1] + 0.5, 0)
        out.append(f'<line class="wall" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black" stroke-width="2"/>')
    for path in edges:
        d = " ".join(("M" if k == 0 else "L") + ",".join(tx(*p)) for k, p in enumerate(path))
        out.append(f'<path class="edge" d="{d}" fill="none" stroke="black" stroke-width="1.5" '
                   'marker-end="url(#arrow)"/>')
    signs = boundary_signs(w)
    for k, b in enumerate(w.boundary):
        x, y = tx(*_position(w, b))
        kind = "source" if signs[k] == "+" else "sink"
        out.append(f'<circle class="boundary {kind}" cx="{x}" cy="{y}" r="4" fill="white" stroke="black"/>')
        if spec.label_signs:
            lx, ly = tx(xs[k], -0.5)
            out.append(f'<text class="sign" x="{lx}" y="{ly}" text-anchor="middle">{escape(signs[k])}</text>')
    for v, kind in enumerate(w.kinds):
        if kind.is_boundary:
            continue
        x, y = tx(*_position(w, v))
        role = "source" if kind.is_source else "sink"
        out.append(f'<circle class="internal {role}" cx="{x}" cy="{y}" r="3" fill="black"/>')
    if spec.label_depths:
        for gx, depth in gaps:
            lx, ly = tx(gx, 0.3)
            out.append(f'<text class="depth" x="{lx}" y="{ly}" text-anchor="middle">{depth}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _tikz(w, spec, edges, xs, gaps) -> str:
    def c(x, y):
        return f"({x:.3f},{y:.3f})"

    out = [f"\\begin{{tikzpicture}}[scale={float(spec.scale):g}]"]
    if xs:
        out.append(f"\\draw[thick] {c(xs[0] - 0.5, 0)} -- {c(xs[-1] + 0.5, 0)}; % wall")
    for path in edges:
        out.append("\\draw[thick,->] " + " -- ".join(c(*p) for p in path) + "; % edge")
    signs = boundary_signs(w)
    for k, b in enumerate(w.boundary):
        x, y = _position(w, b)
        out.append(f"\\filldraw[fill=white] {c(x, y)} circle (.08); % boundary {signs[k]}")
        if spec.label_signs:
            label = "$-$" if signs[k] == "-" else "$+$"
            out.append(f"\\node at {c(xs[k], -0.5)} {{{label}}}; % sign")
    for v, kind in enumerate(w.kinds):
        if not kind.is_boundary:
            out.append(f"\\fill {c(*_position(w, v))} circle (.08); % internal")
    if spec.label_depths:
        for gx, depth in gaps:
            out.append(f"\\node at {c(gx, 0.3)} {{{depth}}}; % depth")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"
