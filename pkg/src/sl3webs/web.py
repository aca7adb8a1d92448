"""Webs as boundary-labelled planar combinatorial maps.

A web is stored as darts. ``twin`` pairs the two ends of an edge, ``next``
is the counterclockwise successor of a dart around its vertex. Web edges are
oriented; ``outward[d]`` says whether the edge points away from the vertex of
``d``. The boundary sits on a horizontal line with the web above it. The line
itself is modelled as a path of wall edges ``b1 - b2 - ... - bm``: walls are
never crossed when measuring depth, and the face under the wall is the
unbounded region.

Layout of the dart arrays built here: web edge ``e`` owns darts ``2e`` (at
its source) and ``2e + 1`` (at its target); wall darts follow.
"""

from __future__ import annotations

import functools
import json
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .errors import IndexOutOfRange, InvalidWeb, InvariantError, ValidationError
from .mdiagram import ArcKind, CrossingArrangement, MDiagram, crossings
from .signs_tableaux import MINUS, PLUS, PairMap, SignString, Tableau, check_tableau


class VertexKind(str, Enum):
    BOUNDARY_SOURCE = "boundary_source"
    BOUNDARY_SINK = "boundary_sink"
    INTERNAL_SOURCE = "internal_source"
    INTERNAL_SINK = "internal_sink"

    @property
    def is_boundary(self) -> bool:
        return self in (VertexKind.BOUNDARY_SOURCE, VertexKind.BOUNDARY_SINK)

    @property
    def is_source(self) -> bool:
        return self in (VertexKind.BOUNDARY_SOURCE, VertexKind.INTERNAL_SOURCE)


_KIND_CODE = {
    VertexKind.BOUNDARY_SOURCE: "+",
    VertexKind.BOUNDARY_SINK: "-",
    VertexKind.INTERNAL_SOURCE: "o",
    VertexKind.INTERNAL_SINK: "i",
}


@dataclass(frozen=True)
class Point:
    """``x`` is exact; the height is ``sqrt(y_sq)`` moved by ``nudge`` small steps."""

    x: Fraction
    y_sq: Fraction = Fraction(0)
    nudge: int = 0


@dataclass(frozen=True)
class Geometry:
    points: tuple[Point, ...]
    # per web edge: (center, radius) of the semicircle it follows, or None for a segment
    arcs: tuple[tuple[Fraction, Fraction] | None, ...]


@dataclass(frozen=True, eq=False)
class Web:
    kinds: tuple[VertexKind, ...]
    boundary: tuple[int, ...]
    vertex: tuple[int, ...]
    twin: tuple[int, ...]
    next: tuple[int, ...]
    wall: tuple[bool, ...]
    outward: tuple[bool, ...]
    geometry: Geometry | None = field(default=None, repr=False)

    @property
    def n_darts(self) -> int:
        return len(self.vertex)

    @property
    def signs(self) -> SignString:
        return boundary_signs(self)

    def web_darts(self) -> list[int]:
        return [d for d in range(self.n_darts) if not self.wall[d]]

    def edges(self) -> list[tuple[int, int]]:
        """Oriented web edges ``(source, target)`` in dart order."""
        return [(self.vertex[d], self.vertex[self.twin[d]])
                for d in self.web_darts() if self.outward[d]]

    @cached_property
    def _first_dart(self) -> dict[int, int]:
        first: dict[int, int] = {}
        for d in range(self.n_darts):
            first.setdefault(self.vertex[d], d)
        return first

    def darts_at(self, v: int, start: int | None = None) -> list[int]:
        """Darts of ``v`` in counterclockwise order."""
        d0 = self._first_dart.get(v) if start is None else start
        if d0 is None:
            return []
        out, d = [d0], self.next[d0]
        while d != d0:
            out.append(d)
            d = self.next[d]
            if len(out) > self.n_darts:
                raise InvariantError(f"next does not cycle at vertex {v}", code="MalformedMap")
        return out

    def web_darts_at(self, v: int) -> list[int]:
        return [d for d in self.darts_at(v) if not self.wall[d]]

    def boundary_dart(self, position: int) -> int:
        """The web dart at boundary vertex ``position`` (1-based)."""
        (d,) = self.web_darts_at(self.boundary[position - 1])
        return d

    def head(self, d: int) -> int:
        return self.vertex[self.twin[d]]

    def to_json(self) -> dict:
        return web_to_json(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Web):
            return NotImplemented
        return canonical_code(self) == canonical_code(other)

    def __hash__(self) -> int:
        return hash(canonical_code(self))


# -- assembly ---------------------------------------------------------------

@dataclass
class WebParts:
    """Mutable, edge-based description of a web used while building one.

    ``rotation[v]`` lists the ends ``(edge, end)`` at ``v`` counterclockwise,
    ``end`` 0 for the source end and 1 for the target end.
    """

    kinds: list[VertexKind] = field(default_factory=list)
    boundary: list[int] = field(default_factory=list)
    edges: list[tuple[int, int] | None] = field(default_factory=list)
    rotation: dict[int, list[tuple[int, int]]] = field(default_factory=dict)
    points: list[Point | None] | None = None
    arcs: list[tuple[Fraction, Fraction] | None] | None = None

    def add_vertex(self, kind: VertexKind, point: Point | None = None) -> int:
        self.kinds.append(kind)
        self.rotation[len(self.kinds) - 1] = []
        if self.points is not None:
            self.points.append(point)
        return len(self.kinds) - 1

    def add_edge(self, src: int, dst: int, arc=None) -> int:
        self.edges.append((src, dst))
        if self.arcs is not None:
            self.arcs.append(arc)
        return len(self.edges) - 1

    def remove_edge(self, e: int) -> None:
        src, dst = self.edges[e]
        self.rotation[src] = [x for x in self.rotation[src] if x[0] != e]
        self.rotation[dst] = [x for x in self.rotation[dst] if x[0] != e]
        self.edges[e] = None

    def build(self) -> Web:
        live_v = [v for v, k in enumerate(self.kinds) if k is not None]
        vmap = {v: i for i, v in enumerate(live_v)}
        live_e = [e for e, ed in enumerate(self.edges) if ed is not None]
        emap = {e: i for i, e in enumerate(live_e)}
        E, m = len(live_e), len(self.boundary)
        n = 2 * E + 2 * max(m - 1, 0)
        vertex, twin, nxt = [0] * n, [0] * n, [0] * n
        wall, outward = [False] * n, [False] * n
        for e in live_e:
            i = emap[e]
            src, dst = self.edges[e]
            vertex[2 * i], vertex[2 * i + 1] = vmap[src], vmap[dst]
            twin[2 * i], twin[2 * i + 1] = 2 * i + 1, 2 * i
            outward[2 * i] = True
        for k in range(m - 1):
            east, west = 2 * E + 2 * k, 2 * E + 2 * k + 1
            vertex[east], vertex[west] = vmap[self.boundary[k]], vmap[self.boundary[k + 1]]
            twin[east], twin[west] = west, east
            wall[east] = wall[west] = True
        pos = {b: k for k, b in enumerate(self.boundary)}
        for v in live_v:
            cyc = [2 * emap[e] + end for e, end in self.rotation.get(v, [])]
            if v in pos:
                k = pos[v]
                cyc = ([2 * E + 2 * k] if k < m - 1 else []) + cyc + ([2 * E + 2 * k - 1] if k > 0 else [])
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                nxt[a] = b
        geometry = None
        if self.points is not None and self.arcs is not None:
            pts = [self.points[v] for v in live_v]
            if all(p is not None for p in pts):
                geometry = Geometry(tuple(pts), tuple(self.arcs[e] for e in live_e))
        return Web(
            kinds=tuple(self.kinds[v] for v in live_v),
            boundary=tuple(vmap[b] for b in self.boundary),
            vertex=tuple(vertex), twin=tuple(twin), next=tuple(nxt),
            wall=tuple(wall), outward=tuple(outward), geometry=geometry,
        )


def web_parts(w: Web, with_geometry: bool = False) -> WebParts:
    parts = WebParts(kinds=list(w.kinds), boundary=list(w.boundary))
    for v in range(len(w.kinds)):
        parts.rotation[v] = []
    eid: dict[int, int] = {}
    for d in w.web_darts():
        if w.outward[d]:
            eid[d] = len(parts.edges)
            parts.edges.append((w.vertex[d], w.head(d)))
    if with_geometry and w.geometry is not None:
        parts.points = list(w.geometry.points)
        parts.arcs = [w.geometry.arcs[d // 2] for d in w.web_darts() if w.outward[d]]
    for v in range(len(w.kinds)):
        for d in w.darts_at(v):
            if w.wall[d]:
                continue
            if w.outward[d]:
                parts.rotation[v].append((eid[d], 0))
            else:
                parts.rotation[v].append((eid[w.twin[d]], 1))
    return parts


def empty_web() -> Web:
    return WebParts().build()


# -- construction from an m-diagram -------------------------------------------

_Y_HEIGHT_SQ = Fraction(1, 16)


def web_from_m_diagram(m: MDiagram) -> Web:
    """Trivalent web of an m-diagram.

    Each m with middle ``b`` becomes a sink ``u_b`` fed by its two arcs and by
    a stem from ``b``. Each crossing becomes a sink receiving the two incoming
    halves and a source emitting the two outgoing halves, joined by an edge
    from the source to the sink.
    """
    arrangement = crossings(m)
    parts = WebParts(points=[], arcs=[])
    for p in range(1, m.size + 1):
        parts.add_vertex(VertexKind.BOUNDARY_SOURCE, Point(Fraction(p)))
    parts.boundary = list(range(m.size))
    ports: dict[int, dict[str, tuple[int, int]]] = {}

    def connect(src, src_port, dst, dst_port, arc=None):
        e = parts.add_edge(src, dst, arc)
        ports.setdefault(src, {})[src_port] = (e, 0)
        ports.setdefault(dst, {})[dst_port] = (e, 1)

    branch = {}
    for b in m.middles:
        branch[b] = parts.add_vertex(VertexKind.INTERNAL_SINK, Point(Fraction(b), _Y_HEIGHT_SQ))
        connect(b - 1, "web", branch[b], "S")
    sink_of, source_of = {}, {}
    for cr in arrangement.crossings:
        upper_in = cr.upper_on_left is cr.left_arc
        base = Point(cr.x, cr.height_squared)
        sink_of[cr] = parts.add_vertex(VertexKind.INTERNAL_SINK, replace(base, nudge=1 if upper_in else -1))
        source_of[cr] = parts.add_vertex(VertexKind.INTERNAL_SOURCE, replace(base, nudge=-1 if upper_in else 1))
        connect(source_of[cr], "E", sink_of[cr], "E")
    for arc in m.arcs:
        side = arc.kind.value
        geo = (arc.center, arc.radius)
        prev, prev_port = arc.outer_end - 1, "web"
        for cr in arrangement.along[arc]:
            connect(prev, prev_port, sink_of[cr], side, geo)
            prev, prev_port = source_of[cr], side
        connect(prev, prev_port, branch[arc.middle], side, geo)
    for b, u in branch.items():
        parts.rotation[u] = [ports[u][k] for k in ("R", "L", "S")]
    for cr in arrangement.crossings:
        x_order, y_order = _crossing_rotations(cr)
        parts.rotation[sink_of[cr]] = [ports[sink_of[cr]][k] for k in x_order]
        parts.rotation[source_of[cr]] = [ports[source_of[cr]][k] for k in y_order]
    for p in range(m.size):
        parts.rotation[p] = [ports[p]["web"]]
    return parts.build()


def _crossing_rotations(cr) -> tuple[list[str], list[str]]:
    """Counterclockwise port order at the sink and source replacing a crossing.

    Around the crossing point the four half-strands read, counterclockwise
    from below-right: lower arc right, upper arc right, upper arc left, lower
    arc left, where "upper" is the arc above the other left of the point.
    Left arcs run left to right, right arcs right to left.
    """
    outer = cr.upper_on_left
    inner = cr.right_arc if outer is cr.left_arc else cr.left_arc

    def half(arc, side):
        into_sink = (side == "left") == (arc.kind is ArcKind.LEFT)
        return ("x" if into_sink else "y", arc.kind.value)

    cyc = [half(outer, "right"), half(inner, "right"), half(outer, "left"), half(inner, "left")]
    orders = {}
    for role in ("x", "y"):
        for k in range(4):
            a, b = cyc[k], cyc[(k + 1) % 4]
            if a[0] == role and b[0] == role:
                orders[role] = [a[1], b[1], "E"]
    return orders["x"], orders["y"]


# -- contraction --------------------------------------------------------------

def contract_minus_pairs(w: Web, pm: PairMap, s: str | None = None) -> Web:
    """Merge each pair of boundary vertices labelled by a minus into the
    internal sink they share, which becomes a boundary sink."""
    s = SignString(pm.sign if s is None else s)
    pairs = pm.minus_pairs
    if not pairs:
        return w
    if len(w.boundary) != s.weight:
        raise ValidationError(f"web has {len(w.boundary)} boundary vertices, sign weight is {s.weight}",
                              code="WrongBoundary")
    parts = web_parts(w, with_geometry=True)
    new_boundary = []
    for p, labels in enumerate(pm.labels, start=1):
        bs = [w.boundary[a - 1] for a in labels]
        if len(labels) == 1:
            new_boundary.append(bs[0])
            continue
        a = labels[0]
        da, db = w.boundary_dart(a), w.boundary_dart(a + 1)
        v = w.head(da)
        if w.head(db) != v:
            raise InvariantError(
                f"boundary vertices {a} and {a + 1} attach to different internal vertices",
                code="PairNotCoincident")
        if w.next[w.twin[da]] != w.twin[db] or w.kinds[v] is not VertexKind.INTERNAL_SINK:
            raise InvariantError(f"boundary vertices {a} and {a + 1} do not bound a triangle at a sink",
                                 code="NotAdjacent")
        for d in (da, db):
            parts.remove_edge(d // 2)
        for b in bs:
            parts.kinds[b] = None
        parts.kinds[v] = VertexKind.BOUNDARY_SINK
        if parts.points is not None:
            xs = [parts.points[b].x for b in bs]
            parts.points[v] = Point(sum(xs) / 2)
        new_boundary.append(v)
    parts.boundary = new_boundary
    return parts.build()


# -- faces and depth -----------------------------------------------------------

@dataclass(frozen=True)
class FaceTable:
    faces: tuple[tuple[int, ...], ...]
    face_of: tuple[int, ...]
    outer: int

    def edge_faces(self, w: Web) -> list[tuple[int, int]]:
        """The two faces on either side of each web edge, in edge order."""
        return [(self.face_of[d], self.face_of[w.twin[d]]) for d in w.web_darts() if w.outward[d]]


def _check_permutations(w: Web) -> None:
    n = w.n_darts
    if sorted(w.next) != list(range(n)) or sorted(w.twin) != list(range(n)):
        raise InvariantError("next or twin is not a permutation", code="MalformedMap")
    if any(w.twin[w.twin[d]] != d or w.twin[d] == d for d in range(n)):
        raise InvariantError("twin is not a fixed-point-free involution", code="MalformedMap")


def faces(w: Web) -> FaceTable:
    """Orbits of ``d -> next(twin(d))``; each dart's face lies on its right."""
    _check_permutations(w)
    n = w.n_darts
    face_of = [-1] * n
    found = []
    for d0 in range(n):
        if face_of[d0] >= 0:
            continue
        orbit, d = [], d0
        while face_of[d] < 0:
            face_of[d] = len(found)
            orbit.append(d)
            d = w.next[w.twin[d]]
        found.append(tuple(orbit))
    if not found:
        return FaceTable(((),), (), 0)
    if len(w.boundary) >= 2:
        b1 = w.boundary[0]
        east = next(d for d in w.darts_at(b1) if w.wall[d])
        outer = face_of[east]
    elif w.boundary:
        outer = face_of[w.twin[w.boundary_dart(1)]]
    else:
        outer = 0
    return FaceTable(tuple(found), tuple(face_of), outer)


@dataclass(frozen=True)
class DepthMap:
    depth: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    table: FaceTable

    def left_depth(self, i: int) -> int:
        return self.depth[self.left[i - 1]]

    def right_depth(self, i: int) -> int:
        return self.depth[self.right[i - 1]]

    @property
    def gap_depths(self) -> list[int]:
        """Depth of the region left of b1, then right of each boundary vertex."""
        if not self.left:
            return [self.depth[self.table.outer]]
        return [self.depth[self.left[0]]] + [self.depth[f] for f in self.right]


def depth_map(w: Web) -> DepthMap:
    table = faces(w)
    nf = len(table.faces)
    adj: list[set[int]] = [set() for _ in range(nf)]
    for f, g in table.edge_faces(w):
        adj[f].add(g)
        adj[g].add(f)
    depth = [-1] * nf
    depth[table.outer] = 0
    queue = deque([table.outer])
    while queue:
        f = queue.popleft()
        for g in adj[f]:
            if depth[g] < 0:
                depth[g] = depth[f] + 1
                queue.append(g)
    left, right = [], []
    for i in range(1, len(w.boundary) + 1):
        d = w.boundary_dart(i)
        right.append(table.face_of[d])
        left.append(table.face_of[w.twin[d]])
    return DepthMap(tuple(depth), tuple(left), tuple(right), table)


def boundary_signs(w: Web) -> SignString:
    return SignString("".join(PLUS if w.kinds[b].is_source else MINUS for b in w.boundary))


@dataclass(frozen=True)
class Violation:
    kind: str
    face: int | None = None
    edge_count: int | None = None

    def __str__(self) -> str:
        if self.kind == "SmallFace":
            return f"SmallFace(face {self.face}, {self.edge_count} edges)"
        return self.kind


def _components(w: Web, web_only: bool = True) -> list[set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(len(w.kinds))}
    for d in range(w.n_darts):
        if web_only and w.wall[d]:
            continue
        adj[w.vertex[d]].add(w.head(d))
    seen, comps = set(), []
    for v in adj:
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def is_non_elliptic(w: Web) -> list[Violation]:
    """Circles and closed faces with fewer than six sides; empty means non-elliptic."""
    out = []
    boundary = set(w.boundary)
    for comp in _components(w):
        if not comp & boundary:
            out.append(Violation("CircleComponent"))
    table = faces(w)
    for f, orbit in enumerate(table.faces):
        if f == table.outer or not orbit or any(w.wall[d] for d in orbit):
            continue
        if len(orbit) < 6:
            out.append(Violation("SmallFace", f, len(orbit)))
    return out


# -- inverse to tableaux --------------------------------------------------------

def web_to_tableau(w: Web) -> Tableau:
    """Read the filling from the depths on either side of each boundary edge.

    Left shallower than right: a source goes to column 1, a sink to columns 1
    and 2. Equal: column 2, or columns 1 and 3. Left deeper: column 3, or
    columns 2 and 3.
    """
    dm = depth_map(w)
    signs = boundary_signs(w)
    columns: list[list[int]] = [[], [], []]
    for i, sign in enumerate(signs, start=1):
        dl, dr = dm.left_depth(i), dm.right_depth(i)
        if dl < dr:
            cols = (0,) if sign == PLUS else (0, 1)
        elif dl == dr:
            cols = (1,) if sign == PLUS else (0, 2)
        else:
            cols = (2,) if sign == PLUS else (1, 2)
        for c in cols:
            columns[c].append(i)
    if len({len(c) for c in columns}) > 1:
        raise ValidationError(f"columns of lengths {[len(c) for c in columns]} do not form a filling",
                              code="NotAFilling")
    T = Tableau.from_columns(columns)
    try:
        check_tableau(T, signs)
    except ValidationError as exc:
        raise ValidationError(f"{T} is not a filling of content {signs}: {exc}", code="NotAFilling") from exc
    return T


def web_to_standard_tableau(w: Web) -> Tableau:
    """Three-row standard tableau of an all-plus web: top row when the left
    face is shallower, middle when equal, bottom when deeper."""
    if MINUS in boundary_signs(w):
        raise ValidationError("standard form needs a web whose boundary is all sources", code="NotAllPlus")
    T = web_to_tableau(w)
    return Tableau(T.columns())


# -- rotation and join --------------------------------------------------------------

def rotate(w: Web, times: int = 1) -> Web:
    """Move the base point one step: b1 becomes the last boundary vertex."""
    if not w.boundary:
        raise ValidationError("cannot rotate a web with empty boundary", code="EmptyBoundary")
    parts = web_parts(w)
    k = times % len(parts.boundary)
    parts.boundary = parts.boundary[k:] + parts.boundary[:k]
    return parts.build()


def join(w1: Web, w2: Web, i: int) -> Web:
    """Insert ``w2`` between boundary vertices ``i`` and ``i + 1`` of ``w1``."""
    m1 = len(w1.boundary)
    if not 0 <= i <= m1:
        raise IndexOutOfRange(f"join index {i} outside 0..{m1}")
    p1, p2 = web_parts(w1), web_parts(w2)
    shift_v, shift_e = len(p1.kinds), len(p1.edges)
    p1.kinds += p2.kinds
    p1.edges += [(a + shift_v, b + shift_v) for a, b in p2.edges]
    for v, ends in p2.rotation.items():
        p1.rotation[v + shift_v] = [(e + shift_e, end) for e, end in ends]
    inserted = [b + shift_v for b in p2.boundary]
    p1.boundary = p1.boundary[:i] + inserted + p1.boundary[i:]
    return p1.build()


# -- canonical code ------------------------------------------------------------------

def canonical_code(w: Web) -> str:
    """Single-line code; equal iff the webs are isomorphic as embedded oriented
    graphs by a map fixing every boundary label."""
    signs = str(boundary_signs(w))
    if not w.boundary:
        return f"{signs}|" + ",".join(sorted(_rooted_code(w, r) for r in _loose_roots(w)))
    root = w.boundary_dart(1)
    numbering, blocks = _traverse(w, root)
    body = _encode(w, numbering, blocks)
    missing = set(range(len(w.kinds))) - {w.vertex[b[0]] for b in blocks}
    extra = ""
    if missing:
        extra = "#" + ",".join(sorted(_rooted_code(w, r, restrict=missing) for r in _loose_roots(w, missing)))
    return f"{signs}|{body}{extra}"


def _traverse(w: Web, root: int, restrict=None):
    numbering: dict[int, int] = {}
    blocks = []
    seen = {w.vertex[root]}
    queue = deque([root])
    while queue:
        start = queue.popleft()
        block = w.darts_at(w.vertex[start], start)
        for d in block:
            numbering[d] = len(numbering)
        blocks.append(block)
        for d in block:
            u = w.head(d)
            if u not in seen and (restrict is None or u in restrict):
                seen.add(u)
                queue.append(w.twin[d])
    return numbering, blocks


def _encode(w: Web, numbering, blocks) -> str:
    out = []
    for block in blocks:
        kind = _KIND_CODE[w.kinds[w.vertex[block[0]]]]
        darts = []
        for d in block:
            mark = "w" if w.wall[d] else (">" if w.outward[d] else "<")
            darts.append(f"{numbering.get(w.twin[d], '?')}{mark}")
        out.append(kind + ".".join(darts))
    return ";".join(out)


def _loose_roots(w: Web, among=None):
    comps = [c for c in _components(w, web_only=False) if among is None or c <= among]
    return [min((d for d in range(w.n_darts) if w.vertex[d] in c),
                key=lambda d: _rooted_code(w, d, restrict=c)) for c in comps if c]


def _rooted_code(w: Web, root: int, restrict=None) -> str:
    numbering, blocks = _traverse(w, root, restrict)
    return _encode(w, numbering, blocks)


# -- validation -----------------------------------------------------------------------

@dataclass(frozen=True)
class WebProblem:
    kind: str
    where: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.where}"


def validate_web(w: Web) -> list[WebProblem]:
    """Check every structural invariant; an empty list means valid."""
    P = WebProblem
    n = w.n_darts
    problems = []
    if not (len(w.twin) == len(w.next) == len(w.wall) == len(w.outward) == n):
        return [P("MalformedMap", "dart arrays differ in length")]
    if any(not 0 <= v < len(w.kinds) for v in w.vertex):
        return [P("MalformedMap", "dart attached to an unknown vertex")]
    for d in range(n):
        t = w.twin[d]
        if not 0 <= t < n or t == d or w.twin[t] != d:
            problems.append(P("BrokenInvolution", f"dart {d}"))
    if sorted(w.next) != list(range(n)):
        problems.append(P("NextNotPermutation", "next repeats or skips darts"))
    if problems:
        return problems
    for d in range(n):
        if w.vertex[w.next[d]] != w.vertex[d]:
            problems.append(P("NextLeavesVertex", f"dart {d}"))
        if w.wall[d] != w.wall[w.twin[d]]:
            problems.append(P("WallMismatch", f"dart {d}"))
        elif not w.wall[d] and w.outward[d] == w.outward[w.twin[d]]:
            problems.append(P("OrientationMismatch", f"edge of dart {d}"))
    if problems:
        return problems
    bpos = {b: k for k, b in enumerate(w.boundary)}
    if len(bpos) != len(w.boundary):
        problems.append(P("BoundaryMismatch", "boundary lists a vertex twice"))
    for v, kind in enumerate(w.kinds):
        darts = w.darts_at(v)
        webd = [d for d in darts if not w.wall[d]]
        if kind.is_boundary != (v in bpos):
            problems.append(P("BoundaryMismatch", f"vertex {v} of kind {kind.value}"))
        want = 1 if kind.is_boundary else 3
        if len(webd) != want:
            problems.append(P("WrongValence", f"vertex {v} has {len(webd)} web edges, expected {want}"))
        outs = {w.outward[d] for d in webd}
        if len(outs) > 1:
            problems.append(P("MixedOrientation", f"vertex {v}"))
        elif outs and outs != {kind.is_source}:
            problems.append(P("KindMismatch", f"vertex {v} is {kind.value} but its edges point the other way"))
        if v in bpos:
            k, m = bpos[v], len(w.boundary)
            walls = {w.head(d): d for d in darts if w.wall[d]}
            want_n = {w.boundary[j] for j in (k - 1, k + 1) if 0 <= j < m}
            if set(walls) != want_n or len(walls) != sum(1 for d in darts if w.wall[d]):
                problems.append(P("WallPathBroken", f"boundary vertex {k + 1}"))
            elif len(webd) == 1:
                east = walls.get(w.boundary[k + 1]) if k + 1 < m else None
                west = walls.get(w.boundary[k - 1]) if k > 0 else None
                cyc = [d for d in (east, webd[0], west) if d is not None]
                if any(w.next[a] != b for a, b in zip(cyc, cyc[1:] + cyc[:1])):
                    problems.append(P("WallOrderBroken", f"boundary vertex {k + 1}"))
        elif any(w.wall[d] for d in darts):
            problems.append(P("WallPathBroken", f"internal vertex {v} touches the wall"))
    if problems:
        return problems
    V = len(w.kinds)
    if V:
        E = n // 2
        F = len(faces(w).faces)
        C = len(_components(w, web_only=False))
        if C > 1:
            problems.append(P("Disconnected", f"{C} components including the wall"))
        if V - E + F != 2:
            problems.append(P("EulerViolation", f"V - E + F = {V} - {E} + {F} = {V - E + F}"))
    return problems


def check_web(w: Web) -> None:
    problems = validate_web(w)
    if problems:
        raise InvalidWeb(problems)


def euler_characteristic(w: Web) -> int:
    return len(w.kinds) - w.n_darts // 2 + len(faces(w).faces)


# -- drawings -----------------------------------------------------------------------

def _ccw_key(vec):
    x, y = vec
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_cmp(u, v):
    hu, hv = _ccw_key(u), _ccw_key(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def web_from_drawing(sign: str, points: Mapping[str, tuple], edges: Sequence) -> Web:
    """Build a web from a straight-line sketch of a figure.

    ``points`` maps ``"b1".."bm"`` (boundary, left to right) and any internal
    names to coordinates. ``edges`` holds ``(src, dst)`` or
    ``(src, dst, waypoints)``; the first and last waypoint fix the direction
    in which the edge leaves each end. Internal kinds follow the orientations.
    """
    s = SignString(sign)
    names = [f"b{i}" for i in range(1, len(s) + 1)]
    names += sorted(k for k in points if k not in names)
    idx = {name: i for i, name in enumerate(names)}
    pts = {k: (Fraction(points[k][0]), Fraction(points[k][1])) for k in names}
    parts = WebParts()
    for k, name in enumerate(names):
        if k < len(s):
            parts.add_vertex(VertexKind.BOUNDARY_SOURCE if s[k] == PLUS else VertexKind.BOUNDARY_SINK)
        else:
            parts.add_vertex(VertexKind.INTERNAL_SINK)
    parts.boundary = list(range(len(s)))
    outdeg = {k: 0 for k in names}
    ends: dict[str, list] = {k: [] for k in names}
    for e, spec in enumerate(edges):
        src, dst = spec[0], spec[1]
        way = [tuple(map(Fraction, p)) for p in (spec[2] if len(spec) > 2 else [])]
        parts.add_edge(idx[src], idx[dst])
        first = way[0] if way else pts[dst]
        last = way[-1] if way else pts[src]
        ends[src].append(((first[0] - pts[src][0], first[1] - pts[src][1]), (e, 0)))
        ends[dst].append(((last[0] - pts[dst][0], last[1] - pts[dst][1]), (e, 1)))
        outdeg[src] += 1
    for k, name in enumerate(names):
        ordered = sorted(ends[name], key=functools.cmp_to_key(lambda a, b: _ccw_cmp(a[0], b[0])))
        parts.rotation[k] = [end for _, end in ordered]
        if k >= len(s) and outdeg[name] == len(ends[name]) and ends[name]:
            parts.kinds[k] = VertexKind.INTERNAL_SOURCE
    return parts.build()


# -- JSON ------------------------------------------------------------------------------

def _frac(q: Fraction) -> str:
    return str(q)


def web_to_json(w: Web, with_code: bool = True) -> dict:
    edge_darts = [d for d in w.web_darts() if w.outward[d]]
    eid = {d: k for k, d in enumerate(edge_darts)}
    eid.update({w.twin[d]: k for k, d in enumerate(edge_darts)})
    data = {
        "sign": str(boundary_signs(w)),
        "boundary": list(w.boundary),
        "vertices": [{"id": v, "kind": k.value} for v, k in enumerate(w.kinds)],
        "edges": [{"from": w.vertex[d], "to": w.head(d)} for d in edge_darts],
        "rotations": {str(v): [eid[d] for d in w.web_darts_at(v)] for v in range(len(w.kinds))},
    }
    if w.geometry is not None:
        data["geometry"] = {
            "points": [[_frac(p.x), _frac(p.y_sq), p.nudge] for p in w.geometry.points],
            "arcs": [None if a is None else [_frac(a[0]), _frac(a[1])]
                     for a in (w.geometry.arcs[d // 2] for d in edge_darts)],
        }
    if with_code:
        data["code"] = canonical_code(w)
    return data


def web_from_json(data: dict | str) -> Web:
    if isinstance(data, str):
        data = json.loads(data)
    if "web" in data and "vertices" not in data:
        data = data["web"]
    try:
        kinds = [VertexKind(v["kind"]) for v in sorted(data["vertices"], key=lambda v: v["id"])]
        parts = WebParts(kinds=kinds, boundary=[int(b) for b in data["boundary"]])
        for e in data["edges"]:
            parts.add_edge(int(e["from"]), int(e["to"]))
        for v in range(len(kinds)):
            ends = []
            for e in data["rotations"].get(str(v), []):
                src, dst = parts.edges[e]
                if v not in (src, dst):
                    raise ValidationError(f"edge {e} listed at vertex {v}", code="BadWebJson")
                ends.append((e, 0 if src == v else 1))
            parts.rotation[v] = ends
        geo = data.get("geometry")
        if geo:
            parts.points = [Point(Fraction(x), Fraction(y), int(k)) for x, y, k in geo["points"]]
            parts.arcs = [None if a is None else (Fraction(a[0]), Fraction(a[1])) for a in geo["arcs"]]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"malformed web JSON: {exc!r}", code="BadWebJson") from exc
    w = parts.build()
    sign = data.get("sign")
    if sign is not None and SignString(sign) != boundary_signs(w):
        raise ValidationError(f"sign {sign!r} disagrees with vertex kinds", code="BadWebJson")
    return w
