"""Structural properties every constructed web must have."""

from __future__ import annotations

from sl3webs.bijection import build_pipeline
from sl3webs.signs_tableaux import Tableau
from sl3webs.web import Web, canonical_code, depth_map, euler_characteristic, validate_web, web_from_json, web_to_json


def wall_path_problems(w: Web) -> list[str]:
    """The wall must be the path b1 - b2 - ... - bm and touch nothing else."""
    out = []
    m = len(w.boundary)
    pairs = set()
    for d in range(w.n_darts):
        if w.wall[d]:
            a, b = w.vertex[d], w.head(d)
            if a not in w.boundary or b not in w.boundary:
                out.append(f"wall dart {d} leaves the boundary")
                continue
            pairs.add(frozenset((w.boundary.index(a), w.boundary.index(b))))
    want = {frozenset((k, k + 1)) for k in range(m - 1)}
    if pairs != want:
        out.append(f"wall joins {sorted(map(sorted, pairs))}")
    if sum(w.wall) != 2 * max(m - 1, 0):
        out.append(f"{sum(w.wall)} wall darts for {m} boundary vertices")
    return out


def depth_jumps(w: Web) -> list[str]:
    """Faces on the two sides of a web edge differ in depth by at most one."""
    dm = depth_map(w)
    out = []
    for f, g in dm.table.edge_faces(w):
        if abs(dm.depth[f] - dm.depth[g]) > 1:
            out.append(f"faces {f}, {g} at depths {dm.depth[f]}, {dm.depth[g]}")
    if any(d < 0 for d in dm.depth):
        out.append("unreachable face")
    return out


def structural_failures(T: Tableau, s: str) -> list[str]:
    first = build_pipeline(T, s)
    second = build_pipeline(Tableau.parse(str(T)), str(s))
    out = []
    for w in (first.full_web, first.web):
        # the empty web has no vertex to anchor the formula: 0 - 0 + 1
        if w.kinds and euler_characteristic(w) != 2:
            out.append(f"Euler characteristic {euler_characteristic(w)}")
        out += wall_path_problems(w) + depth_jumps(w)
        out += [str(p) for p in validate_web(w)]
    code = canonical_code(first.web)
    if code != canonical_code(second.web):
        out.append("canonical code differs between two builds")
    if code != canonical_code(web_from_json(web_to_json(first.web))):
        out.append("canonical code changes through JSON")
    return [f"{T} {s}: {msg}" for msg in out]
