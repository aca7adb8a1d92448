"""m-diagrams of three-row standard tableaux and their arc crossings.

Boundary points are numbered ``1..3n`` along a horizontal line; every arc is
a semicircle above it. Crossing abscissas are exact :class:`Fraction` values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidTableau, ValidationError
from .signs_tableaux import STANDARD, Tableau, TableauProblem, validate_tableau


class ArcKind(str, Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class Arc:
    left: int
    right: int
    kind: ArcKind

    @property
    def center(self) -> Fraction:
        return Fraction(self.left + self.right, 2)

    @property
    def radius(self) -> Fraction:
        return Fraction(self.right - self.left, 2)

    @property
    def middle(self) -> int:
        """Endpoint shared with the other arc of its m."""
        return self.right if self.kind is ArcKind.LEFT else self.left

    @property
    def outer_end(self) -> int:
        return self.left if self.kind is ArcKind.LEFT else self.right

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


@dataclass(frozen=True)
class MDiagram:
    size: int
    left_arcs: tuple[Arc, ...]
    right_arcs: tuple[Arc, ...]

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return self.left_arcs + self.right_arcs

    @property
    def middles(self) -> tuple[int, ...]:
        return tuple(sorted(a.right for a in self.left_arcs))

    def __str__(self) -> str:
        return "L:" + "".join(map(str, self.left_arcs)) + ";R:" + "".join(map(str, self.right_arcs))

    @classmethod
    def parse(cls, text: str) -> MDiagram:
        m = re.fullmatch(r"\s*L:((?:\(\d+,\d+\))*)\s*;\s*R:((?:\(\d+,\d+\))*)\s*", text)
        if not m:
            raise ValidationError(f"cannot read m-diagram {text!r}", code="BadMDiagramText")
        pairs = [[tuple(map(int, p)) for p in re.findall(r"\((\d+),(\d+)\)", g)] for g in m.groups()]
        return cls._from_pairs(*pairs)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "left": [[a.left, a.right] for a in self.left_arcs],
            "right": [[a.left, a.right] for a in self.right_arcs],
        }

    @classmethod
    def from_json(cls, data: dict) -> MDiagram:
        return cls._from_pairs(data["left"], data["right"], data.get("size"))

    @classmethod
    def _from_pairs(cls, left, right, size=None) -> MDiagram:
        lefts = tuple(Arc(int(a), int(b), ArcKind.LEFT) for a, b in left)
        rights = tuple(Arc(int(a), int(b), ArcKind.RIGHT) for a, b in right)
        if size is None:
            size = 3 * len(lefts)
        m = cls(int(size), lefts, rights)
        problems = validate_m_diagram(m)
        if problems:
            raise ValidationError("; ".join(problems), code="InvalidMDiagram")
        return m


def arcs_cross(p: Arc, q: Arc) -> bool:
    a, b, c, d = p.left, p.right, q.left, q.right
    return a < c < b < d or c < a < d < b


def validate_m_diagram(m: MDiagram) -> list[str]:
    problems = []
    if len(m.left_arcs) != len(m.right_arcs) or 3 * len(m.left_arcs) != m.size:
        problems.append(f"{len(m.left_arcs)} left and {len(m.right_arcs)} right arcs for {m.size} points")
    ends = []
    for a in m.arcs:
        if not 1 <= a.left < a.right <= m.size:
            problems.append(f"arc {a} out of order or range")
        ends += [a.left, a.right]
    lmid = sorted(a.right for a in m.left_arcs)
    rmid = sorted(a.left for a in m.right_arcs)
    if lmid != rmid:
        problems.append(f"left arcs end at {lmid} but right arcs start at {rmid}")
    counts = {p: ends.count(p) for p in range(1, m.size + 1)}
    for p, k in counts.items():
        want = 2 if p in lmid else 1
        if k != want:
            problems.append(f"point {p} is an endpoint of {k} arcs")
    for group in (m.left_arcs, m.right_arcs):
        for i, p in enumerate(group):
            for q in group[i + 1:]:
                if arcs_cross(p, q):
                    problems.append(f"arcs {p} and {q} of the same side cross")
    return problems


def build_m_diagram(T: Tableau) -> MDiagram:
    """Left arcs join each middle-row entry to the nearest free top-row entry on
    its left; right arcs join each bottom-row entry to the nearest middle-row
    entry on its left that has no right arc yet."""
    if not T.rows:
        return MDiagram(0, (), ())
    problems = validate_tableau(T, STANDARD)
    if T.n_rows != 3:
        problems.append(TableauProblem("WrongShape", f"m-diagrams need three rows, got {T.n_rows}"))
    if problems:
        raise InvalidTableau(problems, code="NotStandard" if T.n_rows == 3 else "WrongShape")
    top, middle, bottom = (sorted(r) for r in T.rows)
    left = _nearest_free_matching(top, middle, ArcKind.LEFT)
    right = _nearest_free_matching(middle, bottom, ArcKind.RIGHT)
    return MDiagram(len(T), left, right)


def _nearest_free_matching(earlier: list[int], later: list[int], kind: ArcKind) -> tuple[Arc, ...]:
    free: list[int] = []
    arcs = []
    events = sorted([(v, 0) for v in earlier] + [(v, 1) for v in later])
    for v, is_later in events:
        if not is_later:
            free.append(v)
            continue
        if not free:
            raise InvalidTableau([TableauProblem("NotStandard", f"no partner left of {v}")])
        arcs.append(Arc(free.pop(), v, kind))
    return tuple(arcs)


@dataclass(frozen=True)
class Crossing:
    left_arc: Arc
    right_arc: Arc
    x: Fraction

    @property
    def height_squared(self) -> Fraction:
        a = self.left_arc
        return a.radius ** 2 - (self.x - a.center) ** 2

    @property
    def upper_on_left(self) -> Arc:
        """The arc lying above the other just left of the crossing point."""
        if self.left_arc.left < self.right_arc.left:
            return self.left_arc
        return self.right_arc


@dataclass(frozen=True)
class CrossingArrangement:
    crossings: tuple[Crossing, ...]
    along: dict[Arc, tuple[Crossing, ...]]

    def __len__(self) -> int:
        return len(self.crossings)


def crossing_abscissa(p: Arc, q: Arc) -> Fraction:
    m1, r1, m2, r2 = p.center, p.radius, q.center, q.radius
    return (r1 ** 2 - r2 ** 2 - m1 ** 2 + m2 ** 2) / (2 * (m2 - m1))


def crossings(m: MDiagram) -> CrossingArrangement:
    """All left/right arc crossings.

    ``along[arc]`` lists the crossings on an arc in the order met when walking
    from its outer endpoint toward the middle of its m.
    """
    found = []
    along: dict[Arc, list[Crossing]] = {a: [] for a in m.arcs}
    for p in m.left_arcs:
        for q in m.right_arcs:
            if arcs_cross(p, q):
                cr = Crossing(p, q, crossing_abscissa(p, q))
                found.append(cr)
                along[p].append(cr)
                along[q].append(cr)
    for arc, lst in along.items():
        lst.sort(key=lambda cr: cr.x, reverse=arc.kind is ArcKind.RIGHT)
    found.sort(key=lambda cr: (cr.x, cr.left_arc.left))
    return CrossingArrangement(tuple(found), {a: tuple(v) for a, v in along.items()})
