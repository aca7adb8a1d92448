from fractions import Fraction

import pytest

from oracles import noncrossing_matchings, standard_three_row
from sl3webs.errors import InvalidTableau, ValidationError
from sl3webs.mdiagram import (
    Arc,
    ArcKind,
    MDiagram,
    arcs_cross,
    build_m_diagram,
    crossing_abscissa,
    crossings,
    validate_m_diagram,
)
from sl3webs.signs_tableaux import Tableau

T_ = Tableau.parse


def pairs(arcs):
    return sorted((a.left, a.right) for a in arcs)


def test_worked_example():
    m = build_m_diagram(T_("123/467/589"))
    assert pairs(m.left_arcs) == [(1, 7), (2, 6), (3, 4)]
    assert pairs(m.right_arcs) == [(4, 5), (6, 9), (7, 8)]
    assert m.middles == (4, 6, 7)


def test_six_point_example():
    m = build_m_diagram(T_("13/25/46"))
    assert pairs(m.left_arcs) == [(1, 2), (3, 5)]
    assert pairs(m.right_arcs) == [(2, 4), (5, 6)]
    cr = crossings(m)
    assert len(cr) == 1
    (c,) = cr.crossings
    assert (c.left_arc.left, c.right_arc.left) == (3, 2)
    assert c.upper_on_left == c.right_arc


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_arcs_are_the_unique_noncrossing_matchings(n):
    for T in standard_three_row(n):
        top, mid, bot = (list(r) for r in T.rows)
        m = build_m_diagram(T)
        left = noncrossing_matchings(top, mid)
        right = noncrossing_matchings(mid, bot)
        assert left == [pairs(m.left_arcs)], str(T)
        assert right == [pairs(m.right_arcs)], str(T)
        assert validate_m_diagram(m) == []


@pytest.mark.parametrize("n", [2, 3, 4])
def test_crossings_lie_on_both_circles(n):
    for T in standard_three_row(n):
        m = build_m_diagram(T)
        arr = crossings(m)
        expected = sum(arcs_cross(p, q) for p in m.left_arcs for q in m.right_arcs)
        assert len(arr) == expected
        for c in arr.crossings:
            for arc in (c.left_arc, c.right_arc):
                assert (c.x - arc.center) ** 2 + c.height_squared == arc.radius ** 2
            assert 0 < c.height_squared
            assert max(c.left_arc.left, c.right_arc.left) < c.x < min(c.left_arc.right, c.right_arc.right)


def test_crossings_ordered_from_outer_end():
    m = build_m_diagram(T_("123/456/789"))
    arr = crossings(m)
    for arc, seq in arr.along.items():
        xs = [c.x for c in seq]
        assert xs == sorted(xs, reverse=arc.kind is ArcKind.RIGHT)


def test_abscissa_is_exact():
    p, q = Arc(1, 4, ArcKind.LEFT), Arc(2, 5, ArcKind.RIGHT)
    x = crossing_abscissa(p, q)
    assert isinstance(x, Fraction) and x == Fraction(3)


def test_arcs_cross_cases():
    a = Arc(1, 4, ArcKind.LEFT)
    assert arcs_cross(a, Arc(2, 6, ArcKind.RIGHT))
    assert not arcs_cross(a, Arc(2, 3, ArcKind.RIGHT))
    assert not arcs_cross(a, Arc(4, 6, ArcKind.RIGHT))


def test_text_and_json_roundtrip():
    m = build_m_diagram(T_("123/467/589"))
    assert MDiagram.parse(str(m)) == m
    assert MDiagram.from_json(m.to_json()) == m


def test_parse_rejects_bad_diagrams():
    with pytest.raises(ValidationError):
        MDiagram.parse("nonsense")
    with pytest.raises(ValidationError) as exc:
        MDiagram.parse("L:(1,3)(2,4);R:(3,5)(4,6)")
    assert exc.value.code == "InvalidMDiagram"


def test_input_errors():
    with pytest.raises(InvalidTableau) as exc:
        build_m_diagram(T_("12/34"))
    assert exc.value.code == "WrongShape"
    with pytest.raises(InvalidTableau) as exc:
        build_m_diagram(T_("12/43/56"))
    assert exc.value.code == "NotStandard"


def test_empty():
    assert build_m_diagram(Tableau(())) == MDiagram(0, (), ())
