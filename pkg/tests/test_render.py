import xml.etree.ElementTree as ET

import pytest

from figures import three_minus
from sl3webs.bijection import tableau_to_web
from sl3webs.errors import ValidationError
from sl3webs.mdiagram import build_m_diagram
from sl3webs.render import RenderSpec, render
from sl3webs.signs_tableaux import Tableau
from sl3webs.web import web_from_m_diagram

NS = "{http://www.w3.org/2000/svg}"


def classes(root, tag):
    return [e.get("class") for e in root.iter(NS + tag)]


def test_svg_counts():
    w = tableau_to_web(Tableau.parse("134/256/367"), "++-++-+")
    root = ET.fromstring(render(w, RenderSpec(label_depths=True)))
    circles = classes(root, "circle")
    assert circles.count("boundary source") == 5 and circles.count("boundary sink") == 2
    internal = [c for c in circles if c.startswith("internal")]
    assert len(internal) == len(w.kinds) - 7
    assert classes(root, "path").count("edge") == len(w.web_darts()) // 2
    texts = classes(root, "text")
    assert texts.count("sign") == 7 and texts.count("depth") == 8
    assert classes(root, "line") == ["wall"]


def test_svg_without_labels():
    w = web_from_m_diagram(build_m_diagram(Tableau.parse("13/25/46")))
    root = ET.fromstring(render(w, RenderSpec(label_signs=False)))
    assert classes(root, "text") == []


def test_scale_changes_size():
    w = tableau_to_web(Tableau.parse("112/234"), "--++")
    a = ET.fromstring(render(w, RenderSpec(scale=1)))
    b = ET.fromstring(render(w, RenderSpec(scale=2)))
    assert float(b.get("width")) == pytest.approx(2 * float(a.get("width")))


def test_tikz():
    w = web_from_m_diagram(build_m_diagram(Tableau.parse("13/25/46")))
    out = render(w, RenderSpec(format="tikz", label_depths=True))
    assert out.startswith("\\begin{tikzpicture}") and out.rstrip().endswith("\\end{tikzpicture}")
    assert out.count("% boundary +") == 6
    assert out.count("% edge") == len(w.web_darts()) // 2
    assert out.count("% wall") == 1


def test_errors():
    with pytest.raises(ValidationError):
        RenderSpec(format="png")
    with pytest.raises(ValidationError):
        RenderSpec(scale=-1)
    with pytest.raises(ValidationError) as exc:
        render(three_minus())
    assert exc.value.code == "MissingGeometry"
