"""Property tests over random sign strings and fillings."""

from functools import lru_cache

from hypothesis import given, settings
from hypothesis import strategies as st

from structural import structural_failures
from sl3webs.bijection import build_pipeline, promotion_lemma_holds, tableau_to_web
from sl3webs.mdiagram import build_m_diagram, crossings
from sl3webs.signs_tableaux import (
    SignString,
    Tableau,
    conjugate,
    enumerate_fillings,
    jdt_promote,
    shuffle,
    shuffled_sign,
    sign_strings,
    standardize,
    tau_set,
    validate_tableau,
)
from sl3webs.web import canonical_code, join, rotate, web_from_json, web_to_json, web_to_tableau


@lru_cache(maxsize=None)
def fillings(s: str) -> tuple[Tableau, ...]:
    return tuple(enumerate_fillings(s))


def signs(max_weight=12, min_weight=3):
    pool = [s for w in range(min_weight, max_weight + 1, 3) for s in sign_strings(w)]
    return st.sampled_from(pool)


@st.composite
def filled(draw, max_weight=12, min_weight=3):
    s = draw(signs(max_weight, min_weight))
    T = draw(st.sampled_from(fillings(s)))
    return s, T


@given(filled())
def test_round_trip(pair):
    s, T = pair
    w = tableau_to_web(T, s)
    assert str(w.signs) == s
    assert web_to_tableau(w) == T


@given(filled())
def test_structure(pair):
    s, T = pair
    assert structural_failures(T, s) == []


@given(filled())
def test_standardization(pair):
    s, T = pair
    std, pm = standardize(T, s)
    assert validate_tableau(std, "standard") == []
    assert pm.unstandardize(std) == T
    # a doubled value's labels always form a τ-pair of the three-row form
    taus = tau_set(conjugate(std))
    assert all(pair in taus for pair in pm.minus_pairs.values())


@given(filled(max_weight=9))
def test_rotation_commutes_with_promotion(pair):
    s, T = pair
    s = SignString(s)
    w = tableau_to_web(T, s)
    assert canonical_code(rotate(w)) == canonical_code(tableau_to_web(jdt_promote(T), s.rotated()))
    assert promotion_lemma_holds(T, s)


@given(filled(max_weight=9))
def test_promotion_has_full_order(pair):
    s, T = pair
    U = T
    for _ in range(len(s)):
        U = jdt_promote(U)
    assert U == T


@settings(max_examples=60)
@given(filled(max_weight=6), filled(max_weight=6), st.data())
def test_join_matches_shuffle(a, b, data):
    (s, T), (t, Tp) = a, b
    i = data.draw(st.integers(0, len(s)))
    joined = join(tableau_to_web(T, s), tableau_to_web(Tp, t), i)
    mixed = shuffle(Tp, T, i)
    assert canonical_code(joined) == canonical_code(tableau_to_web(mixed, shuffled_sign(s, t, i)))


@given(filled())
def test_json_and_text_roundtrip(pair):
    s, T = pair
    assert Tableau.parse(str(T)) == T
    w = build_pipeline(T, s).web
    assert web_from_json(web_to_json(w)) == w


@given(filled())
def test_crossing_points_exact(pair):
    s, T = pair
    m = build_pipeline(T, s).m_diagram
    for c in crossings(m).crossings:
        for arc in (c.left_arc, c.right_arc):
            assert (c.x - arc.center) ** 2 + c.height_squared == arc.radius ** 2
    assert build_m_diagram(conjugate(standardize(T, s)[0])) == m
