import json

import pytest

from oracles import kostka, signs_of_weight
from sl3webs.bijection import (
    SweepConfig,
    VerificationReport,
    build_pipeline,
    promotion_lemma_holds,
    sweep,
    tau_pair_failures,
    verify_join,
    verify_rotation,
    verify_sign,
)
from sl3webs.errors import IndexOutOfRange
from sl3webs.signs_tableaux import SignString, Tableau, content_of_sign

T_ = Tableau.parse


def test_pipeline_fields():
    p = build_pipeline(T_("112/234"), "--++")
    assert str(p.standard) == "124/356"
    assert str(p.conjugate) == "13/25/46"
    assert str(p.web.signs) == "--++"
    assert len(p.full_web.boundary) == 6
    assert tau_pair_failures(p.conjugate, p.full_web) == []


@pytest.mark.parametrize("s", ["", "+++", "-+-+", "++-++-+", "--+--+", "+++---"])
def test_verify_sign_counts_match_kostka(s):
    r = verify_sign(s)
    assert r.success, r.table()
    n_rows = SignString(s).weight // 3
    want = kostka(content_of_sign(s), n_rows) if s else 1
    assert r.filling_count == r.web_count == want


def test_parallel_matches_serial():
    a = verify_sign("+++++++++", workers=1)
    b = verify_sign("+++++++++", workers=2, chunk_size=7)
    assert a.success and b.success
    assert (a.filling_count, a.web_count) == (b.filling_count, b.web_count) == (42, 42)
    assert a.codes == b.codes


def test_merge_detects_collisions_and_is_associative():
    x, y, z = (VerificationReport("s") for _ in range(3))
    x.codes, y.codes, z.codes = {"a": "T1"}, {"b": "T2"}, {"a": "T3"}
    for r in (x, y, z):
        r.filling_count = 1
    left = x.merge(y).merge(z)
    right = x.merge(y.merge(z))
    assert left.distinctness_collisions == right.distinctness_collisions == ["T1 and T3"]
    assert left.filling_count == right.filling_count == 3
    assert not left.success


def test_report_json_and_table():
    r = verify_sign("--++")
    data = r.to_json()
    assert data["success"] and data["filling_count"] == 2
    json.dumps(data)
    assert "PASS" in r.table()


def test_rotation_report():
    r = verify_rotation("-++++")
    assert r.success and r.filling_count == 3


def test_promotion_lemma_examples():
    assert promotion_lemma_holds(T_("113/245"), "-++++")
    assert promotion_lemma_holds(T_("134/256/367"), "++-++-+")


@pytest.mark.parametrize("s,t", [("+++", "+++"), ("-+", "+-"), ("---", "-+")])
def test_join_every_index(s, t):
    for i in range(len(s) + 1):
        r = verify_join(s, t, i)
        assert r.success, r.table()


def test_join_index_checked():
    with pytest.raises(IndexOutOfRange):
        verify_join("+++", "+++", 4)


def test_small_sweep():
    out = sweep(SweepConfig(max_weight=6, rotation_weight=6))
    assert all(r.success for reports in out.values() for r in reports)
    want = 1 + sum(kostka(content_of_sign(s), w // 3) for w in (3, 6) for s in signs_of_weight(w))
    assert sum(r.filling_count for r in out["bijection"]) == want == 37
    assert len(out["bijection"]) == 1 + 3 + 13
