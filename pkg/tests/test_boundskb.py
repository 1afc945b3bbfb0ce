import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from x0gonality import boundskb as kb
from x0gonality.curve import load_curve

from conftest import shipped_labels


@pytest.fixture(scope="module")
def shipped():
    base = kb.load_default_kb(400)
    return base, kb.propagate(base)


@pytest.fixture(scope="module")
def expected():
    return kb.load_expected_table(kb.expected_table_path())


def rec(subject, kind, value, field="Q", citation="test"):
    return {"subject": subject, "field": field, "kind": kind, "value": value, "citation": citation}


# --- arithmetic invariants

def test_invariants_38():
    inv = kb.arithmetic_invariants(38)
    assert (inv.psi, inv.omega, inv.genus) == (60, 2, 4)


def test_invariants_small():
    assert kb.arithmetic_invariants(1).genus == 0
    assert kb.arithmetic_invariants(97).genus == 7
    assert kb.arithmetic_invariants(11).genus == 1


def test_genus_matches_fixtures():
    # fixture genera come from dimensions of cusp form spaces
    for label in shipped_labels():
        N = kb.x0_level(label)
        if N is not None:
            assert kb.arithmetic_invariants(N).genus == load_curve(label).genus


@given(st.integers(1, 2000))
def test_genus_formula_integral(N):
    inv = kb.arithmetic_invariants(N)
    assert inv.genus >= 0
    assert 12 * inv.genus == 12 + inv.psi - 3 * inv.nu2 - 4 * inv.nu3 - 6 * inv.nu_inf


def test_ogg_bound():
    assert kb.ogg_bound(38, 5) == Fraction(24)
    with pytest.raises(ValueError):
        kb.ogg_bound(38, 2)
    with pytest.raises(ValueError):
        kb.ogg_bound(38, 9)


def test_ogg_filter_examples():
    got = set(kb.ogg_gonality_filter(range(195, 341), 6))
    assert {220, 222, 224, 225, 226} <= got
    assert 215 not in got
    assert set(range(336, 341)) <= got
    assert kb.ogg_gonality_filter([1], 1) == []


# --- fact ingestion

def test_hyperelliptic_fact():
    facts = kb.parse_facts([rec("X0(59)", "is_hyperelliptic", True, citation="Ogg 1974")])
    q, c = kb.propagate(kb.KnowledgeBase(facts))["X0(59)"]
    assert (q.lb, q.ub) == (2, 2)
    assert q.lb_provenance.source == "Ogg 1974"


def test_quotient_genus_gives_upper_bound():
    facts = kb.parse_facts([rec("X0(97)/w97", "genus", 3)])
    q, _ = kb.propagate(kb.KnowledgeBase(facts))["X0(97)/w97"]
    assert q.ub == 3


def test_missing_citation_rejected():
    bad = rec("X0(59)", "is_hyperelliptic", True)
    del bad["citation"]
    with pytest.raises(kb.FactError):
        kb.parse_facts([bad])


@pytest.mark.parametrize("mutation", [
    {"field": "R"}, {"kind": "is_bielliptic"}, {"value": 0}, {"subject": ""},
])
def test_schema_rejections(mutation):
    r = rec("X0(59)", "gonality_lb", 2)
    r.update(mutation)
    with pytest.raises(kb.FactError):
        kb.parse_facts([r])


def test_computed_provenance_accepted(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps([{"subject": "X0(38)", "field": "F5", "kind": "gonality_lb", "value": 4,
                                 "computed": {"op": "fp_gonality", "params": {"p": 5}}}]))
    (f,) = kb.ingest_facts(path)
    assert f.provenance.kind == "computed"


def test_contradiction_reports_both_chains():
    facts = kb.parse_facts([rec("X0(59)", "gonality_lb", 5, citation="first"),
                            rec("X0(59)", "gonality_ub", 4, citation="second")])
    with pytest.raises(kb.KBInconsistent) as exc:
        kb.propagate(kb.KnowledgeBase(facts))
    assert "first" in str(exc.value) and "second" in str(exc.value)


# --- propagation

def test_row_38(shipped):
    q, _ = shipped[1]["X0(38)"]
    assert (q.lb, q.ub) == (4, 4)
    assert q.lb_provenance.source == "R3" and q.ub_provenance.source == "R10"
    assert any(leaf.kind == "computed" for leaf in q.lb_provenance.leaves())


def test_row_97(shipped):
    q, _ = shipped[1]["X0(97)"]
    assert (q.lb, q.ub) == (6, 6)
    assert q.lb_provenance.source == "R12" and q.ub_provenance.source == "R7"


def test_row_164(shipped):
    q, c = shipped[1]["X0(164)"]
    assert (q.lb, q.ub) == (6, 6)


def test_row_212_not_hexagonal(shipped):
    q, _ = shipped[1]["X0(212)"]
    assert q.lb >= 8
    assert q.lb_provenance.source == "R6"
    assert "X0(106)" in q.lb_provenance.detail


def test_row_82_complex_interval(shipped):
    _, c = shipped[1]["X0(82)"]
    assert c.text() == "[5,6]"


def _walk(prov):
    yield prov
    for p in prov.premises:
        yield from _walk(p)


def test_r5_hypotheses_recheck(shipped):
    seen = 0
    for q, c in shipped[1].values():
        for iv in (q, c):
            for node in _walk(iv.lb_provenance):
                if node.source == "R5":
                    seen += 1
                    assert kb.r5_hypotheses_hold(node.detail), node.detail
    assert seen > 0
    assert not kb.r5_hypotheses_hold("g(X) - 2g(Y) = 3 >= 5, gon(Y) >= 2 > 2")


def test_intervals_are_ordered(shipped):
    for q, c in shipped[1].values():
        for iv in (q, c):
            assert iv.ub is None or iv.lb <= iv.ub
        assert c.lb <= q.lb
        if q.ub is not None:
            assert c.ub is not None and c.ub <= q.ub


def test_chains_serialise(shipped):
    q, _ = shipped[1]["X0(97)"]
    d = q.as_dict()
    assert d["lb"] == 6 and d["lb_provenance"]["source"] == "R12"
    json.dumps(d)


def test_monotone_under_fact_removal(shipped):
    base, full = shipped
    rng = random.Random(7)
    for i in sorted(rng.sample(range(len(base.facts)), 12)):
        smaller = kb.propagate(base.without(i))
        for s, (q, c) in smaller.items():
            if s not in full:
                continue
            fq, fc = full[s]
            for a, b in ((q, fq), (c, fc)):
                assert a.lb <= b.lb
                assert a.ub is None or (b.ub is not None and a.ub >= b.ub)


def test_deterministic(shipped):
    base, full = shipped
    again = kb.propagate(kb.load_default_kb(400))
    for s in full:
        assert full[s][0].as_dict() == again[s][0].as_dict()


# --- table comparison

def test_table_reproduction(shipped, expected):
    rep = kb.check_against_table(shipped[1], expected, 144)
    assert rep.q_mismatches == [] and rep.c_mismatches == []
    assert rep.count("Q", "match") == 144


def test_empty_results_every_row_open(expected):
    rep = kb.check_against_table({}, expected, 144)
    assert rep.count("Q", "open") == rep.count("C", "open") == len(rep.rows) == 144


def test_empty_kb_closes_only_what_invariants_decide(expected):
    res = kb.propagate(kb.KnowledgeBase([], 144))
    rep = kb.check_against_table(res, expected, 144)
    assert rep.consistent and rep.count("Q", "open") == 107
    closed = [r["N"] for r in rep.rows if r["Q"] == "match"]
    # beyond genus 2, only X0(72) (over the elliptic X0(36)) and X0(100) (Ogg at p = 3) close
    assert [N for N in closed if kb.arithmetic_invariants(N).genus >= 3] == [72, 100]
    for N in closed:
        q, _ = res[kb.x0_label(N)]
        for leaf in q.lb_provenance.leaves() + (q.ub_provenance.leaves() if q.ub_provenance else []):
            assert leaf.kind in ("computed", "derived", "trivial")
            assert leaf.kind != "computed" or leaf.source == "arithmetic_invariants"


def test_compare_statuses():
    iv = lambda lo, hi: kb.BoundInterval("X", "Q", lo, hi, kb.TRIVIAL, None)
    assert kb._compare(iv(5, 6), (5, 6)) == "match"
    assert kb._compare(iv(4, None), (5, 6)) == "open"
    assert kb._compare(iv(6, 6), (5, 6)) == "sharper"
    assert kb._compare(iv(7, 7), (5, 6)) == "mismatch"


def test_genus_typos_flagged(shipped, expected):
    rep = kb.check_against_table(shipped[1], expected, 144)
    assert rep.genus_mismatches == [83, 111]
