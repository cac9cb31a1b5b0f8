import json

import pytest
from hypothesis import given

from efdepth import graph as g
from efdepth.cert import (
    BoundCertificate, certify_lower, certify_upper, general_lower_bound, search_pair, verify_certificate,
)
from efdepth.formats import decode_graph6
from efdepth.instances import gen_paper_instance, paw
from efdepth.iso import all_graphs_up_to, enumerate_up_to_iso
from efdepth.logic import parse, synth_thm11, synth_trivial

from .strategies import graphs

P3_SENTENCE = "Ex1.Ex2.Ex3.(x1~x2 & x2~x3 & !(x1~x3) & !(x1=x3))"


@pytest.mark.parametrize("F, complement, real, integer", [
    (g.complete(5), False, 5.0, 5),
    (g.cycle(5), False, 3.0, 3),
    (paw(), False, 3.0, 3),
    (g.union(g.cycle(4), g.empty(1)), True, 3.2, 4),
    (g.complete_multipartite([1, 1, 2]), False, 3.25, 4),
    (g.empty(1), False, 3.0, 3),
])
def test_general_lower_bound(F, complement, real, integer):
    got = general_lower_bound(F, complement)
    assert got[1] == integer
    assert got[0] == pytest.approx(real)


@given(graphs(min_n=1, max_n=7))
def test_bound_symmetric_under_complement(F):
    assert general_lower_bound(F, True) == general_lower_bound(g.complement(F), True)
    assert general_lower_bound(F, True)[1] >= general_lower_bound(F)[1]


def test_bound_needs_a_vertex():
    with pytest.raises(ValueError):
        general_lower_bound(g.empty(0))


def test_five_vertex_graphs_away_from_five_edges():
    for F in enumerate_up_to_iso(5):
        if F.num_edges != 5:
            assert general_lower_bound(F, True)[1] >= 4


def test_certify_lower_examples():
    b = gen_paper_instance("thm2", 1, 2, (2, 2))
    cert = certify_lower(b.F, b.G, b.H, 3)
    assert cert.verified and cert.claimed_bound == 4 and cert.reasons == []
    cert = certify_lower(g.cycle(5), g.union(g.cycle(5), g.cycle(6)), g.copies(2, g.cycle(6)), 3)
    assert cert.verified and cert.claimed_bound == 4
    cert = certify_lower(g.complete(2), g.complete(2), g.complete(2), 1)
    assert not cert.verified and cert.reasons == ["F-in-H"]


def test_certify_lower_reasons():
    cert = certify_lower(g.complete(3), g.complete(2), g.empty(2), 2)
    assert set(cert.reasons) == {"F-not-in-G", "Spoiler-wins"}
    b = gen_paper_instance("thm3_c5")
    cert = certify_lower(b.F, b.G, b.H, 3, budget=2)
    assert cert.reasons == ["solver-budget-exceeded"]


def test_certify_upper_examples():
    cert = certify_upper(g.path(3), parse(P3_SENTENCE), 6)
    assert cert.verified and cert.depth == 3 and cert.counterexample is None
    cert = certify_upper(g.union(g.path(3), g.empty(1)), synth_thm11(g.empty(0)), 6)
    assert cert.verified and cert.depth == 3
    cert = certify_upper(g.complete(3), synth_trivial(g.complete(2)), 6)
    bad = cert.counterexample
    assert not cert.verified
    assert bad.num_edges > 0 and not g.contains_induced(bad, g.complete(3))[0]


def test_certify_upper_limits():
    with pytest.raises(ValueError):
        certify_upper(g.path(3), parse(P3_SENTENCE), 8)
    with pytest.raises(ValueError):
        certify_upper(g.path(3), parse("x~x", free=("x",)), 3)


def test_trivial_sentences_certify_for_all_four_vertex_patterns():
    pats = list(all_graphs_up_to(4))[1:]
    assert len(pats) == 1 + 2 + 4 + 11
    for F in pats:
        cert = certify_upper(F, synth_trivial(F), 6)
        assert cert.verified and cert.depth == F.n


def test_sandwich_for_smallest_pattern():
    b = gen_paper_instance("thm1_2", 1)
    lower = certify_lower(b.F, b.G, b.H, 2)
    upper = certify_upper(b.F, synth_thm11(g.empty(0)), 6)
    assert lower.verified and upper.verified
    assert lower.claimed_bound == upper.depth == 3


def test_json_round_trip_and_reverify(tmp_path):
    b = gen_paper_instance("thm3_g41")
    cert = certify_lower(b.F, b.G, b.H, 3)
    data = json.loads(cert.to_json())
    assert set(data) == {"kind", "pattern", "left", "right", "rounds", "claimed_bound", "verified", "tool_version"}
    again = BoundCertificate.from_json(cert.to_json())
    assert again == cert
    assert verify_certificate(again).verified
    assert decode_graph6(data["left"]) == b.G


def test_tampered_certificates_fail():
    b = gen_paper_instance("thm3_c5")
    cert = certify_lower(b.F, b.G, b.H, 3)
    cert.rounds = 4
    cert.claimed_bound = 5
    assert verify_certificate(cert).reasons == ["Spoiler-wins"]
    up = certify_upper(g.path(3), parse(P3_SENTENCE), 5)
    up.depth = 2
    assert not verify_certificate(up).verified
    with pytest.raises(ValueError):
        BoundCertificate.from_json('{"kind": "lower", "pattern": "@", "verified": true, "extra": 1}')


def test_search_pair_examples():
    res = search_pair(g.empty(1), 1, 4)
    assert res.certificate is None and not res.budget_exhausted
    res = search_pair(g.complete(2), 1, 3)
    G, H = decode_graph6(res.certificate.left), decode_graph6(res.certificate.right)
    assert res.certificate.verified and H.num_edges == 0 and G.num_edges > 0
    F = g.union(g.path(3), g.empty(1))
    res = search_pair(F, 2, 6)
    assert res.certificate.verified and res.certificate.claimed_bound == 3
    assert search_pair(F, 2, 6) == res


def test_search_pair_budget():
    res = search_pair(g.union(g.path(3), g.empty(1)), 2, 6, budget=5)
    assert res.certificate is None and res.budget_exhausted and res.games_solved == 5
