import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schargraph.core import (IntersectionPair, PairError, bridge_width, edge_set_between,
                             mutate_swap, subgraph_labels, validate_pair)
from schargraph import fixtures


def test_fixture_json_round_trip(greatweb):
    again = IntersectionPair.from_json(json.loads(json.dumps(greatweb.to_json())))
    assert again == greatweb
    assert again.to_json() == greatweb.to_json()


def test_shipped_pair_fixtures_validate():
    for f in fixtures.catalog():
        if f.format != "pair":
            continue
        rep = validate_pair(fixtures.load_pair(f.name))
        assert rep.ok == (f.name != "broken"), (f.name, rep.codes)


def test_broken_fixture_reports_parity():
    rep = validate_pair(fixtures.load_pair("broken"))
    assert "PARITY_VIOLATION" in rep.codes


def test_malformed_json_raises():
    with pytest.raises(PairError) as exc:
        IntersectionPair.from_json({"p": 2})
    assert exc.value.code == "MALFORMED"


def test_odd_counts_are_malformed():
    pair = IntersectionPair.build(3, 2, "+-+", "+-", [])
    assert validate_pair(pair).codes == ["MALFORMED"]


def test_sign_imbalance_and_coverage():
    pair = IntersectionPair.build(2, 2, "++", "+-", [((1, 1), (2, 2))])
    codes = validate_pair(pair).codes
    assert "SIGN_IMBALANCE" in codes
    assert "SLOT_COVERAGE" in codes


def test_character_rule(p2q2):
    # char = parity(label) * sign(vertex)
    for v in (1, 2):
        for x in (1, 2):
            assert p2q2.char("P", x, v) == p2q2.sign("Q", x) * p2q2.sign("P", v)


def test_subgraph_of_one_label(p2q2):
    g = subgraph_labels(p2q2, "P", [1])
    assert len(g.edge_ids) == 2
    assert g.exceptional == {1: [2], 2: [2]}


def test_subgraph_needs_labels(p2q2):
    with pytest.raises(PairError):
        subgraph_labels(p2q2, "P", [])


def test_greatweb_bigon_edges_between_2_and_4(greatweb):
    edges = edge_set_between(greatweb, "Q", {2, 4}, {2, 4})
    view = greatweb.view("Q")
    ends = {frozenset((view.edge(e)[0][0], view.edge(e)[1][0])) for e in edges}
    assert ends == {frozenset({2, 4})}
    assert len(edges) >= 2


def test_views_on_both_sides_share_edge_ids(greatweb):
    for e, (a, b) in enumerate(greatweb.edges("P")):
        qa, qb = greatweb.edges("Q")[e]
        assert (qa, qb) == ((a[1], a[0]), (b[1], b[0]))


@pytest.mark.parametrize("b,w", [(1, 2), (2, 8), (3, 18), (5, 50)])
def test_bridge_width(b, w):
    assert bridge_width(b) == w


@given(st.integers(1, 60))
def test_bridge_width_closed_form(b):
    assert bridge_width(b) == 2 * b * b


def test_bridge_width_rejects_zero():
    with pytest.raises(ValueError):
        bridge_width(0)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_slot_swaps_that_break_parity_are_rejected(greatweb, data):
    n = len(greatweb.matching)
    e1 = data.draw(st.integers(0, n - 1))
    e2 = data.draw(st.integers(0, n - 1))
    end1, end2 = data.draw(st.integers(0, 1)), data.draw(st.integers(0, 1))
    m = mutate_swap(greatweb, e1, e2, end1, end2)
    broken = any(m.char("P", a[1], a[0]) == m.char("P", b[1], b[0]) for a, b in m.matching)
    if broken:
        assert not validate_pair(m).ok
