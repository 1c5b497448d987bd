import pytest

from schargraph import fixtures
from schargraph.core import PairError
from schargraph.cycles import (_directed_cycle, all_x_cycles, check_properties, cycle_sides,
                               descend_to_s_disk, find_great_webs, find_s_sets, isolated_vertices,
                               s_set, scharlemann_consistency, scharlemann_cycles,
                               trees_or_cycles, web_number_check)


@pytest.fixture(scope="module")
def qview(greatweb):
    return greatweb.view("Q")


def test_greatweb_scharlemann_cycle_on_2_4(qview):
    sch = scharlemann_cycles(qview)
    assert any(set(c.vertices) == {2, 4} for c in sch)
    assert all(c.order == 2 and c.labels == (1, 2) for c in sch)


def test_greatweb_scharlemann_labels_are_consecutive(qview):
    for c in scharlemann_cycles(qview):
        a, b = c.labels
        assert b == a + 1


def test_greatweb_new_cycle_on_1_3(qview):
    new = [c for c in all_x_cycles(qview) if c.new and set(c.vertices) == {1, 3}]
    assert new and new[0].great


def test_greatweb_is_consistent(qview):
    assert scharlemann_consistency(qview)["status"] == "CONSISTENT"


def test_greatweb_web_and_innermost_set(greatweb, qview):
    webs = find_great_webs(qview, greatweb.p - 2)
    assert frozenset({2, 4, 6, 8}) in {w.vertices for w in webs}
    ss = s_set(qview, {2, 4, 6, 8})
    assert ss.innermost and ss.sign == 1


def test_descent_from_sigma_reaches_2468(qview):
    sigma = next(c for c in all_x_cycles(qview) if c.new and set(c.vertices) == {1, 3})
    sides = cycle_sides(qview, sigma.edges)
    results = set()
    for i in range(len(sides)):
        try:
            results.add(descend_to_s_disk(qview, sigma.edges, i).s_set.vertices)
        except PairError:
            pass
    assert frozenset({2, 4, 6, 8}) in results


def test_greatweb_no_isolated_vertices(qview):
    assert isolated_vertices(qview) == []


def test_bigon_fixture_has_order_two_cycle():
    view = fixtures.load_pair("bigon").view("Q")
    two = [c for c in scharlemann_cycles(view) if c.order == 2]
    assert two and two[0].labels == (2, 3)
    # the bigon side is an empty disk
    assert any(not f.inner_vertices for f in cycle_sides(view, two[0].edges))


def test_order_clash_is_flagged():
    res = scharlemann_consistency(fixtures.load_pair("order-clash").view("Q"))
    assert res["status"] == "FLAG_NONREALIZABLE"
    assert res["flags"][0]["code"] == "SCH_UNIQUE"


def test_isolated_fixture_has_one_isolated_vertex():
    assert len(isolated_vertices(fixtures.load_pair("isolated-vertex").view("Q"))) == 1


def test_bipartite_fixture_all_isolated():
    view = fixtures.load_pair("bipartite").view("Q")
    assert isolated_vertices(view) == view.vertices


def test_s_set_rejects_mixed_signs(qview):
    with pytest.raises(PairError) as exc:
        s_set(qview, {1, 2})
    assert exc.value.code == "NOT_UNIFORM"


@pytest.mark.parametrize("n,v,flags", [
    (2, 4, {"divides": True, "proper": True, "min_ok": True}),
    (2, 2, {"divides": True, "proper": False, "min_ok": False}),
    (3, 4, {"divides": False, "proper": True, "min_ok": True}),
])
def test_web_number_check(n, v, flags):
    assert web_number_check(n, v) == flags


def test_directed_triangle_gives_cycle():
    arcs = [(0, 1, 2), (1, 2, 3), (2, 3, 1), (3, 3, 4)]
    cyc = _directed_cycle(arcs)
    assert {a[0] for a in cyc} == {0, 1, 2}


def test_directed_path_has_no_cycle():
    assert _directed_cycle([(0, 1, 2), (1, 2, 3)]) == ()


def test_trees_or_cycles_partition_the_edges(greatweb):
    qv = greatweb.view("Q")
    for s in find_s_sets(qv):
        if not s.innermost:
            continue
        W = {v for v in qv.vertices if v not in s.vertices}
        comps = trees_or_cycles(greatweb, s.vertices, W)
        edges = [e for c in comps for e in c.edges]
        assert len(edges) == len({e[0] for e in edges})
        for c in comps:
            assert c.kind in ("tree", "cycle", "other")


def test_property_duality(small_corpus):
    for pair in small_corpus[:40]:
        V = set(range(1, pair.p + 1))
        L = set(range(1, pair.q + 1))
        assert check_properties(pair, "P", V, L)["duality"]
