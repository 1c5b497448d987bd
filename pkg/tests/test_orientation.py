import itertools

import pytest

from schargraph import fixtures
from schargraph.embedding import PlaneMap
from schargraph.harness import star_family
from schargraph.orientation import (SWITCH, DirectedMap, OrientationError, build_rf,
                                    check_two_color, classify_edges, directed_index_census,
                                    dual_graph, find_representing_faces, induce_orientation,
                                    reverse_faces, two_color, vertex_star)
from schargraph.signs import IN, OUT
from schargraph.stars import Star, StarError


def _spider():
    rotation = {1: (1, 2, 3, 4), 2: (1,), 3: (1,), 4: (1,), 5: (1,)}
    edges = {i: ((1, i + 1), (i + 2, 1)) for i in range(4)}
    pm = PlaneMap(rotation, edges)
    tail = {i: edges[i][i % 2] for i in range(4)}
    return DirectedMap(pm, tail)


def _square():
    rotation = {v: (1, 2) for v in range(1, 5)}
    edges = {i: ((i + 1, 2), (i + 2 if i < 3 else 1, 1)) for i in range(4)}
    pm = PlaneMap(rotation, edges)
    tail = {i: edges[i][i % 2] for i in range(4)}
    return DirectedMap(pm, tail)


def test_alternating_center_vertex_index():
    census = directed_index_census(_spider())
    assert census.vertex_switches[1] == 4
    assert census.vertex_index[1] == -1
    assert census.total == 2


def test_alternating_square_face_index():
    census = directed_index_census(_square())
    assert sorted(census.face_switches) == [4, 4]
    assert census.face_index == (-1, -1)
    assert census.total == 2


def test_census_rejects_disconnected():
    pm = PlaneMap({1: (1,), 2: (1,), 3: (1,), 4: (1,)},
                  {0: ((1, 1), (2, 1)), 1: ((3, 1), (4, 1))})
    with pytest.raises(OrientationError):
        directed_index_census(DirectedMap(pm, {0: (1, 1), 1: (3, 1)}))


@pytest.fixture(scope="module")
def oriented(greatweb):
    return [induce_orientation(greatweb, T, "P") for T in star_family(greatweb, 4, 0)]


def test_vertex_stars_follow_source(oriented):
    for G in oriented:
        T = G.source_star
        for v in G.view.vertices:
            S = vertex_star(G, v)
            assert S == (T if G.base.sign(v) == T.sign else T.reflect())


def test_switch_labels_are_A_and_C(oriented):
    for G in oriented:
        T = G.source_star
        for v in G.view.vertices:
            kinds = {a: G.switch_kind(v, a) for a in G.view.used[v]}
            assert {a for a, k in kinds.items() if k == "A"} == set(T.A)
            assert {a for a, k in kinds.items() if k == "C"} == set(T.C)


def test_dual_graph_is_spherical(oriented):
    for G in oriented:
        pm = dual_graph(G).pmap
        if len(pm.components) == 1:
            assert len(pm.vertices) - len(pm.edges) + len(pm.face_orbits) == 2
            assert directed_index_census(dual_graph(G)).total == 2


def test_representing_faces_stats(oriented):
    for G in oriented:
        faces, stats = find_representing_faces(G)
        assert stats.r == len(faces)
        assert all(G.face_dir(f) is not None for f in faces)


def test_type_mismatch(oriented):
    G = oriented[0]
    bad = tuple(1 for _ in G.source_star.L)
    with pytest.raises(OrientationError):
        find_representing_faces(G, bad)


def test_two_color_even_view(greatweb):
    for side in "PQ":
        view = greatweb.view(side).view
        assert check_two_color(view, two_color(view))


def test_two_color_odd_degree():
    pm = PlaneMap({1: (1,), 2: (1,)}, {0: ((1, 1), (2, 1))})
    with pytest.raises(OrientationError) as exc:
        two_color(pm.full_view)
    assert exc.value.code == "ODD_DEGREE"


def test_rf_has_no_switch_edges(oriented):
    for G in oriented:
        try:
            rf = build_rf(G)
        except OrientationError:
            continue
        assert SWITCH not in classify_edges(rf.base).values()


def test_reverse_twice_is_identity(oriented):
    G = oriented[0]
    ids = [f.id for f in G.view.faces]
    for k in range(1, 3):
        for sub in itertools.combinations(ids, k):
            assert reverse_faces(reverse_faces(G, sub), sub).same(G)


def test_induce_rejects_out_of_range(greatweb):
    T = Star.make(1, [1, -1] * 5, range(1, 11), [OUT, IN] * 5)
    with pytest.raises(StarError) as exc:
        induce_orientation(greatweb, T, "P")
    assert exc.value.code == "LABEL_RANGE"
