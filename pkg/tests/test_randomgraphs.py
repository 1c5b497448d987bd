from hypothesis import given, settings, strategies as st

from schargraph.randomgraphs import random_oriented_graph, random_plane_map, signature

GOLDEN = [(7, 10, 5), (3, 14, 13), (1, 1, 2), (4, 10, 8), (4, 4, 2),
          (10, 12, 4), (10, 12, 4), (6, 8, 4), (4, 4, 2), (8, 9, 3)]


def test_golden_signatures():
    assert [signature(random_plane_map(s, 12)) for s in range(10)] == GOLDEN


def test_deterministic():
    a = random_oriented_graph(7, 12)
    b = random_oriented_graph(7, 12)
    assert a.omega == b.omega
    assert a.pmap.edges == b.pmap.edges


@settings(max_examples=150)
@given(st.integers(0, 10 ** 6), st.integers(1, 14))
def test_spherical_and_connected(seed, n):
    pm = random_plane_map(seed, n)
    assert len(pm.vertices) <= n
    assert len(pm.components) == 1
    if pm.edges:
        assert len(pm.vertices) - len(pm.edges) + len(pm.face_orbits) == 2
