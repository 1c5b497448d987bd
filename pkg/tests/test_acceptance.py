"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import itertools
import time

import pytest

from schargraph import fixtures
from schargraph.core import bridge_width, mutate_swap, validate_pair
from schargraph.cycles import find_great_webs, s_set, scharlemann_cycles, web_number_check
from schargraph.embedding import PlaneMap
from schargraph.harness import CorpusConfig, check_index_witness, star_family
from schargraph.orientation import (SWITCH, DirectedMap, OrientationError, build_rf,
                                    classify_edges, directed_index_census, induce_orientation)
from schargraph.randomgraphs import random_directed_graph
from schargraph.signs import IN, OUT
from schargraph.sweeps import coherence_sweep, containment_sweep, good_face_sweep, two_color_sweep


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def test_01_euler_index(report):
    t = time.perf_counter()
    bad = [s for s in range(1000) if directed_index_census(random_directed_graph(s, 12)).total != 2]
    secs = time.perf_counter() - t
    report(1, not bad and secs < 10, f"Euler index on 1000 graphs: {len(bad)} violations, {secs:.1f}s")


def test_02_derivative_containments(report):
    t = time.perf_counter()
    tally = containment_sweep(6, 3)
    secs = time.perf_counter() - t
    report(2, tally.ok and tally.checked > 0 and secs < 300,
           f"containments: {tally.checked} checks, {tally.failed} violations, {secs:.1f}s")


def test_03_coherence_sequences(report):
    t = time.perf_counter()
    tally = coherence_sweep(8)
    secs = time.perf_counter() - t
    report(3, tally.ok and secs < 300,
           f"coherence: {tally.checked} types, {tally.failed} violations, {secs:.1f}s")


def test_04_two_coloring(report):
    tally = two_color_sweep(8)
    report(4, tally.ok and tally.checked == 4416,
           f"two-coloring: {tally.checked} maps, {tally.failed} failures")


def _representative(G, omega):
    for f in G.view.faces:
        if f.inner_vertices or f.euler_char != 1 or len(f.corners) == 0:
            continue
        if len({omega[(c.vertex, c.start)] for c in f.corners}) == 1:
            return True
    return False


def _reversed(G, faces):
    omega = dict(G.omega)
    for f in faces:
        for c in f.corners:
            k = (c.vertex, c.start)
            omega[k] = IN if omega[k] == OUT else OUT
    return omega


@pytest.fixture(scope="module")
def oriented44(request):
    corpus = request.getfixturevalue("corpus44")
    return [induce_orientation(pair, T) for pair in corpus for T in star_family(pair, 2, 0)]


def test_05_rev_invariance(report, oriented44):
    checks, bad = 0, 0
    for G in oriented44:
        r = _representative(G, G.omega)
        faces = G.view.faces
        for k in range(len(faces) + 1):
            for S in itertools.combinations(faces, k):
                checks += 1
                bad += _representative(G, _reversed(G, S)) != r
    report(5, bad == 0, f"Rev invariance: {len(oriented44)} graphs, {checks} subsets, {bad} violations")


def test_06_rf_no_switch(report, oriented44):
    done, skipped, bad = 0, 0, 0
    for G in oriented44:
        try:
            rf = build_rf(G)
        except OrientationError:
            skipped += 1
            continue
        done += 1
        bad += SWITCH in classify_edges(rf.base).values()
    report(6, bad == 0 and done > 0,
           f"RF graphs: {done} built, {skipped} without precondition, {bad} with switch edges")


def test_07_good_corner_faces(report):
    tally = good_face_sweep(4, 6)
    report(7, tally.ok, f"all-good faces: {tally.checked} faces, {tally.failed} with positive index")


def test_08_index_witness(report):
    tally = check_index_witness(CorpusConfig(random_graphs=1000, random_n=12), 0)
    report(8, tally.ok and tally.checked > 0,
           f"index witness: {tally.checked} faces with index <= 0, {tally.failed} without witness")


def _captions():
    spider = PlaneMap({1: (1, 2, 3, 4), 2: (1,), 3: (1,), 4: (1,), 5: (1,)},
                      {i: ((1, i + 1), (i + 2, 1)) for i in range(4)})
    c1 = directed_index_census(DirectedMap(spider, {i: spider.edges[i][i % 2] for i in range(4)}))
    square = PlaneMap({v: (1, 2) for v in range(1, 5)},
                      {i: ((i + 1, 2), ((i + 1) % 4 + 1, 1)) for i in range(4)})
    c2 = directed_index_census(DirectedMap(square, {i: square.edges[i][i % 2] for i in range(4)}))
    return (c1.vertex_switches[1], c1.vertex_index[1]) == (4, -1) and \
        all((s, i) == (4, -1) for s, i in zip(c2.face_switches, c2.face_index))


def test_09_figure_goldens(report):
    T = fixtures.load_star("model-vertices")
    gw = fixtures.load_pair("greatweb")
    qv = gw.view("Q")
    checks = {
        "A={4,7}": set(T.A) == {4, 7},
        "C={1,6}": set(T.C) == {1, 6},
        "Scharlemann {2,4}": any(set(c.vertices) == {2, 4} for c in scharlemann_cycles(qv)),
        "innermost (+)-set {2,4,6,8}": (lambda s: s.innermost and s.sign == 1)(s_set(qv, {2, 4, 6, 8})),
        "great web {2,4,6,8}": frozenset({2, 4, 6, 8}) in {w.vertices for w in find_great_webs(qv, gw.p - 2)},
        "captions": _captions(),
    }
    bad = [k for k, v in checks.items() if not v]
    report(9, not bad, f"figure goldens: {len(checks) - len(bad)}/{len(checks)} match {bad or ''}")


def test_10_arithmetic_goldens(report):
    ok = [bridge_width(2) == 8, bridge_width(3) == 18, bridge_width(5) == 50,
          all(web_number_check(2, 4).values()),
          not web_number_check(2, 2)["proper"],
          not web_number_check(3, 4)["divides"]]
    report(10, all(ok), f"arithmetic goldens: {sum(ok)}/{len(ok)}")


def _breaks_parity(pair):
    def ch(slot):
        v, x = slot
        return pair.signs_p[v - 1] * pair.signs_q[x - 1]
    return any(ch(a) == ch(b) for a, b in pair.matching)


def test_11_mutation_soundness(report):
    total, accepted = 0, 0
    for info in fixtures.catalog():
        if info.format != "pair":
            continue
        pair = fixtures.load_pair(info.name)
        if not validate_pair(pair).ok:
            continue
        n = len(pair.matching)
        for e1, e2 in itertools.combinations(range(n), 2):
            for end1, end2 in itertools.product((0, 1), repeat=2):
                m = mutate_swap(pair, e1, e2, end1, end2)
                if not _breaks_parity(m):
                    continue
                total += 1
                accepted += validate_pair(m).ok
    report(11, total > 0 and accepted == 0,
           f"mutations: {total} parity-breaking, {total - accepted} rejected")
