"""Seeded random plane maps, directed graphs and oriented graphs.

The generator grows a connected plane map in two phases:

1. a random tree: vertex ``i`` (for ``i = 2..V``) is joined to a uniformly
   chosen earlier vertex, its slot inserted at a uniform position of that
   vertex's rotation;
2. extra edges: a face is chosen uniformly, then two of its corners
   (possibly the same corner), and a new edge is drawn through the face
   between them.

Both operations keep the map on the sphere. ``V`` is uniform in ``1..n``
and the number of extra edges is uniform in ``0..n`` (raised to reach
``min_edges`` when asked). Directions, and for oriented graphs corner
orientations, are drawn afterwards in a fixed order, so a seed determines
the whole object.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .embedding import PlaneMap, View
from .orientation import DirectedMap, OrientedGraph
from .signs import IN, OUT


def _insert_after(rot: list, slot_label, new_label) -> None:
    rot.insert(rot.index(slot_label) + 1, new_label)


def random_plane_map(seed: int, n: int, min_edges: int = 0) -> PlaneMap:
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    nv = rng.randint(1, n)
    rotation: dict[int, list[int]] = {v: [] for v in range(1, nv + 1)}
    edges: dict[int, tuple] = {}
    counter = {v: 0 for v in rotation}

    def new_slot(v):
        counter[v] += 1
        return counter[v]

    for v in range(2, nv + 1):
        w = rng.randint(1, v - 1)
        a, b = new_slot(v), new_slot(w)
        rotation[v].append(a)
        rotation[w].insert(rng.randint(0, len(rotation[w])), b)
        edges[len(edges)] = ((v, a), (w, b))
    extra = rng.randint(0, n)
    for _ in range(max(extra, min_edges - len(edges))):
        if not edges:
            a, b = new_slot(1), new_slot(1)
            rotation[1] += [a, b]
            edges[len(edges)] = ((1, a), (1, b))
            continue
        pmap = PlaneMap({v: tuple(r) for v, r in rotation.items()}, edges)
        face = rng.choice(pmap.face_orbits)
        i = rng.randrange(len(face))
        j = rng.randrange(len(face))
        if j < i:
            i, j = j, i
        (v1, t1), (v2, t2) = face[i], face[j]
        a = new_slot(v1)
        _insert_after(rotation[v1], t1, a)
        b = new_slot(v2)
        # in a shared corner the second end goes after the first
        _insert_after(rotation[v2], a if (i == j) else t2, b)
        edges[len(edges)] = ((v1, a), (v2, b))
    return PlaneMap({v: tuple(r) for v, r in rotation.items()}, edges)


def random_directed_graph(seed: int, n: int) -> DirectedMap:
    """Connected directed plane graph with at most ``n`` vertices."""
    pmap = random_plane_map(seed, n)
    rng = random.Random(f"dir-{seed}")
    tail = {e: pmap.edges[e][rng.randrange(2)] for e in sorted(pmap.edges)}
    return DirectedMap(pmap, tail)


@dataclass
class MapBase:
    """Stand-in for an embedded view when the graph does not come from a pair."""

    view: View

    @property
    def vertices(self) -> list[int]:
        return self.view.vertices

    @property
    def edge_ids(self) -> frozenset[int]:
        return self.view.edge_ids

    @property
    def faces(self):
        return self.view.faces

    def sub(self, edge_ids: Iterable[int]) -> "MapBase":
        return MapBase(View(self.view.map, edge_ids))


def random_oriented_graph(seed: int, n: int) -> OrientedGraph:
    """A random connected plane map with an independent in/out per corner."""
    pmap = random_plane_map(seed, n, min_edges=1)
    view = pmap.full_view
    rng = random.Random(f"orient-{seed}")
    omega = {}
    for v in view.vertices:
        for c in view.corners_at(v):
            omega[(v, c.start)] = rng.choice((IN, OUT))
    return OrientedGraph(MapBase(view), omega, None)


def random_subview(G: OrientedGraph, seed: int) -> MapBase:
    rng = random.Random(f"sub-{seed}")
    keep = [e for e in sorted(G.base.edge_ids) if rng.random() < 0.6]
    return G.base.sub(keep)


def signature(pmap: PlaneMap) -> tuple:
    """Compact description used by the golden-sequence test."""
    return (len(pmap.vertices), len(pmap.edges), len(pmap.face_orbits) if pmap.edges else 1)
