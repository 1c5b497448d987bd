"""Combinatorial plane maps built from fat-vertex rotation systems.

A :class:`PlaneMap` is a set of fat vertices, each carrying a cyclic
counterclockwise order of slot labels, together with edges pairing the
slots. Every slot of the full map is used by exactly one edge. Faces are
traced from the rotations; disconnected maps are placed on one sphere by
a nesting table that glues a face of each component into a face of
another.

A :class:`View` keeps a subset of the edges (all fat vertices stay). Its
faces are computed by merging faces of the full map across the deleted
edges, so views inherit the embedding of their parent instead of being
re-embedded.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

Slot = tuple[int, int]


class EmbeddingError(ValueError):
    """Raised when rotations or nesting data do not describe a sphere."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class Corner:
    """Arc of a fat vertex boundary running counterclockwise from ``start`` to ``end``.

    ``start`` and ``end`` are the labels of the bounding edge slots. A vertex
    with no edges in the view has a single corner with both set to ``None``.
    """

    vertex: int
    start: Optional[int]
    end: Optional[int]
    interior: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return self.start is None


@dataclass(frozen=True)
class BoundaryCycle:
    corners: tuple[Corner, ...]
    # edge leaving after each corner; None for an isolated-vertex circle
    edges: tuple[Optional[int], ...]

    @property
    def isolated(self) -> bool:
        return self.edges == (None,)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(c.vertex for c in self.corners)


@dataclass(frozen=True)
class Face:
    id: int
    cycles: tuple[BoundaryCycle, ...]
    full_faces: frozenset[int]
    inner_vertices: frozenset[int] = field(default=frozenset())
    inner_edges: frozenset[int] = field(default=frozenset())

    @property
    def is_disk(self) -> bool:
        return len(self.cycles) == 1

    @property
    def euler_char(self) -> int:
        return 2 - len(self.cycles)

    @property
    def corners(self) -> tuple[Corner, ...]:
        return tuple(c for cyc in self.cycles for c in cyc.corners)

    @property
    def boundary_edges(self) -> tuple[int, ...]:
        return tuple(e for cyc in self.cycles for e in cyc.edges if e is not None)

    @property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(c.vertex for c in self.corners if not c.closed)


class _UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {i: i for i in items}

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _components(vertices: Iterable[int], edges: Iterable[tuple[Slot, Slot]]) -> list[list[int]]:
    uf = _UnionFind(vertices)
    for (v, _), (w, _) in edges:
        uf.union(v, w)
    groups: dict[int, list[int]] = defaultdict(list)
    for v in uf.parent:
        groups[uf.find(v)].append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


class PlaneMap:
    """Full fat-vertex map on the sphere.

    ``rotation[v]`` lists the labels of ``v`` in counterclockwise order and
    ``edges[e] = ((v, a), (w, b))``. ``nesting`` is a list of
    ``(host_slot, via_slot)`` pairs: the face of the guest component that
    contains the corner starting at ``via_slot`` is glued into the face of the
    host containing the corner starting at ``host_slot``. When omitted, every
    component other than the first is glued into the face of the first
    component at its smallest vertex's first slot.
    """

    def __init__(self, rotation: dict[int, tuple[int, ...]],
                 edges: dict[int, tuple[Slot, Slot]],
                 nesting: Optional[list[tuple[Slot, Slot]]] = None):
        self.rotation = {v: tuple(r) for v, r in rotation.items()}
        self.edges = dict(edges)
        self.slot_edge: dict[Slot, int] = {}
        for e, (s1, s2) in self.edges.items():
            for s in (s1, s2):
                if s in self.slot_edge:
                    raise EmbeddingError("SLOT_COVERAGE", f"slot {s} used twice")
                if s[0] not in self.rotation or s[1] not in self.rotation[s[0]]:
                    raise EmbeddingError("SLOT_COVERAGE", f"slot {s} does not exist")
                self.slot_edge[s] = e
        for v, rot in self.rotation.items():
            for a in rot:
                if (v, a) not in self.slot_edge:
                    raise EmbeddingError("SLOT_COVERAGE", f"slot {(v, a)} has no edge")
        self._pos = {v: {a: i for i, a in enumerate(rot)} for v, rot in self.rotation.items()}
        self._nesting_input = nesting

    # ----------------------------------------------------------------- basics
    def twin(self, s: Slot) -> Slot:
        s1, s2 = self.edges[self.slot_edge[s]]
        return s2 if s == s1 else s1

    def succ(self, s: Slot) -> Slot:
        v, a = s
        rot = self.rotation[v]
        return (v, rot[(self._pos[v][a] + 1) % len(rot)])

    def pred(self, s: Slot) -> Slot:
        v, a = s
        rot = self.rotation[v]
        return (v, rot[(self._pos[v][a] - 1) % len(rot)])

    def between(self, v: int, start: int, end: int) -> tuple[int, ...]:
        """Labels strictly inside the counterclockwise arc from ``start`` to ``end``."""
        rot = self.rotation[v]
        n = len(rot)
        i = self._pos[v][start]
        j = self._pos[v][end]
        steps = (j - i) % n or n
        return tuple(rot[(i + k) % n] for k in range(1, steps))

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rotation)

    @cached_property
    def components(self) -> list[list[int]]:
        return _components(self.rotation, self.edges.values())

    # ------------------------------------------------------------ full faces
    @cached_property
    def face_orbits(self) -> list[list[Slot]]:
        """Orbits of ``s -> succ(twin(s))``, each listing corner start slots."""
        seen: set[Slot] = set()
        orbits = []
        for v in self.vertices:
            for a in self.rotation[v]:
                s = (v, a)
                if s in seen:
                    continue
                orbit = []
                cur = s
                # the corner starting at twin(cur) is traversed after dart cur
                while cur not in seen:
                    seen.add(cur)
                    t = self.twin(cur)
                    orbit.append(t)
                    cur = self.succ(t)
                orbits.append(orbit)
        return orbits

    @cached_property
    def face_of_start(self) -> dict[Slot, int]:
        return {t: i for i, orbit in enumerate(self.face_orbits) for t in orbit}

    def component_euler(self) -> list[tuple[list[int], int]]:
        """V - E + F for each connected component (2 for a sphere)."""
        comp_of = {v: i for i, comp in enumerate(self.components) for v in comp}
        nv = [len(c) for c in self.components]
        ne = [0] * len(nv)
        nf = [0] * len(nv)
        for (v, _), _ in self.edges.values():
            ne[comp_of[v]] += 1
        for orbit in self.face_orbits:
            nf[comp_of[orbit[0][0]]] += 1
        return [(c, nv[i] - ne[i] + nf[i]) for i, c in enumerate(self.components)]

    @cached_property
    def nesting(self) -> list[tuple[Slot, Slot]]:
        comps = self.components
        if self._nesting_input is None:
            root = comps[0][0]
            host = (root, self.rotation[root][0])
            return [(host, (c[0], self.rotation[c[0]][0])) for c in comps[1:]]
        return [tuple(map(tuple, pair)) for pair in self._nesting_input]

    def check_nesting(self) -> list[str]:
        """Problems with the nesting table; an empty list means consistent."""
        comps = self.components
        comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
        problems = []
        uf = _UnionFind(range(len(comps)))
        guests = set()
        for host, via in self.nesting:
            for s in (host, via):
                if s not in self.slot_edge:
                    problems.append(f"nesting slot {list(s)} does not exist")
                    return problems
            ch, cg = comp_of[host[0]], comp_of[via[0]]
            if ch == cg:
                problems.append(f"component of vertex {via[0]} nested in itself")
            elif cg in guests:
                problems.append(f"component of vertex {via[0]} placed twice")
            elif not uf.union(ch, cg):
                problems.append(f"nesting cycle through component of vertex {via[0]}")
            guests.add(cg)
        if not problems and len({uf.find(i) for i in range(len(comps))}) != 1:
            problems.append("nesting does not place every component")
        return problems

    @cached_property
    def full_view(self) -> "View":
        return View(self, self.edges.keys())

    def view(self, edge_ids: Iterable[int]) -> "View":
        return View(self, edge_ids)


class View:
    """Subgraph of a :class:`PlaneMap` keeping ``edge_ids`` and every vertex."""

    def __init__(self, pmap: PlaneMap, edge_ids: Iterable[int]):
        self.map = pmap
        self.edge_ids = frozenset(edge_ids)
        used = {s for e in self.edge_ids for s in pmap.edges[e]}
        self.used: dict[int, tuple[int, ...]] = {
            v: tuple(a for a in rot if (v, a) in used) for v, rot in pmap.rotation.items()
        }
        self._upos = {v: {a: i for i, a in enumerate(u)} for v, u in self.used.items()}

    def succ(self, s: Slot) -> Slot:
        v, a = s
        u = self.used[v]
        return (v, u[(self._upos[v][a] + 1) % len(u)])

    def pred(self, s: Slot) -> Slot:
        v, a = s
        u = self.used[v]
        return (v, u[(self._upos[v][a] - 1) % len(u)])

    def corner_from(self, s: Slot) -> Corner:
        v, t = s
        u = self.succ(s)[1]
        return Corner(v, t, u, self.map.between(v, t, u))

    def corners_at(self, v: int) -> list[Corner]:
        if not self.used[v]:
            return [Corner(v, None, None, self.map.rotation[v])]
        return [self.corner_from((v, t)) for t in self.used[v]]

    def corner_containing(self, v: int, label: int) -> Corner:
        """The view corner whose arc holds ``label`` (or starts at it)."""
        if not self.used[v]:
            return Corner(v, None, None, self.map.rotation[v])
        s = (v, label)
        while s[1] not in self._upos[v]:
            s = self.map.pred(s)
        return self.corner_from(s)

    @property
    def vertices(self) -> list[int]:
        return self.map.vertices

    def edges(self) -> list[tuple[int, Slot, Slot]]:
        return [(e, *self.map.edges[e]) for e in sorted(self.edge_ids)]

    def degree(self, v: int) -> int:
        return len(self.used[v])

    @cached_property
    def components(self) -> list[list[int]]:
        return _components(self.map.rotation, (self.map.edges[e] for e in self.edge_ids))

    @cached_property
    def _regions(self):
        pmap = self.map
        uf = _UnionFind(range(len(pmap.face_orbits)))
        fos = pmap.face_of_start
        for host, via in pmap.nesting:
            uf.union(fos[host], fos[via])
        deleted = [e for e in pmap.edges if e not in self.edge_ids]
        for e in deleted:
            s1, _ = pmap.edges[e]
            uf.union(fos[s1], fos[pmap.pred(s1)])
        cycles_by_root: dict[int, list[BoundaryCycle]] = defaultdict(list)
        seen: set[Slot] = set()
        for v in self.vertices:
            if not self.used[v]:
                root = uf.find(fos[(v, pmap.rotation[v][0])])
                cycles_by_root[root].append(
                    BoundaryCycle((Corner(v, None, None, pmap.rotation[v]),), (None,)))
                continue
            for a in self.used[v]:
                start = (v, a)
                if start in seen:
                    continue
                corners, edges = [], []
                t = start
                while t not in seen:
                    seen.add(t)
                    c = self.corner_from(t)
                    corners.append(c)
                    out = (c.vertex, c.end)
                    edges.append(pmap.slot_edge[out])
                    t = pmap.twin(out)
                cycles_by_root[uf.find(fos[start])].append(BoundaryCycle(tuple(corners), tuple(edges)))
        full_by_root: dict[int, set[int]] = defaultdict(set)
        for f in range(len(pmap.face_orbits)):
            full_by_root[uf.find(f)].add(f)
        edges_by_root: dict[int, set[int]] = defaultdict(set)
        for e in deleted:
            edges_by_root[uf.find(fos[pmap.edges[e][0]])].add(e)
        return uf, cycles_by_root, full_by_root, edges_by_root

    @cached_property
    def faces(self) -> list[Face]:
        uf, cycles_by_root, full_by_root, edges_by_root = self._regions
        faces = []
        for i, root in enumerate(sorted(full_by_root)):
            cycles = tuple(cycles_by_root[root])
            inner_v = frozenset(c.corners[0].vertex for c in cycles if c.isolated)
            faces.append(Face(i, cycles, frozenset(full_by_root[root]), inner_v,
                              frozenset(edges_by_root.get(root, ()))))
        return faces

    @cached_property
    def _face_index(self) -> dict[int, int]:
        return {f: face.id for face in self.faces for f in face.full_faces}

    def face_of_full(self, full_face: int) -> Face:
        return self.faces[self._face_index[full_face]]

    def face_of_corner(self, corner: Corner) -> Face:
        """Face of this view containing a corner of this view."""
        if corner.closed:
            slot = (corner.vertex, self.map.rotation[corner.vertex][0])
        else:
            slot = (corner.vertex, corner.start)
        return self.face_of_full(self.map.face_of_start[slot])

    def face_of_vertex(self, v: int) -> Face:
        """Face containing ``v`` when ``v`` has no edges in the view."""
        return self.face_of_full(self.map.face_of_start[(v, self.map.rotation[v][0])])

    def euler_ok(self) -> bool:
        """V - E + F = 1 + (number of components) holds on the sphere."""
        v, e, f = len(self.vertices), len(self.edge_ids), len(self.faces)
        return v - e + f == 1 + len(self.components)

    def sides_of_cycle(self, edge_ids: Iterable[int]) -> list[Face]:
        """Regions complementary to a simple closed edge path, viewed in the full map.

        Returns the faces of the sub-view on ``edge_ids`` whose boundary runs
        along those edges; ``inner_vertices``/``inner_edges`` of each tell what
        lies on that side.
        """
        sub = View(self.map, edge_ids)
        return [f for f in sub.faces if any(not c.isolated for c in f.cycles)]
