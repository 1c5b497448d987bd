"""Graphs with dual orientation and the index machinery built on them.

A dual orientation assigns ``in`` or ``out`` to every corner of a subgraph
of a fat-vertex graph. Corners are keyed by their counterclockwise start
slot ``(v, label)``; a vertex with no edges has the single key ``(v, None)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import EmbeddedView, IntersectionPair, subgraph_labels
from .corners import CornerData, GOOD, UGLY, classify_corner
from .cycles import TreeCertificate, _directed_cycle, all_x_cycles, scharlemann_cycles
from .embedding import Corner, Face, PlaneMap, View
from .signs import IN, OUT, PLUS, flip, uniform
from .stars import Star, StarError, derivative_relative

SWITCH = "switch"
NEGATIVE = "negative"
OTHER = "other"


class OrientationError(ValueError):
    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


def disk_cycles(face: Face):
    """Boundary cycles of ``face`` that carry edges."""
    return [c for c in face.cycles if not c.isolated]


def is_disk_region(face: Face) -> bool:
    """One boundary walk; isolated fat vertices inside are allowed."""
    return len(disk_cycles(face)) == 1


# --------------------------------------------------------------------------
# oriented graphs
# --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OrientedGraph:
    base: EmbeddedView
    omega: dict
    source_star: Optional[Star] = None

    @property
    def view(self) -> View:
        return self.base.view

    @property
    def pmap(self) -> PlaneMap:
        return self.base.view.map

    def corners(self) -> list[Corner]:
        return [c for v in self.view.vertices for c in self.view.corners_at(v)]

    def key(self, c: Corner):
        return (c.vertex, c.start)

    def dir(self, c: Corner) -> str:
        return self.omega[self.key(c)]

    def sides_of_label(self, v: int, a: int) -> tuple[str, str]:
        """(clockwise side, counterclockwise side) orientations at a used label."""
        before = self.view.pred((v, a))[1]
        return self.omega[(v, before)], self.omega[(v, a)]

    def switch_kind(self, v: int, a: int) -> Optional[str]:
        cw, ccw = self.sides_of_label(v, a)
        if cw == OUT and ccw == IN:
            return "A"
        if cw == IN and ccw == OUT:
            return "C"
        return None

    def uniform_vertex(self, v: int) -> Optional[str]:
        dirs = {self.omega[(v, c.start)] for c in self.view.corners_at(v)}
        return dirs.pop() if len(dirs) == 1 else None

    def face_dir(self, face: Face) -> Optional[str]:
        """Common orientation of every corner of a face, or None."""
        dirs = {self.dir(c) for c in face.corners}
        return dirs.pop() if len(dirs) == 1 else None

    def with_omega(self, omega: dict) -> "OrientedGraph":
        return OrientedGraph(self.base, dict(omega), None)

    def subcorner_dirs(self, X: Corner) -> tuple[list[int], list[str]]:
        """Γ-labels strictly inside a corner of a subgraph and the Γ orientations along it."""
        v = X.vertex
        if X.closed:
            raise OrientationError("NOT_A_DISK", f"vertex {v} has no edges in the face boundary")
        labels, dirs = [], [self.omega[(v, X.start)]]
        s = self.view.succ((v, X.start))
        while s[1] != X.end:
            labels.append(s[1])
            dirs.append(self.omega[s])
            s = self.view.succ(s)
        return labels, dirs

    def same(self, other: "OrientedGraph") -> bool:
        return self.base.edge_ids == other.base.edge_ids and self.omega == other.omega

    def to_json(self) -> list[dict]:
        out = []
        for c in self.corners():
            out.append({"vertex": c.vertex, "interval": [c.start, c.end], "dir": self.dir(c)})
        return out


def _corner_dir(T: Star, sign_v: int, c: Corner) -> str:
    # numeric order is counterclockwise at positive vertices and clockwise at negative ones
    anchor = c.start if sign_v == PLUS else c.end
    d = T.orientation_after(anchor)
    return d if sign_v == T.sign else flip(d)


def induce_orientation(pair: IntersectionPair, T: Star, side: str = "P") -> OrientedGraph:
    """Dual orientation on G_side(L(T)) generated by the star T."""
    n = pair.count("Q" if side == "P" else "P")
    if any(l < 1 or l > n for l in T.L):
        raise StarError("LABEL_RANGE", f"labels of L(T) must lie in 1..{n}")
    base = subgraph_labels(pair, side, T.L)
    return orient_by_star(base, T)


def orient_by_star(base: EmbeddedView, T: Star) -> OrientedGraph:
    omega = {}
    for v in base.vertices:
        sv = base.sign(v)
        for c in base.view.corners_at(v):
            if c.closed:
                omega[(v, None)] = _closed_dir(T, sv)
            else:
                omega[(v, c.start)] = _corner_dir(T, sv, c)
    return OrientedGraph(base, omega, T)


def _closed_dir(T: Star, sv: int) -> str:
    if not T.trivial:
        raise OrientationError("NOT_UNIFORM", "an edgeless vertex needs a uniform star")
    return T.omega[0] if sv == T.sign else flip(T.omega[0])


def classify_edges(G: OrientedGraph) -> dict[int, str]:
    """switch / negative / other for every edge of the oriented graph."""
    out = {}
    for e, s1, s2 in G.view.edges():
        k1 = G.switch_kind(*s1)
        k2 = G.switch_kind(*s2)
        four = set(G.sides_of_label(*s1)) | set(G.sides_of_label(*s2))
        if k1 is not None and k1 == k2:
            out[e] = SWITCH
        elif len(four) == 1:
            out[e] = NEGATIVE
        else:
            out[e] = OTHER
    return out


# --------------------------------------------------------------------------
# index of a face boundary
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryIndex:
    corner_terms: tuple[int, ...]
    edge_terms: tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(self.corner_terms) + sum(self.edge_terms)

    def to_json(self) -> dict:
        return {"index": self.value, "corners": list(self.corner_terms), "edges": list(self.edge_terms)}


def _switch_count(dirs: list[str]) -> int:
    return sum(1 for a, b in zip(dirs, dirs[1:]) if a != b)


def boundary_terms(G: OrientedGraph, F: Face) -> BoundaryIndex:
    """Corner and edge index terms around a disk face of a subgraph of G."""
    cycles = disk_cycles(F)
    if len(cycles) != 1:
        raise OrientationError("NOT_A_DISK", f"face {F.id} has {len(cycles)} boundary walks")
    cyc = cycles[0]
    ends = []
    corner_terms = []
    for X in cyc.corners:
        _, dirs = G.subcorner_dirs(X)
        corner_terms.append(1 - _switch_count(dirs))
        ends.append((dirs[0], dirs[-1]))
    k = len(cyc.corners)
    # the edge after corner i joins the end of corner i to the start of corner i+1
    edge_terms = [-1 if ends[i][1] == ends[(i + 1) % k][0] else 0 for i in range(k)]
    return BoundaryIndex(tuple(corner_terms), tuple(edge_terms))


def boundary_index(G: OrientedGraph, F: Face) -> int:
    return boundary_terms(G, F).value


# --------------------------------------------------------------------------
# directed plane graphs, dual graphs and the Euler index census
# --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DirectedMap:
    """A plane map together with the tail slot of every edge."""

    pmap: PlaneMap
    tail: dict
    dual_faces: dict = field(default_factory=dict)   # dual vertex -> face id of Γ

    def direction(self, s) -> str:
        return OUT if self.tail[self.pmap.slot_edge[s]] == s else IN

    def sink_or_source(self, v: int) -> Optional[str]:
        dirs = {self.direction((v, a)) for a in self.pmap.rotation[v]}
        return dirs.pop() if len(dirs) == 1 else None


@dataclass(frozen=True)
class IndexCensus:
    vertex_switches: dict
    face_switches: tuple[int, ...]

    @property
    def vertex_index(self) -> dict:
        return {v: 1 - s // 2 for v, s in self.vertex_switches.items()}

    @property
    def face_index(self) -> tuple[int, ...]:
        return tuple(1 - s // 2 for s in self.face_switches)

    @property
    def total(self) -> int:
        return sum(self.vertex_index.values()) + sum(self.face_index)

    def to_json(self) -> dict:
        return {"vertices": [{"vertex": v, "s": s, "I": 1 - s // 2}
                             for v, s in sorted(self.vertex_switches.items())],
                "faces": [{"face": i, "s": s, "I": 1 - s // 2} for i, s in enumerate(self.face_switches)],
                "total": self.total}


def directed_index_census(dm: DirectedMap) -> IndexCensus:
    """s(v), s(F) and the indices I(v) = 1 - s(v)/2, I(F) = 1 - s(F)/2."""
    pmap = dm.pmap
    if len(pmap.components) != 1:
        raise OrientationError("DISCONNECTED", f"{len(pmap.components)} components")
    vs = {}
    for v in pmap.vertices:
        rot = pmap.rotation[v]
        vs[v] = sum(1 for a in rot if dm.direction((v, a)) != dm.direction(pmap.succ((v, a))))
    if not pmap.edges:
        return IndexCensus(vs, (0,))
    fs = []
    for orbit in pmap.face_orbits:
        fs.append(sum(1 for t in orbit if dm.direction(t) == dm.direction(pmap.succ(t))))
    return IndexCensus(vs, tuple(fs))


def dual_graph(G: OrientedGraph) -> DirectedMap:
    """Γ*: fat vertices plus one dual vertex per disk face, one arc per corner.

    The arc of an ``out`` corner points from the fat vertex to the dual
    vertex. Slots at a fat vertex are labelled by the corner's start label;
    slots at a dual vertex are numbered counterclockwise.
    """
    view = G.view
    faces = [f for f in view.faces if is_disk_region(f) and not f.inner_vertices]
    base = max(view.vertices) + 1
    rotation: dict[int, list] = {v: [] for v in view.vertices}
    edges, tail, dual_faces = {}, {}, {}
    keep = set()
    for f in faces:
        dv = base + f.id
        dual_faces[dv] = f.id
        corners = list(reversed(disk_cycles(f)[0].corners))
        rotation[dv] = list(range(len(corners)))
        for k, c in enumerate(corners):
            keep.add((c.vertex, c.start))
            e = len(edges)
            fat, dual = (c.vertex, c.start), (dv, k)
            edges[e] = (fat, dual)
            tail[e] = fat if G.dir(c) == OUT else dual
    for v in view.vertices:
        rotation[v] = [a for a in view.used[v] if (v, a) in keep]
    pmap = PlaneMap({v: tuple(r) for v, r in rotation.items()}, edges)
    return DirectedMap(pmap, tail, dual_faces)


# --------------------------------------------------------------------------
# representation and the Hoffman statistics
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class HoffmanStats:
    i: int
    u: int
    r: int
    s: int
    t: Optional[int]
    flags: tuple = ()

    def to_json(self) -> dict:
        return {"i": self.i, "u": self.u, "r": self.r, "s": self.s, "t": self.t,
                "flags": [f for f in self.flags]}


def representing_faces(G: OrientedGraph) -> list[Face]:
    """Disk faces all of whose corners carry the same orientation."""
    return [f for f in G.view.faces if is_disk_region(f) and not f.inner_vertices
            and G.face_dir(f) is not None]


def is_representative(G: OrientedGraph) -> bool:
    return bool(representing_faces(G))


def find_representing_faces(G: OrientedGraph, tau=None) -> tuple[list[Face], HoffmanStats]:
    T = G.source_star
    if tau is not None and T is not None and not T.represents(tau):
        raise OrientationError("TYPE_MISMATCH", "the source star does not represent the type")
    faces = representing_faces(G)
    kinds = classify_edges(G)
    u = sum(1 for k in kinds.values() if k == NEGATIVE)
    s = sum(1 for k in kinds.values() if k == SWITCH)
    i = (len(T.A) + len(T.C)) // 2 - 1 if T is not None else None
    t = None
    if len(G.view.components) == 1:
        dm = dual_graph(G)
        census = directed_index_census(dm)
        t = len(faces) - sum(census.vertex_index[dv] for dv in dm.dual_faces)
    flags = ()
    if T is not None and not faces:
        flags = tuple(hoffman_flags(G, u, t))
    return faces, HoffmanStats(i, u, len(faces), s, t, flags)


def hoffman_flags(G: OrientedGraph, u: int, t: Optional[int]) -> list[str]:
    """Conclusions (a)-(h) of the Hoffman lemma that fail on this instance.

    Only evaluated when the hypotheses hold: A(T) and C(T) each of one
    parity, nontrivial type, no representing face, and no new x-cycle of
    G_Q on vertices of A(T) or C(T).
    """
    T = G.source_star
    pair = G.base.pair
    A, C = set(T.A), set(T.C)
    if T.trivial or not (uniform(T.parity(a) for a in A) and uniform(T.parity(c) for c in C)):
        return []
    other = "Q" if G.base.side == "P" else "P"
    qview = pair.view(other)
    for cyc in all_x_cycles(qview):
        if cyc.new and (set(cyc.vertices) <= A or set(cyc.vertices) <= C):
            return []
    bad = []
    if len(G.view.components) != 1:
        bad.append("a:disconnected")
    if t != 0 or u != 0:
        bad.append("b:t_u_nonzero")
    kinds = classify_edges(G)
    per_vertex = defaultdict(lambda: {"A": 0, "C": 0})
    for e, s1, s2 in G.view.edges():
        if kinds[e] != SWITCH:
            continue
        k = G.switch_kind(*s1)
        per_vertex[s1[0]][k] += 1
        if s2[0] != s1[0]:
            per_vertex[s2[0]][k] += 1
    for v in G.view.vertices:
        cnt = per_vertex[v]
        if v in (1, 2):
            if cnt["A"] + cnt["C"] != len(A) + len(C):
                bad.append(f"c:special_vertex_{v}")
        elif cnt["C"] != len(C) - 1 or cnt["A"] != len(A) - 1:
            bad.append(f"d:regular_vertex_{v}")
    sch = scharlemann_cycles(qview)
    on_C = [c for c in sch if set(c.vertices) <= C and set(c.labels) == {1, 2}]
    on_A = [c for c in sch if set(c.vertices) <= A and set(c.labels) == {1, 2}]
    if not on_C or not on_A:
        bad.append("e:scharlemann_on_A_and_C")
    if sch and not (len(C) == len(A) and min(c.order for c in sch) <= len(C)):
        bad.append("f:order_bound")
    L = set(T.L)
    for name, S in (("C", C), ("A", A)):
        cross = [e for e, (a, b) in enumerate(pair.edges(other))
                 if (a[0] in S and b[0] in L - S) or (b[0] in S and a[0] in L - S)]
        if len(cross) != pair.count(G.base.side) - 2:
            bad.append(f"g:{name}_cut_size")
        if not _induced_connected(pair, other, S):
            bad.append(f"h:{name}_connected")
    return bad


def _induced_connected(pair: IntersectionPair, side: str, S: set) -> bool:
    if not S:
        return True
    adj = defaultdict(set)
    for a, b in pair.edges(side):
        if a[0] in S and b[0] in S:
            adj[a[0]].add(b[0])
            adj[b[0]].add(a[0])
    start = min(S)
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return seen == S


# --------------------------------------------------------------------------
# the index lemma witness
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IndexWitness:
    kind: str            # switch_edge | dual_face | uniform_vertex
    item: int
    index: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "item": self.item, "index": self.index}


def faces_inside(G: OrientedGraph, F: Face) -> list[Face]:
    return [f for f in G.view.faces if f.full_faces <= F.full_faces]


def index_witness(G: OrientedGraph, F: Face) -> Optional[IndexWitness]:
    """Switch edge, sink/source face or uniform fat vertex of G inside F.

    ``F`` is a face of a subgraph of G with index at most 0; the result is
    None only if the index lemma fails, which callers treat as a violation.
    """
    ind = boundary_index(G, F)
    if ind > 0:
        raise OrientationError("PRECONDITION_INDEX", f"boundary index {ind} > 0")
    kinds = classify_edges(G)
    for e in sorted(F.inner_edges & G.base.edge_ids):
        if kinds[e] == SWITCH:
            return IndexWitness("switch_edge", e, ind)
    for f in faces_inside(G, F):
        if is_disk_region(f) and not f.inner_vertices and G.face_dir(f) is not None:
            return IndexWitness("dual_face", f.id, ind)
    for v in sorted(F.inner_vertices):
        if G.uniform_vertex(v) is not None:
            return IndexWitness("uniform_vertex", v, ind)
    return None


# --------------------------------------------------------------------------
# reversal, coloring, rotation-free graphs and conjugates
# --------------------------------------------------------------------------

def reverse_faces(G: OrientedGraph, faces: Iterable[int]) -> OrientedGraph:
    """Flip every corner lying in one of the given faces (by face id)."""
    chosen = set(faces)
    omega = dict(G.omega)
    for f in G.view.faces:
        if f.id in chosen:
            for c in f.corners:
                k = G.key(c)
                omega[k] = flip(omega[k])
    return G.with_omega(omega)


def two_color(view: View) -> dict[int, str]:
    """Black/white coloring of the faces of an even-degree view.

    Peels the boundary of a face, colors the smaller graph, then flips the
    color of the peeled face.
    """
    for v in view.vertices:
        if view.degree(v) % 2:
            raise OrientationError("ODD_DEGREE", f"vertex {v} has degree {view.degree(v)}")
    stack = []
    cur = view
    while cur.edge_ids:
        f = next(f for f in cur.faces if f.boundary_edges)
        stack.append((cur, f.id))
        cur = View(cur.map, cur.edge_ids - set(f.boundary_edges))
    # color by full faces so that nested views can be compared
    color = {ff: False for ff in range(len(view.map.face_orbits))}
    for v, fid in reversed(stack):
        for ff in v.faces[fid].full_faces:
            color[ff] = not color[ff]
    return {f.id: "black" if color[min(f.full_faces)] else "white" for f in view.faces}


def check_two_color(view: View, coloring: dict[int, str]) -> bool:
    for e, s1, _ in view.edges():
        f1 = view.face_of_full(view.map.face_of_start[s1]).id
        f2 = view.face_of_full(view.map.face_of_start[view.map.pred(s1)]).id
        if coloring[f1] == coloring[f2]:
            return False
    return True


def two_color_switch_faces(G: OrientedGraph) -> dict[int, str]:
    """Coloring of the faces of the switch-edge subgraph (keyed by its face ids)."""
    kinds = classify_edges(G)
    sw = View(G.pmap, [e for e, k in kinds.items() if k == SWITCH])
    return two_color(sw)


@dataclass(frozen=True, eq=False)
class RFGraph:
    base: OrientedGraph
    black_faces: frozenset
    A_RF: frozenset
    C_RF: frozenset
    trees: dict
    cycles: dict

    def to_json(self) -> dict:
        return {"black_faces": sorted(self.black_faces),
                "A_RF": sorted([list(x) for x in self.A_RF]),
                "C_RF": sorted([list(x) for x in self.C_RF]),
                "trees": {k: [t.to_json() for t in v] for k, v in self.trees.items()},
                "directed_cycles": {k: list(v) for k, v in self.cycles.items() if v}}


def build_rf(G: OrientedGraph, roots=(1, 2)) -> RFGraph:
    """Reverse the black faces of the switch coloring; the result has no switch edges."""
    kinds = classify_edges(G)
    sw = View(G.pmap, [e for e, k in kinds.items() if k == SWITCH])
    coloring = two_color(sw)
    black_full = {ff for f in sw.faces if coloring[f.id] == "black" for ff in f.full_faces}
    black = frozenset(f.id for f in G.view.faces if f.full_faces <= black_full)
    RF = reverse_faces(G, black)
    assert all(k != SWITCH for k in classify_edges(RF).values()), "reversal left a switch edge"
    A_RF, C_RF = set(), set()
    for v in RF.view.vertices:
        for a in RF.view.used[v]:
            k = RF.switch_kind(v, a)
            if k == "A":
                A_RF.add((a, v))
            elif k == "C":
                C_RF.add((a, v))
    trees, cycles = {}, {}
    for name, S in (("A", A_RF), ("C", C_RF)):
        arcs = []
        for a, v in sorted(S):
            e = RF.pmap.slot_edge[(v, a)]
            w = RF.pmap.twin((v, a))[0]
            arcs.append((e, v, w))
        cycles[name] = _directed_cycle(arcs)
        trees[name] = [_tree_to(arcs, r) for r in roots]
    return RFGraph(RF, black, frozenset(A_RF), frozenset(C_RF), trees, cycles)


def _tree_to(arcs, root: int) -> TreeCertificate:
    into = defaultdict(list)
    for e, v, w in arcs:
        into[w].append((e, v, w))
    seen, stack, used = {root}, [root], []
    while stack:
        w = stack.pop()
        for e, v, _ in into[w]:
            if v not in seen:
                seen.add(v)
                used.append((e, v, w))
                stack.append(v)
    return TreeCertificate(root, tuple(sorted(used)), frozenset(seen - {root}), frozenset({root}))


def conjugate_star(T: Star) -> Star:
    """Flip the orientation of every interval whose start label has character +.

    Requires every label in L and alternating parities, which is what makes
    the face two-coloring a function of the character of the start label.
    """
    if set(T.L) != set(T.labels):
        raise StarError("PARTIAL_TYPE", "the conjugate needs L(T) to be every label")
    n = len(T.labels)
    if n % 2 or any(T.parities[i] == T.parities[(i + 1) % n] for i in range(n)):
        raise StarError("NON_ALTERNATING", "parities must alternate around the vertex")
    omega = tuple(flip(o) if T.char(l) == PLUS else o for l, o in zip(T.L, T.omega))
    return T.with_omega(T.L, omega)


# --------------------------------------------------------------------------
# derivatives of oriented graphs and good corners
# --------------------------------------------------------------------------

def vertex_star(G: OrientedGraph, v: int) -> Star:
    """The star read off at fat vertex v: labels used by G, orientations of its corners."""
    pair, side = G.base.pair, G.base.side
    n = pair.count("Q" if side == "P" else "P")
    parities = {l: pair.parity(side, l) for l in range(1, n + 1)}
    sv = G.base.sign(v)
    L = sorted(G.view.used[v])
    omega = []
    for l in L:
        if sv == PLUS:
            omega.append(G.omega[(v, l)])
        else:
            # numeric successor interval of l is the corner ending at l
            omega.append(G.omega[(v, G.view.pred((v, l))[1])])
    return Star.make(sv, parities, L, omega)


def derive_graph(G: OrientedGraph, L0: Iterable[int], chirality="+") -> OrientedGraph:
    """δ₀Γ: the relative derivative at every fat vertex, with L(G(L0))|v kept."""
    pair, side = G.base.pair, G.base.side
    L0 = set(L0)
    g0 = subgraph_labels(pair, side, L0)
    stars = {}
    for v in G.view.vertices:
        Tv = vertex_star(G, v)
        keep = set(g0.view.used[v])
        stars[v] = derivative_relative(Tv, keep, chirality)
    labels = set().union(*(set(s.L) for s in stars.values()))
    base = subgraph_labels(pair, side, labels)
    omega = {}
    for v in base.vertices:
        sv = base.sign(v)
        Tv = stars[v]
        for c in base.view.corners_at(v):
            anchor = c.start if sv == PLUS else c.end
            omega[(v, c.start)] = Tv.orientation_after(anchor)
    return OrientedGraph(base, omega, None)


def corner_data(G: OrientedGraph, X: Corner) -> CornerData:
    """Characters and Γ-orientations along a corner of a subgraph face."""
    labels, dirs = G.subcorner_dirs(X)
    v = X.vertex
    ch = G.base.char
    return CornerData(ch(X.start, v), ch(X.end, v), tuple(ch(l, v) for l in labels),
                      tuple(dirs), (X.start, *labels, X.end))


@dataclass(frozen=True)
class IndexBoundCheck:
    status: str          # OK | NOT_APPLICABLE | VIOLATION
    index: int
    qualities: tuple

    def to_json(self) -> dict:
        return {"status": self.status, "index": self.index, "corners": list(self.qualities)}


def good_corner_index_bound(G: OrientedGraph, F: Face, eta_c: int, eta_a: int) -> IndexBoundCheck:
    """All corners of F good (w.r.t. Γ) implies boundary index at most 0."""
    cyc = disk_cycles(F)
    if len(cyc) != 1:
        raise OrientationError("NOT_A_DISK", f"face {F.id} is not a disk")
    quals = [classify_corner(corner_data(G, X), eta_c, eta_a).classification for X in cyc[0].corners]
    if UGLY in quals:
        raise OrientationError("UGLY_PRESENT", "a corner of the face is ugly")
    ind = boundary_index(G, F)
    if any(q != GOOD for q in quals):
        return IndexBoundCheck("NOT_APPLICABLE", ind, tuple(quals))
    return IndexBoundCheck("OK" if ind <= 0 else "VIOLATION", ind, tuple(quals))
