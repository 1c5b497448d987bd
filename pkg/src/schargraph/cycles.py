"""Cycle-level structure of one graph of a pair.

Detectors for x-cycles (and their great / Scharlemann refinements), great
webs, (s)-sets, the descent from a cycle-bounded disk to an innermost
(s)-set, tree/cycle certificates on G_P, and the parallel / antiparallel
properties.

Statements that only hold for pairs realized by an actual knot exterior
(uniqueness of Scharlemann data, no isolated vertices, ...) are reported as
``Violation`` flags on the instance rather than raised.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import EmbeddedView, IntersectionPair, PairError, Violation, edge_set_between, other
from .embedding import Face

EXHAUSTIVE_LIMIT = 12


@dataclass(frozen=True)
class XCycle:
    label: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    sign: int
    head_labels: tuple[int, ...]
    great: bool
    scharlemann: bool

    @property
    def new(self) -> bool:
        return not self.scharlemann

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted({self.label, *self.head_labels}))

    def to_json(self) -> dict:
        kind = "scharlemann" if self.scharlemann else ("great" if self.great else "new")
        return {"kind": kind, "label": self.label, "labels": list(self.labels),
                "order": self.order, "vertices": list(self.vertices), "edges": list(self.edges),
                "sign": self.sign, "great": self.great, "new": self.new}


@dataclass(frozen=True)
class GreatWeb:
    vertices: frozenset[int]
    m: int
    disk_witness: int
    connected: bool

    def to_json(self) -> dict:
        return {"kind": "great_web", "vertices": sorted(self.vertices), "m": self.m,
                "disk_witness": self.disk_witness, "connected": self.connected}


@dataclass(frozen=True)
class SSet:
    sign: int
    vertices: frozenset[int]
    leave_labels: frozenset[int]
    innermost: bool
    disk_witness: Optional[int] = None
    leaving_edges: int = 0
    flags: tuple[Violation, ...] = ()

    def to_json(self) -> dict:
        return {"kind": "s_set", "sign": self.sign, "vertices": sorted(self.vertices),
                "leave_labels": sorted(self.leave_labels), "innermost": self.innermost,
                "disk_witness": self.disk_witness, "leaving_edges": self.leaving_edges,
                "flags": [f.to_json() for f in self.flags]}


@dataclass(frozen=True)
class TreeCertificate:
    root: int
    edges: tuple[tuple[int, int, int], ...]   # (edge id, tail vertex, head vertex)
    source_set: frozenset
    target_set: frozenset

    def to_json(self) -> dict:
        return {"kind": "tree", "root": self.root,
                "edges": [list(e) for e in self.edges],
                "source_set": _plain(self.source_set),
                "target_set": _plain(self.target_set)}


def _plain(items) -> list:
    return sorted(list(x) if isinstance(x, (tuple, frozenset)) else x for x in items)


@dataclass(frozen=True)
class ComponentClass:
    """Classification of one component of the oriented [V, W] subgraph."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    kind: str                      # "tree", "cycle" or "other"
    tree: Optional[TreeCertificate] = None
    cycle: tuple[tuple[int, int, int], ...] = ()
    parallel: bool = True

    @property
    def undirected_acyclic(self) -> bool:
        return len(self.edges) == len(self.vertices) - 1

    def to_json(self) -> dict:
        out = {"kind": self.kind, "vertices": list(self.vertices),
               "edges": [list(e) for e in self.edges], "parallel": self.parallel}
        if self.tree is not None:
            out["tree"] = self.tree.to_json()
        if self.cycle:
            out["cycle"] = [list(e) for e in self.cycle]
        return out


# --------------------------------------------------------------------------
# x-cycles
# --------------------------------------------------------------------------

def _x_map(view: EmbeddedView, x: int, vertices: Optional[set]) -> dict[int, tuple[int, int, int]]:
    """v -> (w, edge id, head label) following the view edge whose tail is (v, x)."""
    pair, side = view.pair, view.side
    out = {}
    for v in view.vertices:
        if vertices is not None and v not in vertices:
            continue
        e = pair.edge_at(side, v, x)
        if e not in view.edge_ids:
            continue
        w, y = pair.far_end(side, v, x)
        if vertices is not None and w not in vertices:
            continue
        out[v] = (w, e, y)
    return out


def _cycle_sides(view: EmbeddedView, edges: Iterable[int]) -> list[Face]:
    return view.view.sides_of_cycle(edges)


def _classify(view: EmbeddedView, sign: int, edges: tuple[int, ...]) -> tuple[bool, bool]:
    great = scharlemann = False
    for side in _cycle_sides(view, edges):
        if all(view.sign(u) == sign for u in side.inner_vertices):
            great = True
            if not side.inner_vertices and not (side.inner_edges & view.edge_ids):
                scharlemann = True
    return great, scharlemann


def find_x_cycles(view: EmbeddedView, x: int, vertices: Optional[Iterable[int]] = None) -> list[XCycle]:
    """Directed cycles on parallel vertices whose edge tails all sit at label ``x``.

    With ``vertices`` given, only edges with both ends in that set are followed.
    """
    n_labels = view.pair.count(other(view.side))
    if not 1 <= x <= n_labels:
        raise PairError("LABEL_RANGE", f"label {x} outside 1..{n_labels}")
    vs = set(vertices) if vertices is not None else None
    fmap = _x_map(view, x, vs)
    state: dict[int, int] = {}
    found = []
    for start in sorted(fmap):
        if start in state:
            continue
        path = []
        v = start
        while v in fmap and v not in state:
            state[v] = 1
            path.append(v)
            v = fmap[v][0]
        if v in state and state[v] == 1 and v in path:
            cyc = path[path.index(v):]
            signs = {view.sign(u) for u in cyc}
            if len(signs) == 1:
                k = cyc.index(min(cyc))
                cyc = cyc[k:] + cyc[:k]
                edges = tuple(fmap[u][1] for u in cyc)
                heads = tuple(fmap[u][2] for u in cyc)
                sign = signs.pop()
                great, sch = _classify(view, sign, edges)
                found.append(XCycle(x, tuple(cyc), edges, sign, heads, great, sch))
        for u in path:
            state[u] = 2
    return found


def all_x_cycles(view: EmbeddedView, vertices: Optional[Iterable[int]] = None) -> list[XCycle]:
    """x-cycles for every label; a cycle found under several labels is kept once."""
    n_labels = view.pair.count(other(view.side))
    seen = set()
    out = []
    for x in range(1, n_labels + 1):
        for c in find_x_cycles(view, x, vertices):
            key = frozenset(c.edges)
            if key not in seen:
                seen.add(key)
                out.append(c)
    return out


def scharlemann_cycles(view: EmbeddedView) -> list[XCycle]:
    return [c for c in all_x_cycles(view) if c.scharlemann]


def scharlemann_consistency(view: EmbeddedView) -> dict:
    """CONSISTENT when every Scharlemann cycle has the same labels and order."""
    cycles = scharlemann_cycles(view)
    out = {"status": "CONSISTENT", "cycles": [c.to_json() for c in cycles], "flags": []}
    for a, b in itertools.combinations(cycles, 2):
        if a.labels != b.labels or a.order != b.order:
            out["status"] = "FLAG_NONREALIZABLE"
            out["flags"].append(Violation(
                "SCH_UNIQUE", f"labels {list(a.labels)} order {a.order} vs "
                f"labels {list(b.labels)} order {b.order}",
                (a.vertices, b.vertices)).to_json())
            break
    return out


def new_great_x_cycles(view: EmbeddedView) -> list[XCycle]:
    return [c for c in all_x_cycles(view) if c.great and c.new]


# --------------------------------------------------------------------------
# vertex sets
# --------------------------------------------------------------------------

def _induced(view: EmbeddedView, V: set) -> EmbeddedView:
    keep = [e for e in view.edge_ids
            if view.edge(e)[0][0] in V and view.edge(e)[1][0] in V]
    return view.sub(keep)


def _leaving(view: EmbeddedView, V: set) -> list[tuple[int, int, int]]:
    """(edge, vertex in V, label there) for each view edge with exactly one end in V."""
    out = []
    for e in sorted(view.edge_ids):
        a, b = view.edge(e)
        if (a[0] in V) != (b[0] in V):
            inside = a if a[0] in V else b
            out.append((e, inside[0], inside[1]))
    return out


def disk_witness(view: EmbeddedView, V: Iterable[int]) -> Optional[int]:
    """Face id of G[V] holding every vertex outside V, or None."""
    V = set(V)
    others = set(view.vertices) - V
    ind = _induced(view, V)
    for f in ind.faces:
        if others <= f.inner_vertices:
            return f.id
    return None


def _connected(view: EmbeddedView, V: set) -> bool:
    comps = _induced(view, V).view.components
    return sum(1 for c in comps if c[0] in V) == 1


def _parallel_components(view: EmbeddedView, sign: int) -> list[list[int]]:
    parent = {v: v for v in view.vertices if view.sign(v) == sign}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in view.edge_ids:
        (v, _), (w, _) = view.edge(e)
        if v in parent and w in parent:
            parent[find(w)] = find(v)
    groups = defaultdict(list)
    for v in sorted(parent):
        groups[find(v)].append(v)
    return sorted(groups.values())


def _candidate_sets(view: EmbeddedView, sign: int):
    cls = [v for v in view.vertices if view.sign(v) == sign]
    if len(cls) <= EXHAUSTIVE_LIMIT:
        for k in range(1, len(cls) + 1):
            for sub in itertools.combinations(cls, k):
                yield frozenset(sub)
        return
    # connected subsets of the parallel subgraph, grown from their least vertex
    adj = defaultdict(set)
    for e in view.edge_ids:
        (v, _), (w, _) = view.edge(e)
        if view.sign(v) == sign and view.sign(w) == sign and v != w:
            adj[v].add(w)
            adj[w].add(v)
    seen = set()
    for root in cls:
        stack = [frozenset([root])]
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            yield s
            for u in set().union(*(adj[v] for v in s)) - s:
                if u > root:
                    stack.append(s | {u})


def find_great_webs(view: EmbeddedView, m: int) -> list[GreatWeb]:
    """Uniform-sign sets enclosed by a face of G[Λ] and left by exactly ``m`` edges."""
    out = []
    for sign in (1, -1):
        for V in _candidate_sets(view, sign):
            if len(_leaving(view, set(V))) != m:
                continue
            w = disk_witness(view, V)
            if w is not None:
                out.append(GreatWeb(V, m, w, _connected(view, set(V))))
    return sorted(out, key=lambda g: (len(g.vertices), sorted(g.vertices)))


def web_number_check(n: int, v: int) -> dict:
    if n < 2 or v < 1:
        raise ValueError("need n >= 2 and v >= 1")
    return {"divides": v % n == 0, "proper": n != v, "min_ok": v >= 4}


def _s_set_flags(view: EmbeddedView, V: frozenset, leave_labels: frozenset,
                 n_leaving: int, internal: EmbeddedView) -> tuple[Violation, ...]:
    n_labels = view.pair.count(other(view.side))
    regular = set(range(3, n_labels + 1))
    flags = []
    if len(V) < 2:
        flags.append(Violation("SDISK_PROPS", "innermost set has a single vertex", tuple(sorted(V))))
    if not regular <= leave_labels:
        flags.append(Violation("SDISK_PROPS", "some regular label has no leaving edge",
                               tuple(sorted(regular - leave_labels))))
    has_sch = any(c.scharlemann and set(c.vertices) <= V for c in all_x_cycles(view, V))
    if not has_sch and leave_labels != set(range(1, n_labels + 1)):
        flags.append(Violation("SDISK_PROPS", "no Scharlemann cycle yet V* is not every label",
                               tuple(sorted(leave_labels))))
    if n_leaving == n_labels - 2:
        for x in sorted(regular):
            k = sum(1 for v in V if view.pair.edge_at(view.side, v, x) in internal.edge_ids)
            if k != len(V) - 1:
                flags.append(Violation("EDGES_IN_SDISKS",
                                       f"label {x} meets {k} internal edges, expected {len(V) - 1}",
                                       (x, k)))
    return tuple(flags)


def s_set(view: EmbeddedView, V: Iterable[int]) -> SSet:
    V = frozenset(V)
    signs = {view.sign(v) for v in V}
    if len(signs) != 1:
        raise PairError("NOT_UNIFORM", "vertex set mixes signs")
    sign = signs.pop()
    leaving = _leaving(view, set(V))
    if any(view.sign(view.edge(e)[0][0] if view.edge(e)[0][0] not in V else view.edge(e)[1][0]) == sign
           for e, _, _ in leaving):
        raise PairError("NOT_S_SET", "an edge leaves the set to a parallel vertex")
    labels = frozenset(x for _, _, x in leaving)
    w = disk_witness(view, V)
    flags = ()
    if w is not None:
        flags = _s_set_flags(view, V, labels, len(leaving), _induced(view, set(V)))
    return SSet(sign, V, labels, w is not None, w, len(leaving), flags)


def find_s_sets(view: EmbeddedView) -> list[SSet]:
    """Connected (s)-sets of both signs, i.e. components of the parallel-edge subgraph."""
    out = []
    for sign in (1, -1):
        for comp in _parallel_components(view, sign):
            out.append(s_set(view, comp))
    return out


def isolated_vertices(view: EmbeddedView) -> list[int]:
    """Vertices all of whose view edges reach antiparallel vertices."""
    out = []
    for v in view.vertices:
        parallel = False
        for e in view.edge_ids:
            a, b = view.edge(e)
            for s, t in ((a, b), (b, a)):
                if s[0] == v and view.sign(t[0]) == view.sign(v):
                    parallel = True
        if not parallel:
            out.append(v)
    return out


# --------------------------------------------------------------------------
# descent to an innermost (s)-set
# --------------------------------------------------------------------------

@dataclass
class Descent:
    s_set: SSet
    iterations: int
    chain: list[list[int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"s_set": self.s_set.to_json(), "iterations": self.iterations, "chain": self.chain}


def cycle_sides(view: EmbeddedView, edges: Iterable[int]) -> list[Face]:
    return _cycle_sides(view, edges)


def descend_to_s_disk(view: EmbeddedView, cycle_edges: Iterable[int], side: int | Face) -> Descent:
    """Innermost (s)-set inside one side of a cycle on parallel vertices.

    ``side`` is an index into :func:`cycle_sides` or one of its faces. At each
    step an opposite-sign (s)-set inside the current disk is taken; if no face
    of its induced graph holds every other vertex, the next disk is a face of
    that induced graph containing vertices of the opposite sign.
    """
    cycle_edges = list(cycle_edges)
    sides = _cycle_sides(view, cycle_edges)
    face = sides[side] if isinstance(side, int) else side
    cyc_vertices = {s[0] for e in cycle_edges for s in view.edge(e)}
    sign = view.sign(min(cyc_vertices))
    inside = set(face.inner_vertices)
    if all(view.sign(u) == sign for u in inside):
        raise PairError("TRIVIAL_DISK", "the chosen side holds only parallel vertices")
    chain = []
    outside_marker = set(cyc_vertices)
    for it in itertools.count(1):
        comps = [c for c in _parallel_components(view, -sign) if set(c) <= inside]
        if not comps:
            raise PairError("TRIVIAL_DISK", "no opposite-sign set inside the disk")
        next_disk = None
        for comp in comps:
            chain.append(comp)
            ss = s_set(view, comp)
            if ss.innermost:
                return Descent(ss, it, chain)
            ind = _induced(view, set(comp))
            for f in ind.faces:
                if f.inner_vertices & outside_marker:
                    continue
                inner = set(f.inner_vertices) & inside
                if any(view.sign(u) == sign for u in inner):
                    next_disk = (comp, inner)
                    break
            if next_disk:
                break
            chain.pop()
        if next_disk is None:
            raise PairError("TRIVIAL_DISK", "descent found no nontrivial inner disk")
        comp, inside = next_disk
        outside_marker = set(comp)
        sign = -sign
    raise AssertionError("unreachable")


# --------------------------------------------------------------------------
# G_P certificates and properties
# --------------------------------------------------------------------------

def trees_or_cycles(pair: IntersectionPair, V: Iterable[int], W: Iterable[int],
                    roots: Iterable[int] = (1, 2)) -> list[ComponentClass]:
    """Orient the [V, W] edges of G_P from V label to W label and classify components.

    ``V`` and ``W`` are vertex sets of G_Q (labels of G_P). A component whose
    edges all point toward a single root in ``roots`` is a tree certificate;
    a component holding a directed cycle returns that cycle.
    """
    V, W = set(V), set(W)
    roots = set(roots)
    arcs = []
    for e in edge_set_between(pair, "Q", V, W):
        a, b = pair.edges("P")[e]
        # P slot (v, x): x is the Q vertex
        if a[1] in V and b[1] in W:
            arcs.append((e, a[0], b[0], a, b))
        elif b[1] in V and a[1] in W:
            arcs.append((e, b[0], a[0], b, a))
    if not arcs:
        return []
    verts = sorted({t for _, t, _, _, _ in arcs} | {h for _, _, h, _, _ in arcs})
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for _, t, h, _, _ in arcs:
        parent[find(t)] = find(h)
    groups = defaultdict(list)
    for v in verts:
        groups[find(v)].append(v)
    out = []
    for comp in sorted(groups.values()):
        cs = set(comp)
        carcs = [a for a in arcs if a[1] in cs]
        edges = tuple((e, t, h) for e, t, h, _, _ in carcs)
        parallel = len({pair.sign("P", v) for v in comp}) == 1
        cyc = _directed_cycle(edges)
        if cyc:
            out.append(ComponentClass(tuple(comp), edges, "cycle", cycle=cyc, parallel=parallel))
            continue
        outdeg = defaultdict(int)
        for _, t, _ in edges:
            outdeg[t] += 1
        sinks = [v for v in comp if outdeg[v] == 0]
        is_tree = (len(edges) == len(comp) - 1 and len(sinks) == 1
                   and all(outdeg[v] == 1 for v in comp if v != sinks[0]))
        if is_tree and sinks[0] in roots:
            cert = TreeCertificate(sinks[0], edges,
                                   frozenset(a[3] for a in carcs), frozenset(a[4] for a in carcs))
            out.append(ComponentClass(tuple(comp), edges, "tree", tree=cert, parallel=parallel))
        else:
            out.append(ComponentClass(tuple(comp), edges, "other", parallel=parallel))
    for c in out:
        if c.kind != "cycle" and c.undirected_acyclic:
            assert len(c.vertices) > len(c.edges)
    return out


def _directed_cycle(edges) -> tuple:
    """Some directed cycle among (edge, tail, head) triples, or ()."""
    out_arcs = defaultdict(list)
    for a in edges:
        out_arcs[a[1]].append(a)
    color: dict[int, int] = {}
    stack_arcs: list = []

    def dfs(v):
        color[v] = 1
        for a in out_arcs[v]:
            stack_arcs.append(a)
            h = a[2]
            if color.get(h) == 1:
                k = next(i for i, b in enumerate(stack_arcs) if b[1] == h)
                return tuple(stack_arcs[k:])
            if h not in color:
                r = dfs(h)
                if r:
                    return r
            stack_arcs.pop()
        color[v] = 2
        return ()

    for v in sorted(out_arcs):
        if v not in color:
            r = dfs(v)
            if r:
                return r
    return ()


def _property_scan(pair: IntersectionPair, side: str, V: set, L: set) -> tuple[bool, bool]:
    def parallel_at(x, y):
        w, _ = pair.far_end(side, x, y)
        return pair.sign(side, w) == pair.sign(side, x)

    P = all(any(parallel_at(x, y) for y in L) for x in V)
    A = all(any(not parallel_at(x, y) for x in V) for y in L)
    return P, A


def check_properties(pair: IntersectionPair, side: str, V: Iterable[int], L: Iterable[int]) -> dict:
    """Parallel property P(V, L) and antiparallel property A(V, L) on one side.

    The duality A_S(V, L) == P_T(L, V) is checked against the other side and
    reported under ``duality``.
    """
    V, L = set(V), set(L)
    P, A = _property_scan(pair, side, V, L)
    P_dual, A_dual = _property_scan(pair, other(side), L, V)
    return {"P": P, "A": A, "duality": A == P_dual and P == A_dual}
