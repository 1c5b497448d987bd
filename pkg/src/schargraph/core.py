"""Dual intersection graph pairs (G_P, G_Q) and their embedded views.

All data lives on the P side: ``matching`` pairs P-slots ``(v, x)`` where
``v`` is a vertex of G_P and ``x`` one of its labels (a vertex of G_Q). The
Q side is the transpose, slot ``(v, x)`` of G_P being slot ``(x, v)`` of
G_Q. Positive vertices list their labels 1..n counterclockwise, negative
vertices clockwise, so the embedding of both graphs is fixed by the
matching alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional

from .embedding import PlaneMap, Slot, View
from .signs import MINUS, PLUS, parse_sign, sign_str

SIDES = ("P", "Q")


class PairError(ValueError):
    """Malformed pair data or an invalid request against a pair."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str
    witness: tuple = ()

    def to_json(self) -> dict:
        return {"code": self.code, "detail": self.detail, "witness": _jsonable(self.witness)}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> list[str]:
        return sorted({v.code for v in self.violations})

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": [v.to_json() for v in self.violations]}


def _jsonable(obj):
    if isinstance(obj, (tuple, list)):
        return [_jsonable(o) for o in obj]
    return obj


def _norm_edge(e) -> tuple[Slot, Slot]:
    a, b = (tuple(int(i) for i in e[0]), tuple(int(i) for i in e[1]))
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class IntersectionPair:
    p: int
    q: int
    signs_p: tuple[int, ...]
    signs_q: tuple[int, ...]
    matching: tuple[tuple[Slot, Slot], ...]
    nesting: Optional[dict] = field(default=None, compare=False, hash=False)

    # --------------------------------------------------------------- builders
    @classmethod
    def build(cls, p: int, q: int, signs_p, signs_q, matching, nesting=None) -> "IntersectionPair":
        sp = tuple(parse_sign(s) for s in signs_p)
        sq = tuple(parse_sign(s) for s in signs_q)
        m = tuple(sorted(_norm_edge(e) for e in matching))
        return cls(int(p), int(q), sp, sq, m, nesting)

    @classmethod
    def from_json(cls, data: dict) -> "IntersectionPair":
        try:
            return cls.build(data["p"], data["q"], data["signsP"], data["signsQ"],
                             data["matching"], data.get("nesting"))
        except (KeyError, TypeError, IndexError) as exc:
            raise PairError("MALFORMED", f"unparseable fixture: {exc}") from exc

    @classmethod
    def load(cls, path) -> "IntersectionPair":
        return cls.from_json(json.loads(Path(path).read_text()))

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "q": self.q,
            "signsP": [sign_str(s) for s in self.signs_p],
            "signsQ": [sign_str(s) for s in self.signs_q],
            "matching": [[list(a), list(b)] for a, b in self.matching],
        }
        if self.nesting is not None:
            out["nesting"] = self.nesting
        return out

    # ------------------------------------------------------------ accessors
    def count(self, side: str) -> int:
        return self.p if side == "P" else self.q

    def signs(self, side: str) -> tuple[int, ...]:
        return self.signs_p if side == "P" else self.signs_q

    def sign(self, side: str, v: int) -> int:
        return self.signs(side)[v - 1]

    def parity(self, side: str, label: int) -> int:
        """Sign of ``label`` as a vertex of the other graph."""
        return self.signs(other(side))[label - 1]

    def char(self, side: str, label: int, v: int) -> int:
        return self.parity(side, label) * self.sign(side, v)

    def edges(self, side: str = "P") -> list[tuple[Slot, Slot]]:
        if side == "P":
            return list(self.matching)
        return [((a[1], a[0]), (b[1], b[0])) for a, b in self.matching]

    @cached_property
    def _slot_edge(self) -> dict[Slot, int]:
        return {s: i for i, e in enumerate(self.matching) for s in e}

    def edge_at(self, side: str, v: int, label: int) -> int:
        """Edge id at slot ``(v, label)`` of the given side."""
        key = (v, label) if side == "P" else (label, v)
        return self._slot_edge[key]

    def far_end(self, side: str, v: int, label: int) -> Slot:
        e = self.edge_at(side, v, label)
        a, b = self.edges(side)[e]
        return b if a == (v, label) else a

    def rotation(self, side: str) -> dict[int, tuple[int, ...]]:
        n_labels = self.count(other(side))
        rot = {}
        for v in range(1, self.count(side) + 1):
            labels = tuple(range(1, n_labels + 1))
            rot[v] = labels if self.sign(side, v) == PLUS else labels[::-1]
        return rot

    def _nesting_for(self, side: str):
        if not self.nesting or side not in self.nesting:
            return None
        return [(tuple(n["host"]), tuple(n["via"])) for n in self.nesting[side]]

    @cached_property
    def _maps(self) -> dict[str, PlaneMap]:
        return {side: PlaneMap(self.rotation(side), dict(enumerate(self.edges(side))),
                               self._nesting_for(side)) for side in SIDES}

    def plane_map(self, side: str) -> PlaneMap:
        return self._maps[side]

    def view(self, side: str, edge_ids: Optional[Iterable[int]] = None) -> "EmbeddedView":
        pmap = self.plane_map(side)
        ids = pmap.edges.keys() if edge_ids is None else edge_ids
        return EmbeddedView(self, side, View(pmap, ids))


def other(side: str) -> str:
    return "Q" if side == "P" else "P"


@dataclass
class EmbeddedView:
    """One side of a pair restricted to some edges, with its inherited faces."""

    pair: IntersectionPair
    side: str
    view: View
    exceptional: dict = field(default_factory=dict)

    @property
    def faces(self):
        return self.view.faces

    @property
    def vertices(self) -> list[int]:
        return self.view.vertices

    @property
    def edge_ids(self) -> frozenset[int]:
        return self.view.edge_ids

    def sign(self, v: int) -> int:
        return self.pair.sign(self.side, v)

    def char(self, label: int, v: int) -> int:
        return self.pair.char(self.side, label, v)

    def edge(self, e: int) -> tuple[Slot, Slot]:
        return self.view.map.edges[e]

    def sub(self, edge_ids: Iterable[int]) -> "EmbeddedView":
        return EmbeddedView(self.pair, self.side, View(self.view.map, edge_ids))


# --------------------------------------------------------------------------
# Operations
# --------------------------------------------------------------------------

def character(label: int, vertex: int, pair: IntersectionPair, side: str = "P") -> int:
    """char(x, v) = (parity x)(sign v)."""
    return pair.char(side, label, vertex)


def validate_pair(pair: IntersectionPair, require_connected: bool = False) -> ValidationReport:
    """Check slot coverage, parity rule, sign balance, genus and nesting.

    Disconnected graphs are accepted; without an explicit nesting table the
    default placement of :class:`PlaneMap` is used. ``require_connected``
    turns disconnection into a ``NESTING_INCONSISTENT`` violation instead.
    """
    rep = ValidationReport()
    add = rep.violations.append
    p, q = pair.p, pair.q
    if p <= 0 or q <= 0 or p % 2 or q % 2:
        add(Violation("MALFORMED", f"p={p}, q={q} must be even positive counts"))
        return rep
    if len(pair.signs_p) != p or len(pair.signs_q) != q:
        add(Violation("MALFORMED", "sign vectors do not match vertex counts"))
        return rep
    for side, n in (("P", p), ("Q", q)):
        signs = pair.signs(side)
        if sum(signs) != 0:
            add(Violation("SIGN_IMBALANCE",
                          f"G_{side} has {signs.count(PLUS)} positive and {signs.count(MINUS)} negative vertices",
                          (side,)))

    seen: dict[Slot, int] = {}
    for i, (a, b) in enumerate(pair.matching):
        for s in (a, b):
            if not (1 <= s[0] <= p and 1 <= s[1] <= q):
                add(Violation("SLOT_COVERAGE", f"slot {list(s)} out of range", (s,)))
            elif s in seen:
                add(Violation("SLOT_COVERAGE", f"slot {list(s)} covered twice", (s,)))
            seen[s] = i
    for v in range(1, p + 1):
        for x in range(1, q + 1):
            if (v, x) not in seen:
                add(Violation("SLOT_COVERAGE", f"slot {[v, x]} uncovered", ((v, x),)))
    if len(pair.matching) != p * q // 2 and not any(x.code == "SLOT_COVERAGE" for x in rep.violations):
        add(Violation("SLOT_COVERAGE", "matching size differs from pq/2"))
    if any(v.code in ("SLOT_COVERAGE", "MALFORMED") for v in rep.violations):
        return rep

    for a, b in pair.matching:
        if pair.char("P", a[1], a[0]) == pair.char("P", b[1], b[0]):
            add(Violation("PARITY_VIOLATION",
                          f"edge {list(a)}-{list(b)} joins two slots of character "
                          f"{sign_str(pair.char('P', a[1], a[0]))}", (a, b)))

    for side in SIDES:
        pmap = pair.plane_map(side)
        for comp, chi in pmap.component_euler():
            if chi != 2:
                add(Violation("GENUS_NONZERO",
                              f"G_{side} component {comp} has V-E+F={chi}", (side, tuple(comp))))
        if len(pmap.components) > 1:
            if require_connected and (not pair.nesting or side not in pair.nesting):
                add(Violation("NESTING_INCONSISTENT", f"G_{side} is disconnected and has no nesting map",
                              (side,)))
            try:
                problems = pmap.check_nesting()
            except (KeyError, TypeError, ValueError) as exc:
                problems = [f"unreadable nesting: {exc}"]
            for msg in problems:
                add(Violation("NESTING_INCONSISTENT", f"G_{side}: {msg}", (side,)))
        elif pair.nesting and pair.nesting.get(side):
            add(Violation("NESTING_INCONSISTENT", f"G_{side} is connected but nesting given", (side,)))
    return rep


def trace_faces(view: EmbeddedView):
    """Faces of an embedded view (regions of the sphere minus the view)."""
    return view.view.faces


def subgraph_labels(pair: IntersectionPair, side: str, labels: Iterable[int]) -> EmbeddedView:
    """G_S(L): edges with at least one endpoint at a label in ``labels``.

    ``exceptional`` on the result maps each vertex to the labels outside L
    at which the kept edges meet it.
    """
    L = set(labels)
    if not L:
        raise PairError("EMPTY_SELECTION", "label set is empty")
    edges = pair.edges(side)
    keep = [i for i, (a, b) in enumerate(edges) if a[1] in L or b[1] in L]
    exc: dict[int, list[int]] = {}
    for i in keep:
        for v, x in edges[i]:
            if x not in L:
                exc.setdefault(v, []).append(x)
    view = pair.view(side, keep)
    view.exceptional = {v: sorted(xs) for v, xs in sorted(exc.items())}
    return view


def edge_set_between(pair: IntersectionPair, side: str, V: Iterable[int], W: Iterable[int]) -> list[int]:
    """[V, W]: edges of G_S with one end at a V vertex and the other at a W vertex."""
    V, W = set(V), set(W)
    return [i for i, (a, b) in enumerate(pair.edges(side))
            if (a[0] in V and b[0] in W) or (a[0] in W and b[0] in V)]


def bridge_width(b: int) -> int:
    """Width sum 2 + 4 + ... + 2b + ... + 4 + 2 of a b-bridge presentation."""
    if b < 1:
        raise ValueError("bridge number must be at least 1")
    levels = list(range(2, 2 * b + 1, 2)) + list(range(2 * b - 2, 0, -2))
    return sum(levels)


def mutate_swap(pair: IntersectionPair, e1: int, e2: int, end1: int = 0, end2: int = 0) -> IntersectionPair:
    """Swap one slot between two edges (used by mutation tests)."""
    m = [list(e) for e in pair.matching]
    m[e1][end1], m[e2][end2] = m[e2][end2], m[e1][end1]
    return IntersectionPair.build(pair.p, pair.q, pair.signs_p, pair.signs_q, m, pair.nesting)
