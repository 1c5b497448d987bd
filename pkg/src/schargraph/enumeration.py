"""Deterministic enumeration of valid intersection pairs.

Matchings are built slot by slot in lexicographic order: the smallest
unmatched P-slot is paired with each admissible partner in increasing
order. A partial matching is dropped as soon as either graph, restricted
to the edges placed so far, has positive genus; deleting edges never
raises genus, so no valid completion is lost.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import IntersectionPair
from .signs import MINUS, PLUS

DEFAULT_BUDGET = 16
BUDGET_ENV = "SCHARGRAPH_BUDGET"


class BudgetExceeded(ValueError):
    code = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class EnumerationSpec:
    p: int
    q: int
    signs_p: Optional[tuple[int, ...]] = None
    signs_q: Optional[tuple[int, ...]] = None
    connected_only: bool = False
    iso_reduction: bool = False
    budget: Optional[int] = None


def balanced_patterns(n: int) -> list[tuple[int, ...]]:
    """All sign vectors of length n with n/2 of each sign, lexicographic with + first."""
    out = []
    for plus in itertools.combinations(range(n), n // 2):
        out.append(tuple(PLUS if i in plus else MINUS for i in range(n)))
    return sorted(out, reverse=True)


def _rotation(signs, n_labels):
    labels = tuple(range(1, n_labels + 1))
    return [labels if s == PLUS else labels[::-1] for s in signs]


class _PartialMap:
    """One side of a partial matching, kept on the sphere edge by edge.

    An edge may join two corners of the same face (the face splits) or two
    different components (they merge); anything else creates a handle.
    Both tests are local, so each insertion costs one face walk.
    """

    def __init__(self, rotations):
        self.rot = rotations                      # vertex -> labels, counterclockwise
        self.pos = {v: {a: i for i, a in enumerate(r)} for v, r in rotations.items()}
        self.used = {v: [] for v in rotations}    # used labels in rotation order
        self.partner: dict = {}
        self.parent = {v: v for v in rotations}
        self.undo: list = []

    def _find(self, v):
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def _corner(self, v, a):
        """Start label of the used corner at v holding position a (None if v is bare)."""
        u = self.used[v]
        if not u:
            return None
        p = self.pos[v][a]
        best = u[-1]
        for x in u:
            if self.pos[v][x] < p:
                best = x
            else:
                break
        return best

    def _succ(self, v, x):
        u = self.used[v]
        return u[(u.index(x) + 1) % len(u)]

    def _same_face(self, s, t) -> bool:
        cur = s
        while True:
            v, x = cur
            cur = self.partner[(v, self._succ(v, x))]
            if cur == t:
                return True
            if cur == s:
                return False

    def admissible(self, s, t) -> bool:
        (v, a), (w, b) = s, t
        rv, rw = self._find(v), self._find(w)
        if rv != rw:
            return True
        cs, ct = self._corner(v, a), self._corner(w, b)
        if cs is None or ct is None:
            return True
        if (v, cs) == (w, ct):
            return True
        return self._same_face((v, cs), (w, ct))

    def add(self, s, t):
        v, w = s[0], t[0]
        rv, rw = self._find(v), self._find(w)
        merged = None
        if rv != rw:
            self.parent[rw] = rv
            merged = rw
        for (x, lab) in (s, t):
            u = self.used[x]
            p = self.pos[x][lab]
            i = 0
            while i < len(u) and self.pos[x][u[i]] < p:
                i += 1
            u.insert(i, lab)
        self.partner[s], self.partner[t] = t, s
        self.undo.append((s, t, merged))

    def pop(self):
        s, t, merged = self.undo.pop()
        for (x, lab) in (s, t):
            self.used[x].remove(lab)
        del self.partner[s], self.partner[t]
        if merged is not None:
            self.parent[merged] = merged


def _matchings(p: int, q: int, signs_p, signs_q) -> Iterator[tuple]:
    mp = _PartialMap(dict(enumerate(_rotation(signs_p, q), start=1)))
    mq = _PartialMap(dict(enumerate(_rotation(signs_q, p), start=1)))
    slots = [(v, x) for v in range(1, p + 1) for x in range(1, q + 1)]
    char = {(v, x): signs_q[x - 1] * signs_p[v - 1] for v, x in slots}
    free = set(slots)

    def rec():
        if not free:
            yield tuple(sorted((a, b) for a, b in mp.partner.items() if a < b))
            return
        s = min(free)
        free.discard(s)
        for t in sorted(free):
            if char[t] == char[s]:
                continue
            sq, tq = (s[1], s[0]), (t[1], t[0])
            if not (mp.admissible(s, t) and mq.admissible(sq, tq)):
                continue
            free.discard(t)
            mp.add(s, t)
            mq.add(sq, tq)
            yield from rec()
            mp.pop()
            mq.pop()
            free.add(t)
        free.add(s)

    yield from rec()


def budget_limit(spec: EnumerationSpec) -> int:
    if spec.budget is not None:
        return spec.budget
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def _images(pair: IntersectionPair):
    """(signs_p, signs_q, matching) under every cyclic shift of P and Q indices.

    Shifting vertex indices of one graph shifts the labels of the other by
    the same amount, which preserves every cyclic label order and hence
    both rotation systems.
    """
    p, q = pair.p, pair.q
    for i in range(p):
        for j in range(q):
            sp = tuple(pair.signs_p[(v - i) % p] for v in range(p))
            sq = tuple(pair.signs_q[(x - j) % q] for x in range(q))
            m = []
            for a, b in pair.matching:
                a2 = ((a[0] - 1 + i) % p + 1, (a[1] - 1 + j) % q + 1)
                b2 = ((b[0] - 1 + i) % p + 1, (b[1] - 1 + j) % q + 1)
                m.append((a2, b2) if a2 <= b2 else (b2, a2))
            yield sp, sq, tuple(sorted(m))


def canonical_form(pair: IntersectionPair) -> tuple:
    """Least (signs, matching) key over cyclic shifts of the P and Q indices."""
    return min(_images(pair))


def enumerate_pairs(spec: EnumerationSpec) -> Iterator[IntersectionPair]:
    """All valid pairs for the spec, in deterministic order.

    Every matching produced by the search already satisfies the parity rule
    and has genus zero on both sides, so no separate validation pass runs
    here. With ``iso_reduction`` the first pair of each cyclic-shift class
    is kept. Raises :class:`BudgetExceeded` when p*q is above the budget
    (default 16, i.e. p, q <= 4; override with ``SCHARGRAPH_BUDGET``).
    """
    if spec.p * spec.q > budget_limit(spec):
        raise BudgetExceeded(f"BUDGET_EXCEEDED: p*q={spec.p * spec.q} > {budget_limit(spec)}")
    pats_p = [tuple(spec.signs_p)] if spec.signs_p is not None else balanced_patterns(spec.p)
    pats_q = [tuple(spec.signs_q)] if spec.signs_q is not None else balanced_patterns(spec.q)
    seen = set()
    for sp in pats_p:
        for sq in pats_q:
            if sum(sp) != 0 or sum(sq) != 0 or len(sp) != spec.p or len(sq) != spec.q:
                continue
            for m in _matchings(spec.p, spec.q, sp, sq):
                if spec.iso_reduction and (sp, sq, m) in seen:
                    continue
                pair = IntersectionPair(spec.p, spec.q, sp, sq, m)
                if spec.connected_only and any(
                        len(pair.plane_map(s).components) > 1 for s in ("P", "Q")):
                    continue
                if spec.iso_reduction:
                    seen.update(_images(pair))
                yield pair
