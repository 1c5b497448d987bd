"""Exhaustive generation of connected even-degree plane maps.

Maps are kept as permutations on darts: ``sigma`` turns counterclockwise
around a vertex and ``alpha`` swaps the two darts of an edge. Starting
from a single vertex with one loop, three operations preserve planarity,
connectivity and even degrees:

* add a loop inside a corner (one more edge);
* subdivide an edge (one more edge and vertex);
* pinch two corners of distinct vertices lying on the same face into one
  vertex (one vertex fewer).

Every connected even-degree plane map can be reduced to the one-loop map by
the inverse operations, and the rooted counts are checked against the
closed formula 3 * 2^(n-1) * (2n)! / (n! (n+2)!) in the tests. Duplicates
are removed with a canonical code: the lexicographically least
breadth-first dart numbering over all roots.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator

from .embedding import PlaneMap


class DartMap:
    __slots__ = ("sigma", "alpha", "_code", "_aut")

    def __init__(self, sigma: list[int], alpha: list[int]):
        self.sigma = sigma
        self.alpha = alpha
        self._code = None
        self._aut = None

    @property
    def n_edges(self) -> int:
        return len(self.sigma) // 2

    def vertices(self) -> list[list[int]]:
        return _cycles(self.sigma)

    def faces(self) -> list[list[int]]:
        """Corners (named by the dart they follow) grouped by face."""
        sigma, alpha = self.sigma, self.alpha
        return _cycles([alpha[sigma[d]] for d in range(len(sigma))])

    def _canon(self):
        best, aut = None, 0
        for r in range(len(self.sigma)):
            c = _code_from(self.sigma, self.alpha, r)
            if best is None or c < best:
                best, aut = c, 1
            elif c == best:
                aut += 1
        self._code, self._aut = best, aut

    @property
    def code(self) -> tuple:
        if self._code is None:
            self._canon()
        return self._code

    @property
    def automorphisms(self) -> int:
        if self._aut is None:
            self._canon()
        return self._aut

    def to_plane_map(self) -> PlaneMap:
        rotation, edges = {}, {}
        where = {}
        for v, cyc in enumerate(self.vertices(), start=1):
            rotation[v] = tuple(range(1, len(cyc) + 1))
            for i, d in enumerate(cyc, start=1):
                where[d] = (v, i)
        for d in range(len(self.sigma)):
            e = self.alpha[d]
            if d < e:
                edges[len(edges)] = (where[d], where[e])
        return PlaneMap(rotation, edges)


def _cycles(perm: list[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for d in range(len(perm)):
        if seen[d]:
            continue
        cyc = []
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(cyc)
    return out


def _code_from(sigma, alpha, root) -> tuple:
    num = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        for nb in (alpha[d], sigma[d]):
            if nb not in num:
                num[nb] = len(order)
                order.append(nb)
        i += 1
    return tuple(num[alpha[d]] for d in order) + tuple(num[sigma[d]] for d in order)


def _children(m: DartMap, max_edges: int) -> Iterator[DartMap]:
    sigma, alpha = m.sigma, m.alpha
    n = len(sigma)
    if m.n_edges < max_edges:
        for x in range(n):                     # loop in the corner after x
            s = sigma + [n + 1, sigma[x]]
            s[x] = n
            yield DartMap(s, alpha + [n + 1, n])
        for d in range(n):                     # subdivide the edge of d
            e = alpha[d]
            if d > e:
                continue
            a = alpha + [d, e]
            a[d], a[e] = n, n + 1
            yield DartMap(sigma + [n + 1, n], a)
    vert = {}
    for k, cyc in enumerate(m.vertices()):
        for d in cyc:
            vert[d] = k
    for face in m.faces():                     # pinch two corners of one face
        for i, x in enumerate(face):
            for y in face[i + 1:]:
                if vert[x] != vert[y]:
                    s = list(sigma)
                    s[x], s[y] = sigma[y], sigma[x]
                    yield DartMap(s, list(alpha))


def even_maps(max_edges: int) -> dict[int, list[DartMap]]:
    """All connected even-degree plane maps with 1..max_edges edges, up to isomorphism."""
    seed = DartMap([1, 0], [1, 0])
    found = {seed.code: seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for m in frontier:
            for c in _children(m, max_edges):
                if c.code not in found:
                    found[c.code] = c
                    nxt.append(c)
        frontier = nxt
    out: dict[int, list[DartMap]] = {k: [] for k in range(1, max_edges + 1)}
    for m in found.values():
        out[m.n_edges].append(m)
    for k in out:
        out[k].sort(key=lambda m: m.code)
    return out


def rooted_even_count(n: int) -> int:
    """Number of rooted even-degree plane maps with n edges."""
    return 3 * 2 ** (n - 1) * factorial(2 * n) // (factorial(n) * factorial(n + 2))
