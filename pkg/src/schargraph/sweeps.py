"""Exhaustive combinatorial sweeps behind the class-U lemma checks.

Each sweep returns a :class:`Tally`. A sweep never raises on a failed
instance; it records a witness payload instead so that callers can report
it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .corners import GOOD, CornerData, classify_corner, is_double_sided
from .mapenum import even_maps
from .orientation import OrientationError, check_two_color, two_color
from .signs import IN, OUT, flip, sign_str
from .stars import (Star, StarError, a_tilde, check_sequence, derivative,
                    derivative_relative, sequence_of_coherence)

WITNESS_LIMIT = 5


@dataclass
class Tally:
    checked: int = 0
    failed: int = 0
    skipped: int = 0
    witnesses: list = field(default_factory=list)

    def record(self, ok: bool, witness=None) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if witness is not None and len(self.witnesses) < WITNESS_LIMIT:
                self.witnesses.append(witness)

    def merge(self, other: "Tally") -> "Tally":
        self.checked += other.checked
        self.failed += other.failed
        self.skipped += other.skipped
        room = WITNESS_LIMIT - len(self.witnesses)
        self.witnesses.extend(other.witnesses[:max(room, 0)])
        return self

    @property
    def ok(self) -> bool:
        return self.failed == 0


# --------------------------------------------------------------------------
# derivative containments
# --------------------------------------------------------------------------

# per-label states: (in L, in L0, omega after the label when in L)
_STATES = ((True, False, IN), (True, False, OUT), (False, True, None),
           (True, True, IN), (True, True, OUT))


@lru_cache(maxsize=None)
def _d(T: Star, chir: int) -> Optional[Star]:
    try:
        return derivative(T, chir)
    except StarError:
        return None


@lru_cache(maxsize=None)
def _d0(T: Star, L0: frozenset, chir: int) -> Optional[Star]:
    try:
        return derivative_relative(T, L0, chir)
    except StarError:
        return None


def _canonical(pars: tuple, states: tuple) -> bool:
    """True for the least representative under rotation and global parity flip."""
    key = (pars, states)
    n = len(pars)
    neg = tuple(-p for p in pars)
    for k in range(n):
        for ps in (pars, neg):
            img = (ps[k:] + ps[:k], states[k:] + states[:k])
            if img < key:
                return False
    return True


def containment_instances(max_labels: int, reduce: bool = True) -> Iterator[tuple[Star, frozenset]]:
    """(T, L0) with sign +, every label in L or L0, up to the symmetry group when ``reduce``.

    Labels outside L ∪ L0 never influence a derivative, so they are dropped;
    sign − stars follow from d^±(−T) = −(d^±T).
    """
    for n in range(1, max_labels + 1):
        labels = tuple(range(1, n + 1))
        for pars in itertools.product((1, -1), repeat=n):
            for states in itertools.product(range(len(_STATES)), repeat=n):
                if reduce and not _canonical(pars, states):
                    continue
                L = tuple(l for l, s in zip(labels, states) if _STATES[s][0])
                if not L:
                    continue
                L0 = frozenset(l for l, s in zip(labels, states) if _STATES[s][1])
                omega = tuple(_STATES[s][2] for s in states if _STATES[s][0])
                yield Star(1, labels, pars, L, omega), L0


def containment_sweep(max_labels: int = 6, depth: int = 3, reduce: bool = True) -> Tally:
    """C(DT) ⊂ C(D0T) and Ã(DT) ⊃ Ã(D0T) for every word of length ≤ depth."""
    tally = Tally()
    for T, L0 in containment_instances(max_labels, reduce):
        stack = [(T, T, ())]
        while stack:
            X, X0, word = stack.pop()
            if len(word) == depth:
                continue
            for s in (1, -1):
                Y, Y0 = _d(X, s), _d0(X0, L0, s)
                if Y is None or Y0 is None:
                    tally.skipped += 1
                    continue
                ok = set(Y.C) <= set(Y0.C) and set(a_tilde(Y, L0)) >= set(a_tilde(Y0, L0))
                tally.record(ok, {"star": T.to_json(), "L0": sorted(L0),
                                  "word": [sign_str(c) for c in word + (s,)]})
                stack.append((Y, Y0, word + (s,)))
    _d.cache_clear()
    _d0.cache_clear()
    return tally


# --------------------------------------------------------------------------
# sequences of coherence
# --------------------------------------------------------------------------

def coherence_sweep(max_labels: int = 8) -> Tally:
    """Every nontrivial type over every parity pattern with at most ``max_labels`` labels."""
    tally = Tally()
    for n in range(1, max_labels + 1):
        for pars in itertools.product((1, -1), repeat=n):
            for tau in itertools.product((1, -1), repeat=n):
                if len(set(tau)) == 1:
                    tally.skipped += 1
                    continue
                try:
                    seq = sequence_of_coherence(tau, pars)
                    problems = check_sequence(seq)
                except StarError as exc:
                    problems = [exc.code]
                tally.record(not problems, {"parities": list(pars), "tau": list(tau),
                                            "problems": problems})
    return tally


# --------------------------------------------------------------------------
# corners and faces
# --------------------------------------------------------------------------

def corner_configs(switches: int) -> Iterator[CornerData]:
    """Every corner with the given number of switches (alternating orientations)."""
    for sc in (1, -1):
        for ec in (1, -1):
            for o in (IN, OUT):
                orient = [o]
                for _ in range(switches):
                    orient.append(flip(orient[-1]))
                for chars in itertools.product((1, -1), repeat=switches):
                    yield CornerData(sc, ec, chars, tuple(orient))


def _good(X: CornerData, eta_c: int, eta_a: int) -> bool:
    return classify_corner(X, eta_c, eta_a).classification == GOOD


def split_sweep(max_switches: int = 6) -> tuple[Tally, Tally]:
    """Splitting a corner at a switch, and the mixed-switch goodness criterion.

    The first tally checks that a corner is good exactly when both halves are
    (double-sided switch) or when either half is (otherwise). The second
    checks that A-characters all −η_a together with η_c among the C
    characters force a good corner.
    """
    split, mixed = Tally(), Tally()
    for eta_c in (1, -1):
        for eta_a in (1, -1):
            for s in range(1, max_switches + 1):
                for X in corner_configs(s):
                    if X.ugly:
                        continue
                    g = _good(X, eta_c, eta_a)
                    for j, kind, ch in X.switches():
                        X1, X2 = X.split(j)
                        g1, g2 = _good(X1, eta_c, eta_a), _good(X2, eta_c, eta_a)
                        want = (g1 and g2) if is_double_sided(kind, ch, eta_c, eta_a) else (g1 or g2)
                        split.record(g == want, {"corner": repr(X), "at": j,
                                                 "eta_c": eta_c, "eta_a": eta_a})
                    if X.a_chars() == {-eta_a} and eta_c in X.c_chars():
                        mixed.record(g, {"corner": repr(X), "eta_c": eta_c, "eta_a": eta_a})
    return split, mixed



def face_index(seq: list[CornerData]) -> int:
    """Boundary index of a face given its corners in order."""
    k = len(seq)
    ind = sum(1 - X.s for X in seq)
    ind -= sum(1 for i in range(k) if seq[i].orient[-1] == seq[(i + 1) % k].orient[0])
    return ind


def good_face_sweep(max_corners: int = 4, max_switches: int = 6) -> Tally:
    """No face made of good corners has positive boundary index."""
    tally = Tally()
    for eta_c in (1, -1):
        for eta_a in (1, -1):
            good = {s: [X for X in corner_configs(s) if _good(X, eta_c, eta_a)]
                    for s in range(max_switches + 1)}

            def grow(seq, used):
                k = len(seq)
                if k and seq[-1].end_char == -seq[0].start_char:
                    ind = face_index(seq)
                    tally.record(ind <= 0, {"corners": [repr(X) for X in seq], "index": ind,
                                            "eta_c": eta_c, "eta_a": eta_a})
                if k == max_corners:
                    return
                for s in range(max_switches - used + 1):
                    for X in good[s]:
                        if k and X.start_char != -seq[-1].end_char:
                            continue
                        seq.append(X)
                        grow(seq, used + s)
                        seq.pop()

            grow([], 0)
    return tally


# --------------------------------------------------------------------------
# two-coloring
# --------------------------------------------------------------------------

def two_color_sweep(max_edges: int = 8) -> Tally:
    tally = Tally()
    for k, maps in even_maps(max_edges).items():
        for i, m in enumerate(maps):
            view = m.to_plane_map().full_view
            try:
                ok = check_two_color(view, two_color(view))
            except OrientationError:
                ok = False
            tally.record(ok, {"edges": k, "index": i, "sigma": m.sigma, "alpha": m.alpha})
    return tally
