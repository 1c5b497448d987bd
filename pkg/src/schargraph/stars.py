"""Stars, L-types, switch partitions, derivatives and coherence sequences.

A star lives on a model fat vertex of sign +1 or -1. Its ambient labels are
listed in increasing order, which runs counterclockwise on the positive
model vertex and clockwise on the negative one (the negative vertex is the
mirror image). ``omega[i]`` is the dual orientation of the L-interval that
starts at ``L[i]`` and runs, in ambient order, to the next label of L.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .corners import CornerData, classify_corner, GOOD
from .signs import IN, MINUS, OUT, PLUS, flip, parse_sign, sign_str, uniform


class StarError(ValueError):
    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


def _dir_sign(d: str) -> int:
    return PLUS if d == OUT else MINUS


def _sign_dir(s: int) -> str:
    return OUT if s == PLUS else IN


@dataclass(frozen=True)
class SwitchPartition:
    A: tuple[int, ...]
    C: tuple[int, ...]
    Bplus: tuple[int, ...]
    Bminus: tuple[int, ...]
    phi: dict

    def to_json(self) -> dict:
        return {"A": list(self.A), "C": list(self.C), "Bplus": list(self.Bplus),
                "Bminus": list(self.Bminus),
                "phi": {str(k): sign_str(v) for k, v in sorted(self.phi.items())}}


@dataclass(frozen=True)
class Star:
    sign: int
    labels: tuple[int, ...]
    parities: tuple[int, ...]
    L: tuple[int, ...]
    omega: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.parities):
            raise StarError("MALFORMED", "one parity per ambient label")
        if list(self.labels) != sorted(set(self.labels)):
            raise StarError("MALFORMED", "ambient labels must be distinct and increasing")
        if not self.L:
            raise StarError("EMPTY_L", "a star needs at least one label in L")
        pos = self._pos
        if any(l not in pos for l in self.L) or list(self.L) != sorted(self.L, key=pos.__getitem__):
            raise StarError("MALFORMED", "L must be ambient labels in ambient order")
        if len(set(self.L)) != len(self.L):
            raise StarError("MALFORMED", "repeated label in L")
        if len(self.omega) != len(self.L) or any(o not in (IN, OUT) for o in self.omega):
            raise StarError("MALFORMED", "one in/out orientation per L-interval")

    # ------------------------------------------------------------ building
    @classmethod
    def make(cls, sign: int, parities: dict | Sequence[int], L: Iterable[int],
             omega: Sequence[str]) -> "Star":
        if isinstance(parities, dict):
            labels = tuple(sorted(parities))
            pars = tuple(parities[l] for l in labels)
        else:
            labels = tuple(range(1, len(parities) + 1))
            pars = tuple(parities)
        pos = {l: i for i, l in enumerate(labels)}
        L = tuple(sorted(set(L), key=lambda l: pos.get(l, -1)))
        return cls(sign, labels, pars, L, tuple(omega))

    @classmethod
    def from_json(cls, data: dict) -> "Star":
        try:
            sign = parse_sign(data["sign"])
            parities = {int(e["id"]): parse_sign(e["parity"]) for e in data["labels"]}
            return cls.make(sign, parities, [int(l) for l in data["L"]], list(data["omega"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, StarError):
                raise
            raise StarError("MALFORMED", str(exc)) from exc

    @classmethod
    def load(cls, path) -> "Star":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        return {"sign": sign_str(self.sign),
                "labels": [{"id": l, "parity": sign_str(p)} for l, p in zip(self.labels, self.parities)],
                "L": list(self.L), "omega": list(self.omega)}

    # ------------------------------------------------------------ accessors
    @cached_property
    def _pos(self) -> dict[int, int]:
        return {l: i for i, l in enumerate(self.labels)}

    def parity(self, label: int) -> int:
        return self.parities[self._pos[label]]

    def char(self, label: int) -> int:
        return self.parity(label) * self.sign

    def interval_interior(self, i: int) -> tuple[int, ...]:
        """Ambient labels strictly inside the L-interval starting at L[i]."""
        n = len(self.labels)
        a = self._pos[self.L[i]]
        b = self._pos[self.L[(i + 1) % len(self.L)]]
        span = (b - a) % n or n
        return tuple(self.labels[(a + k) % n] for k in range(1, span))

    def orientation_after(self, label: int) -> str:
        """Orientation of the L-interval just after ``label`` in ambient order."""
        n = len(self.labels)
        Lset = set(self.L)
        p = self._pos[label]
        for k in range(n):
            l = self.labels[(p - k) % n]
            if l in Lset:
                return self.omega[self.L.index(l)]
        raise AssertionError("L is nonempty")

    def ltype(self) -> tuple[int, ...]:
        """The L-type of the star under the out=+ dictionary."""
        return tuple(_dir_sign(o) for o in self.omega)

    def represents(self, tau: Sequence[int]) -> bool:
        t = self.ltype()
        tau = tuple(tau)
        return tau == t or tau == tuple(-s for s in t)

    @property
    def trivial(self) -> bool:
        return uniform(self.omega)

    # ------------------------------------------------------------ switches
    @cached_property
    def partition(self) -> SwitchPartition:
        return partition_switches(self)

    @property
    def A(self) -> tuple[int, ...]:
        return self.partition.A

    @property
    def C(self) -> tuple[int, ...]:
        return self.partition.C

    def bar(self) -> "Star":
        return Star(self.sign, self.labels, self.parities, self.L, tuple(flip(o) for o in self.omega))

    def reflect(self) -> "Star":
        """-T: the mirror image of bar(T), carried by the opposite model vertex."""
        return Star(-self.sign, self.labels, self.parities, self.L, tuple(flip(o) for o in self.omega))

    def with_omega(self, L: Sequence[int], omega: Sequence[str]) -> "Star":
        return Star(self.sign, self.labels, self.parities, tuple(L), tuple(omega))


def partition_switches(T: Star) -> SwitchPartition:
    """Split L(T) into anticlockwise switches, clockwise switches and B_+/B_-."""
    A, C, Bp, Bm, phi = [], [], [], [], {}
    k = len(T.L)
    for i, l in enumerate(T.L):
        before, after = T.omega[i - 1], T.omega[i]
        if T.sign == MINUS:
            before, after = after, before
        # before: clockwise side of l, after: counterclockwise side
        if before == OUT and after == IN:
            A.append(l)
        elif before == IN and after == OUT:
            C.append(l)
        else:
            f = PLUS if before == OUT else MINUS
            phi[l] = f
            (Bp if T.sign * T.parity(l) * f == PLUS else Bm).append(l)
    if k > 1:
        kinds = [("A" if l in A else "C") for l in T.L if l in A or l in C]
        assert all(kinds[j] != kinds[(j + 1) % len(kinds)] for j in range(len(kinds))) or not kinds
    assert len(A) == len(C)
    return SwitchPartition(tuple(A), tuple(C), tuple(Bp), tuple(Bm), phi)


def is_coherent(T: Star) -> bool:
    return uniform(T.parity(a) for a in T.A) and uniform(T.parity(c) for c in T.C)


def type_coherent(T: Star) -> bool:
    """[T] is coherent: some star representing the same type is coherent.

    A(-T) = A(T), so the two stars on the same model vertex suffice.
    """
    return is_coherent(T) or is_coherent(T.bar())


def is_bicoherent(T: Star) -> bool:
    p = T.partition
    return (is_coherent(T) and uniform(T.parity(b) for b in p.Bplus)
            and uniform(T.parity(b) for b in p.Bminus))


def _chir(chirality) -> int:
    if chirality in ("+", PLUS, "plus"):
        return PLUS
    if chirality in ("-", MINUS, "minus", "−"):
        return MINUS
    raise StarError("BAD_CHIRALITY", f"unknown derivative {chirality!r}")


def _orient_from_switch(T: Star, a: int, chir: int) -> str:
    s = T.char(a) * chir
    return OUT if s == PLUS else IN


def derivative(T: Star, chirality="+") -> Star:
    """d^+ or d^-: the star on C(T) oriented by the unique A-switch in each C-interval."""
    chir = _chir(chirality)
    C = T.C
    if not C:
        raise StarError("NO_SWITCHES", "derivative needs a clockwise switch")
    Aset = set(T.A)
    newL = tuple(sorted(C, key=T._pos.__getitem__))
    D = T.with_omega(newL, ["out"] * len(newL))
    omega = []
    for i in range(len(newL)):
        inside = [l for l in D.interval_interior(i) if l in Aset]
        assert len(inside) == 1, "switches must alternate"
        omega.append(_orient_from_switch(T, inside[0], chir))
    return T.with_omega(newL, omega)


def derivative_relative(T: Star, L0: Iterable[int], chirality="+") -> Star:
    """d_0 relative to L0: labels C(T) ∪ L0; an A-switch inside an interval decides,
    otherwise the interval keeps the orientation of T."""
    chir = _chir(chirality)
    L0 = {l for l in L0 if l in T._pos}
    newL = tuple(sorted(set(T.C) | L0, key=T._pos.__getitem__))
    if not newL:
        raise StarError("NO_SWITCHES", "C(T) and L0 are both empty")
    Aset = set(T.A)
    D = T.with_omega(newL, ["out"] * len(newL))
    omega = []
    for i in range(len(newL)):
        interior = D.interval_interior(i)
        inside = [l for l in interior if l in Aset]
        assert len(inside) <= 1
        if inside:
            omega.append(_orient_from_switch(T, inside[0], chir))
        else:
            omega.append(T.orientation_after(newL[i]))
    return T.with_omega(newL, omega)


def a_tilde(T: Star, L0: Iterable[int]) -> tuple[int, ...]:
    L0 = set(L0)
    return tuple(a for a in T.A if a not in L0)


# --------------------------------------------------------------------------
# sequences of coherence
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CoherenceSequence:
    stars: tuple[Star, ...]
    d_signs: tuple[int, ...]        # sign of the derivative producing stars[i+1]
    tau: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.stars)

    def to_json(self) -> dict:
        return {"tau": [sign_str(s) for s in self.tau], "n": self.n,
                "d_signs": [sign_str(s) for s in self.d_signs],
                "stars": [s.to_json() for s in self.stars],
                "types": [[sign_str(x) for x in s.ltype()] for s in self.stars]}


def star_for_type(tau: Sequence[int], parities, L: Iterable[int], sign: int = PLUS) -> Star:
    tau = tuple(tau)
    L = tuple(L)
    if len(tau) != len(set(L)):
        raise StarError("MALFORMED", "type length must equal the number of L-intervals")
    return Star.make(sign, parities, L, [_sign_dir(s) for s in tau])


def _uniform_chars(T: Star, labels) -> bool:
    return uniform(T.char(l) for l in labels)


def sequence_of_coherence(tau: Sequence[int], parities, L: Optional[Iterable[int]] = None) -> CoherenceSequence:
    """Constructive sequence of coherence for a nontrivial L-type.

    ``parities`` is a list (labels 1..n) or a dict label -> parity; ``L``
    defaults to every label.
    """
    tau = tuple(tau)
    if uniform(tau):
        raise StarError("TRIVIAL_TYPE", "the type is trivial")
    if L is None:
        L = sorted(parities) if isinstance(parities, dict) else range(1, len(parities) + 1)
    T1 = star_for_type(tau, parities, L, PLUS)
    if type_coherent(T1):
        return CoherenceSequence((T1,), (), tau)
    if _uniform_chars(T1, T1.A):
        T1 = T1.bar()
    cap = len(T1.L)
    chain = [T1]
    cur = T1
    m = 0
    while True:
        cur = derivative(cur, PLUS)
        m += 1
        chain.append(cur)
        if _uniform_chars(cur, cur.A):
            break
        if m >= cap:
            raise StarError("COHERENCE_DIVERGENCE", f"no uniform A after {cap} derivatives")
    if _uniform_chars(cur, cur.C):
        return CoherenceSequence(tuple(chain), (PLUS,) * m, tau)
    Tm = chain[m - 1]
    T_m1 = derivative(Tm, MINUS)
    T_m2 = derivative(T_m1, PLUS)
    stars = tuple(chain[:m]) + (T_m1, T_m2)
    return CoherenceSequence(stars, (PLUS,) * (m - 1) + (MINUS, PLUS), tau)


def check_sequence(seq: CoherenceSequence) -> list[str]:
    """Problems with the three defining clauses (empty when the sequence is valid)."""
    problems = []
    stars = seq.stars
    if not stars or not stars[0].represents(seq.tau):
        problems.append("first star does not represent the type")
    for i, T in enumerate(stars):
        if T.trivial:
            problems.append(f"star {i + 1} represents a trivial type")
    if len(seq.d_signs) != len(stars) - 1:
        problems.append("one derivative sign per step expected")
    for i, (s, T) in enumerate(zip(seq.d_signs, stars[1:]), start=2):
        if derivative(stars[i - 2], s) != T:
            problems.append(f"star {i} is not the derivative of star {i - 1}")
    if stars and not type_coherent(stars[-1]):
        problems.append("last star is not coherent")
    return problems


# --------------------------------------------------------------------------
# L0-sequences and inherited types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class InheritedType:
    L0: tuple[int, ...]
    R: tuple[Star, ...]
    eta_c: int
    eta_a: int
    eta_a_free: bool
    epsilon: tuple[int, ...]

    @property
    def tau0(self) -> tuple[int, ...]:
        return self.epsilon

    def to_json(self) -> dict:
        return {"L0": list(self.L0), "eta_c": sign_str(self.eta_c), "eta_a": sign_str(self.eta_a),
                "eta_a_free": self.eta_a_free, "tau0": [sign_str(e) for e in self.epsilon],
                "R": [r.to_json() for r in self.R]}


def l0_sequence(seq: CoherenceSequence, L0: Iterable[int]) -> tuple[Star, ...]:
    L0 = tuple(L0)
    R = [seq.stars[0]]
    for s in seq.d_signs:
        R.append(derivative_relative(R[-1], L0, s))
    return tuple(R)


def corner_of(T: Star, start: int, end: int) -> CornerData:
    """Restriction of T to the ambient arc from ``start`` to ``end`` (ambient order).

    Returned counterclockwise, so the arc is reversed on the negative vertex.
    """
    n = len(T.labels)
    a, b = T._pos[start], T._pos[end]
    span = (b - a) % n or n
    interior = [T.labels[(a + k) % n] for k in range(1, span)]
    Lset = set(T.L)
    inner_L = [l for l in interior if l in Lset]
    orient = [T.orientation_after(start)] + [T.orientation_after(l) for l in inner_L]
    chars = [T.char(l) for l in inner_L]
    X = CornerData(T.char(start), T.char(end), tuple(chars), tuple(orient),
                   (start, *inner_L, end))
    if T.sign == MINUS:
        X = CornerData(X.end_char, X.start_char, tuple(reversed(X.interior)),
                       tuple(reversed(X.orient)), tuple(reversed(X.labels)))
    return X


def inherited_type(seq: CoherenceSequence, L0: Iterable[int],
                   eta_c: Optional[int] = None, eta_a: Optional[int] = None) -> InheritedType:
    L0s = [l for l in L0]
    T1 = seq.stars[0]
    if not L0s or any(l not in set(T1.L) for l in L0s):
        raise StarError("BAD_L0", "L0 must be a nonempty subset of L")
    L0s = sorted(set(L0s), key=T1._pos.__getitem__)
    R = l0_sequence(seq, L0s)
    Tn, Rn = seq.stars[-1], R[-1]
    if eta_c is None:
        cs = {Tn.char(c) for c in Tn.C}
        if len(cs) != 1:
            raise StarError("UGLY_CORNER", "C(T_n) is not of uniform character")
        eta_c = cs.pop()
    at = a_tilde(Rn, L0s)
    free = not at
    if eta_a is None:
        if free:
            eta_a = PLUS
        else:
            chars = {Rn.char(a) for a in at}
            if len(chars) != 1:
                raise StarError("UGLY_CORNER", "Ã(R_n) is not of uniform character")
            eta_a = -chars.pop()
    eps = []
    for i, l in enumerate(L0s):
        X = corner_of(Rn, l, L0s[(i + 1) % len(L0s)])
        q = classify_corner(X, eta_c, eta_a)
        qn = classify_corner(X.neg(), eta_c, eta_a)
        if (q.classification == GOOD) == (qn.classification == GOOD):
            raise StarError("UGLY_CORNER", f"corner after label {l} has no well-defined sign")
        eps.append(PLUS if q.classification == GOOD else MINUS)
    return InheritedType(tuple(L0s), R, eta_c, eta_a, free, tuple(eps))


def parse_type(tokens: Iterable) -> tuple[int, ...]:
    return tuple(parse_sign(t) for t in tokens)
