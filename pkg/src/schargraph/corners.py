"""Corners with dual orientation: switches, atoms and the good/bad/ugly rule.

A corner is stored counterclockwise from its start label to its end label.
Between the two ends sit interior labels (with their characters) and one
orientation per sub-interval, so ``len(orient) == len(interior) + 1``.
Reading counterclockwise, ``out -> in`` across a label is an anticlockwise
switch and ``in -> out`` a clockwise switch.

Atom colors come from characters: the start of an atom is black exactly
when its label has character ``eta_c``, the end is black exactly when its
label does not. The good atoms are BB-out, WW-in, BW-in and BW-out; an atom
is good precisely when its negative is bad, which :func:`self_test`
verifies over the whole table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .signs import IN, OUT, flip

ANTICLOCKWISE = "A"
CLOCKWISE = "C"
GOOD = "good"
BAD = "bad"
UGLY = "ugly"

B, W = "B", "W"
GOOD_ATOMS = frozenset({(B, B, OUT), (W, W, IN), (B, W, IN), (B, W, OUT)})


@dataclass(frozen=True)
class CornerData:
    start_char: int
    end_char: int
    interior: tuple[int, ...]          # characters of interior labels, in order
    orient: tuple[str, ...]            # one per sub-interval
    labels: Optional[tuple] = None     # optional (start, *interior, end) label ids

    def __post_init__(self):
        if len(self.orient) != len(self.interior) + 1:
            raise ValueError("need one orientation per sub-interval")

    def switches(self) -> list[tuple[int, str, int]]:
        """(interior index, kind, character) for each switch label."""
        out = []
        for j, ch in enumerate(self.interior):
            a, b = self.orient[j], self.orient[j + 1]
            if a != b:
                out.append((j, ANTICLOCKWISE if a == OUT else CLOCKWISE, ch))
        return out

    @property
    def s(self) -> int:
        return len(self.switches())

    @property
    def index(self) -> int:
        return 1 - self.s

    def a_chars(self) -> set[int]:
        return {ch for _, k, ch in self.switches() if k == ANTICLOCKWISE}

    def c_chars(self) -> set[int]:
        return {ch for _, k, ch in self.switches() if k == CLOCKWISE}

    @property
    def ugly(self) -> bool:
        return len(self.a_chars()) > 1

    def neg(self) -> "CornerData":
        """-X: the mirror image of the reversed corner."""
        labels = tuple(reversed(self.labels)) if self.labels is not None else None
        return CornerData(-self.end_char, -self.start_char,
                          tuple(-c for c in reversed(self.interior)),
                          tuple(flip(o) for o in reversed(self.orient)), labels)

    def atoms(self) -> list[tuple[int, int, str]]:
        """Maximal atoms as (start char, end char, orientation)."""
        cuts = self.switches()
        bounds = [(-1, self.start_char)] + [(j, ch) for j, _, ch in cuts] + [(len(self.interior), self.end_char)]
        out = []
        for (j0, c0), (j1, c1) in zip(bounds, bounds[1:]):
            out.append((c0, c1, self.orient[j0 + 1]))
        return out

    def split(self, j: int) -> tuple["CornerData", "CornerData"]:
        """The two corners on either side of interior label ``j``."""
        ch = self.interior[j]
        left = CornerData(self.start_char, ch, self.interior[:j], self.orient[:j + 1])
        right = CornerData(ch, self.end_char, self.interior[j + 1:], self.orient[j + 1:])
        return left, right


def atom_colors(start_char: int, end_char: int, eta_c: int) -> tuple[str, str]:
    return (B if start_char == eta_c else W, B if end_char != eta_c else W)


def atom_good(start_char: int, end_char: int, orient: str, eta_c: int) -> bool:
    c1, c2 = atom_colors(start_char, end_char, eta_c)
    return (c1, c2, orient) in GOOD_ATOMS


@dataclass(frozen=True)
class CornerQuality:
    classification: str
    eta_c: int
    eta_a: int
    atoms: tuple[bool, ...]

    def to_json(self) -> dict:
        return {"classification": self.classification, "eta_c": self.eta_c,
                "eta_a": self.eta_a, "atoms": [GOOD if a else BAD for a in self.atoms]}


def classify_corner(X: CornerData, eta_c: int, eta_a: int) -> CornerQuality:
    atoms = tuple(atom_good(c0, c1, o, eta_c) for c0, c1, o in X.atoms())
    if X.ugly:
        return CornerQuality(UGLY, eta_c, eta_a, atoms)
    chars = X.a_chars()
    if not chars or chars == {eta_a}:
        good = all(atoms)
    else:
        good = any(atoms)
    return CornerQuality(GOOD if good else BAD, eta_c, eta_a, atoms)


def is_double_sided(kind: str, char: int, eta_c: int, eta_a: int) -> bool:
    return char == (eta_c if kind == CLOCKWISE else eta_a)


def self_test() -> bool:
    """Every atom is good exactly when its negative is bad."""
    for eta_c in (1, -1):
        for c0 in (1, -1):
            for c1 in (1, -1):
                for o in (IN, OUT):
                    x = CornerData(c0, c1, (), (o,))
                    gx = atom_good(c0, c1, o, eta_c)
                    nx = x.neg()
                    gn = atom_good(nx.start_char, nx.end_char, nx.orient[0], eta_c)
                    if gx == gn:
                        return False
    return True
