"""Signs, parities and characters.

Signs are stored as plain ints (+1 / -1) everywhere; this module only
handles parsing and printing them.
"""

from __future__ import annotations

from typing import Iterable

PLUS = 1
MINUS = -1

IN = "in"
OUT = "out"


def parse_sign(token) -> int:
    if token in ("+", "+1", 1, "plus"):
        return PLUS
    if token in ("-", "−", "-1", -1, "minus"):
        return MINUS
    raise ValueError(f"not a sign: {token!r}")


def sign_str(s: int) -> str:
    return "+" if s > 0 else "-"


def signs_str(signs: Iterable[int]) -> list[str]:
    return [sign_str(s) for s in signs]


def flip(direction: str) -> str:
    return OUT if direction == IN else IN


def uniform(values: Iterable) -> bool:
    """True when all values agree (vacuously true for an empty iterable)."""
    return len(set(values)) <= 1
