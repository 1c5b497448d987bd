"""Fixtures shipped with the package.

``data/fixtures/index.json`` lists every fixture with its format (``pair``
or ``star``) and role. Figure fixtures depict situations that occur in
actual surgeries; constructed fixtures exist to trigger one specific flag
or error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import IntersectionPair
from .stars import Star

FIGURE, CONSTRUCTED = "figure", "constructed"


class FixtureError(KeyError):
    code = "UNKNOWN_FIXTURE"


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    format: str
    role: str
    description: str


def _dir():
    return resources.files("schargraph") / "data" / "fixtures"


@lru_cache(maxsize=None)
def catalog() -> tuple[FixtureInfo, ...]:
    entries = json.loads((_dir() / "index.json").read_text())
    return tuple(FixtureInfo(**e) for e in entries)


def info(name: str) -> FixtureInfo:
    for f in catalog():
        if f.name == name:
            return f
    raise FixtureError(f"no fixture named {name!r}")


def raw(name: str) -> dict:
    info(name)
    return json.loads((_dir() / f"{name}.json").read_text())


def load_pair(name: str) -> IntersectionPair:
    return IntersectionPair.from_json(raw(name))


def load_star(name: str) -> Star:
    return Star.from_json(raw(name))


def figure_pairs() -> list[tuple[str, IntersectionPair]]:
    return [(f.name, load_pair(f.name)) for f in catalog()
            if f.format == "pair" and f.role == FIGURE]
