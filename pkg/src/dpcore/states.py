"""Per-node DP states as structured, hashable terms.

Every state has a canonical text form (`serialize`); two states are equal
exactly when their serializations are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

Part = tuple  # sorted vertices, or sorted (u, v) edge pairs


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bot:
    """Marks a dead coordinate of a union core."""


@dataclass(frozen=True, slots=True)
class Count:
    q: int


@dataclass(frozen=True, slots=True)
class Blocks:
    """Connected components of the processed edges, restricted to the bag.

    ``partition`` holds sorted blocks ordered by their minimum; ``closed``
    counts components whose vertices have all been forgotten.
    """

    partition: tuple[tuple[int, ...], ...]
    closed: int

    @classmethod
    def make(cls, blocks: Iterable[Iterable[int]], closed: int) -> "Blocks":
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)), closed)


@dataclass(frozen=True, slots=True)
class Tuple:
    items: tuple["State", ...]


@dataclass(frozen=True, slots=True)
class Assigned:
    """An inner state paired with the bag elements assigned to its part."""

    inner: "State"
    part: Part


State = Union[Top, Bot, Count, Blocks, Tuple, Assigned]

TOP = Top()
BOT = Bot()


def _elem(x) -> str:
    return f"{x[0]}-{x[1]}" if isinstance(x, tuple) else str(x)


def serialize(m: State) -> str:
    if isinstance(m, Top):
        return "T"
    if isinstance(m, Bot):
        return "_"
    if isinstance(m, Count):
        return str(m.q)
    if isinstance(m, Blocks):
        return "[" + "|".join(" ".join(map(str, b)) for b in m.partition) + f"]/{m.closed}"
    if isinstance(m, Tuple):
        return "(" + ",".join(serialize(x) for x in m.items) + ")"
    if isinstance(m, Assigned):
        return "<" + serialize(m.inner) + ":{" + " ".join(_elem(x) for x in m.part) + "}>"
    raise TypeError(f"not a state: {m!r}")


def state_set(states: Iterable[State]) -> tuple[State, ...]:
    """Deduplicate, keeping first-seen order."""
    return tuple(dict.fromkeys(states))
