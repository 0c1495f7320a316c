"""Positions, rule sets, and move generation for chocolate-bar cutting games.

Two game families are supported.  The rectangular bar is unconstrained:
a position (x, y, z) records how many cuts remain in each of the three
directions, and a move lowers exactly one coordinate.  The triangular
bar with parameter k keeps its positions inside the cone k*y <= x + z;
cutting down x or z can drag y along, because the horizontal span that
admits y-cuts shrinks with the sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Iterable, Iterator

Position = tuple[int, int, int]
Bounds = tuple[int, int, int]

RECTANGULAR = "rectangular"
TRIANGULAR = "triangular"

# Coordinates stay below 2**62 so x + z never overflows a signed 64-bit int.
COORD_LIMIT = 1 << 62


@dataclass(frozen=True)
class Rules:
    """Which game is being played: rectangular, or triangular with parameter k."""

    variant: str
    k: int = 0

    def __post_init__(self) -> None:
        if self.variant == RECTANGULAR:
            if self.k != 0:
                raise ValueError("rectangular rules take no k parameter")
        elif self.variant == TRIANGULAR:
            if self.k < 1:
                raise ValueError(f"triangular rules need k >= 1, got {self.k}")
        else:
            raise ValueError(f"unknown rules variant: {self.variant!r}")

    @classmethod
    def rectangular(cls) -> "Rules":
        return cls(RECTANGULAR)

    @classmethod
    def triangular(cls, k: int) -> "Rules":
        return cls(TRIANGULAR, k)

    @property
    def is_triangular(self) -> bool:
        return self.variant == TRIANGULAR

    def label(self) -> str:
        """Short stable name, e.g. "rect" or "tri3"; used in cache keys."""
        if self.is_triangular:
            return f"tri{self.k}"
        return "rect"


def nim_sum(values: Iterable[int]) -> int:
    """Bitwise XOR fold of the values; 0 for an empty iterable."""
    return reduce(xor, values, 0)


def is_valid(rules: Rules, p: Position) -> bool:
    """True iff p is a position of the game described by rules.

    Coordinates must be non-negative and below ``COORD_LIMIT``; triangular
    positions must additionally satisfy k*y <= x + z.
    """
    x, y, z = p
    if x < 0 or y < 0 or z < 0:
        return False
    if x >= COORD_LIMIT or y >= COORD_LIMIT or z >= COORD_LIMIT:
        return False
    if rules.is_triangular:
        return rules.k * y <= x + z
    return True


def iter_moves(rules: Rules, p: Position) -> Iterator[tuple[str, Position]]:
    """Yield (axis, successor) pairs for every single cut from p.

    The axis names the coordinate being cut ("x", "y", or "z").  Under
    triangular rules an x- or z-cut clamps y to the new floor, so the
    successor is always a valid position.  Duplicates may be yielded;
    ``moves`` collapses them.
    """
    x, y, z = p
    if rules.is_triangular:
        k = rules.k
        for u in range(x):
            yield "x", (u, min(y, (u + z) // k), z)
        for v in range(y):
            yield "y", (x, v, z)
        for w in range(z):
            yield "z", (x, min(y, (x + w) // k), w)
    else:
        for u in range(x):
            yield "x", (u, y, z)
        for v in range(y):
            yield "y", (x, v, z)
        for w in range(z):
            yield "z", (x, y, w)


def moves(rules: Rules, p: Position) -> list[Position]:
    """All positions reachable from p in one cut, deduplicated, in lexicographic order."""
    if not is_valid(rules, p):
        raise ValueError(f"invalid position for {rules.label()}: {p}")
    return sorted({q for _, q in iter_moves(rules, p)})


def enumerate_positions(rules: Rules, bounds: Bounds) -> list[Position]:
    """All valid positions with x <= bx, y <= by, z <= bz, lexicographically ordered."""
    bx, by, bz = bounds
    if bx < 0 or by < 0 or bz < 0:
        raise ValueError(f"bounds must be non-negative, got {bounds}")
    out: list[Position] = []
    if rules.is_triangular:
        k = rules.k
        for x in range(bx + 1):
            for y in range(by + 1):
                # valid z form the contiguous range [k*y - x, bz]
                zmin = k * y - x
                if zmin > bz:
                    break
                for z in range(max(0, zmin), bz + 1):
                    out.append((x, y, z))
    else:
        for x in range(bx + 1):
            for y in range(by + 1):
                for z in range(bz + 1):
                    out.append((x, y, z))
    return out
