"""Bit-driven step sequences behind the triangular-bar analysis.

A step sequence starts at 2 and repeatedly applies one of three affine
maps; where its final term lands relative to the window [0, k)
determines how the middle coordinate of a position compares with
(x + z) // k.  The sequence for a position is read off the binary
digits of its coordinates, and walking the window in reverse yields,
for each x, the unique (y, z) making the position a nim-zero win for
the previous player.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

# apply_step refuses inputs whose image could leave signed 64-bit range.
_STEP_INPUT_LIMIT = 1 << 61


class Step(Enum):
    """The three maps: UP doubles and adds 2, FLAT doubles, DOWN doubles and adds 1 - k."""

    UP = "up"
    FLAT = "flat"
    DOWN = "down"


def apply_step(k: int, step: Step, value: int) -> int:
    """Image of value under one step map for modulus k.

    For every value, UP > FLAT > DOWN (strictly, once k > 1).
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be an odd positive integer, got {k}")
    if abs(value) >= _STEP_INPUT_LIMIT:
        raise OverflowError(f"term {value} would overflow 64-bit range")
    if step is Step.UP:
        return 2 * value + 2
    if step is Step.FLAT:
        return 2 * value
    return 2 * value + 1 - k


class SequenceKind(Enum):
    """Where a sequence ends relative to [0, k)."""

    IN_WINDOW = "in_window"
    ABOVE_WINDOW = "above_window"
    BELOW_WINDOW = "below_window"


@dataclass(frozen=True)
class StepSequence:
    """A sequence of even terms starting at 2, each a step image of the last.

    The growth bound |terms[i]| < 2^(i+3) * k holds for every valid
    sequence and is enforced so that ~55-term sequences stay inside
    64-bit arithmetic.
    """

    k: int
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1 or self.k % 2 == 0:
            raise ValueError(f"k must be an odd positive integer, got {self.k}")
        if not self.terms:
            raise ValueError("sequence must have at least one term")
        if self.terms[0] != 2:
            raise ValueError(f"sequence must start at 2, got {self.terms[0]}")
        for i, t in enumerate(self.terms):
            if t % 2 != 0:
                raise ValueError(f"term {i} is odd: {t}")
            if abs(t) >= (1 << (i + 3)) * self.k:
                raise OverflowError(f"term {i} breaks the growth bound: {t}")
        for i in range(len(self.terms) - 1):
            prev, cur = self.terms[i], self.terms[i + 1]
            if cur not in (2 * prev + 2, 2 * prev, 2 * prev + 1 - self.k):
                raise ValueError(f"term {i + 1} ({cur}) is not a step image of {prev}")

    @classmethod
    def from_steps(cls, k: int, steps: "list[Step]") -> "StepSequence":
        terms = [2]
        for s in steps:
            terms.append(apply_step(k, s, terms[-1]))
        return cls(k, tuple(terms))

    @property
    def final(self) -> int:
        return self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)


def classify_sequence(seq: StepSequence) -> SequenceKind:
    """Classify by the final term alone.

    Equivalent to scanning the whole sequence: terms that leave the
    window in either direction never return (see the absorption tests).
    """
    if seq.final < 0:
        return SequenceKind.BELOW_WINDOW
    if seq.final >= seq.k:
        return SequenceKind.ABOVE_WINDOW
    return SequenceKind.IN_WINDOW


@dataclass(frozen=True)
class BitTriple:
    """Coordinates (x, y, z) with nim-sum zero, framed at a shared top bit.

    The frame requires x and z to share their highest set bit n while
    y < 2^n.  Bit position i of the triple selects the step applied at
    distance n - i from the start.
    """

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.x < 1:
            raise ValueError(f"x must have a set top bit, got {self.x}")
        n = self.x.bit_length() - 1
        if self.z.bit_length() - 1 != n:
            raise ValueError(f"z must share x's top bit {n}, got z={self.z}")
        if self.y >> n:
            raise ValueError(f"y must be clear at top bit {n}, got y={self.y}")
        if self.x ^ self.y ^ self.z:
            raise ValueError(f"nim-sum must be zero, got {self.x ^ self.y ^ self.z}")

    @cached_property
    def top_bit(self) -> int:
        return self.x.bit_length() - 1

    def bits(self, i: int) -> tuple[int, int, int]:
        return ((self.x >> i) & 1, (self.y >> i) & 1, (self.z >> i) & 1)

    def steps(self) -> list[Step]:
        """Steps selected by bit positions top_bit - 1 down to 0.

        Nim-sum zero leaves four bit patterns: (1,0,1) -> UP,
        (0,0,0) -> FLAT, and the two mixed patterns -> DOWN.
        """
        out = []
        for i in range(self.top_bit - 1, -1, -1):
            xb, yb, zb = self.bits(i)
            if yb:
                out.append(Step.DOWN)
            elif xb:
                out.append(Step.UP)
            else:
                out.append(Step.FLAT)
        return out


def generate_sequence(k: int, bt: BitTriple) -> StepSequence:
    """The sequence read off bt's bits: starts at 2, ends at x + z - k*y."""
    return StepSequence.from_steps(k, bt.steps())


class FloorClass(Enum):
    """How y compares with (x + z) // k."""

    AT_FLOOR = "at_floor"
    BELOW_FLOOR = "below_floor"
    ABOVE_FLOOR = "above_floor"


def inequality_class(k: int, x: int, y: int, z: int) -> FloorClass:
    """AT_FLOOR iff y == (x + z) // k; BELOW/ABOVE for y smaller/larger."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    slack = x + z - k * y
    if slack < 0:
        return FloorClass.ABOVE_FLOOR
    if slack >= k:
        return FloorClass.BELOW_FLOOR
    return FloorClass.AT_FLOOR


def classify_position(k: int, x: int, y: int, z: int) -> SequenceKind:
    """Sequence kind of a framed nim-zero triple; requires k % 4 == 3.

    IN_WINDOW here coincides with inequality_class == AT_FLOOR, and the
    other two kinds pair off with BELOW_FLOOR and ABOVE_FLOOR.
    """
    if k % 4 != 3:
        raise ValueError(f"k must be 3 mod 4, got {k}")
    return classify_sequence(generate_sequence(k, BitTriple(x, y, z)))


def complete_yz(k: int, x: int) -> tuple[int, int]:
    """The unique (y, z) putting (x, y, z) at nim-sum zero with y at the floor.

    Requires k % 4 == 3 and x >= 1.  z's top bit is pinned to x's, and
    lower bits are chosen one at a time so the running sequence term
    stays inside [0, k): a term in the lower half of the window takes
    bits (y, z) = (0, x-bit), one in the upper half takes (1, 1 - x-bit).
    """
    if k % 4 != 3:
        raise ValueError(f"k must be 3 mod 4, got {k}")
    if x < 1:
        raise ValueError(f"x must be positive, got {x}")
    half = (k - 3) // 2
    n = x.bit_length() - 1
    y, z = 0, 1 << n
    s = 2
    for i in range(n - 1, -1, -1):
        xb = (x >> i) & 1
        if s <= half:
            z |= xb << i
            s = 2 * s + 2 * xb
        else:
            y |= 1 << i
            z |= (1 - xb) << i
            s = 2 * s + 1 - k
        if not 0 <= s < k:
            raise AssertionError(f"window walk escaped [0, {k}) at bit {i}")
    return y, z
