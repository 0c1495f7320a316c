"""Grundy values, outcome classes, and memoized table construction.

The value of a position is the least non-negative integer missing from
the values of its successors; a position is a previous-player win
exactly when that value is 0.  Tables are built bottom-up by coordinate
sum: every cut strictly lowers x + y + z, so each layer depends only on
the layers below it.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional

from . import core
from .core import Bounds, Position, Rules

# Refuse table builds whose domain cannot reasonably fit in memory.
MAX_TABLE_ENTRIES = 10**8

# Below this layer size, threading overhead outweighs any benefit.
_PARALLEL_THRESHOLD = 256


class Outcome(Enum):
    """P: the previous player wins with correct play; N: the next player does."""

    P = "P"
    N = "N"


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer not among values.

    Uses a presence bitmap of size len(values) + 1; the answer can never
    exceed the number of inputs.
    """
    vals = list(values)
    n = len(vals)
    seen = bytearray(n + 1)
    for v in vals:
        if 0 <= v <= n:
            seen[v] = 1
    return seen.index(0)


def grundy(rules: Rules, p: Position, memo: Optional[dict[Position, int]] = None) -> int:
    """Grundy value of p, extending memo with every position evaluated.

    Iterative post-order traversal; safe for positions whose coordinate
    sum exceeds the interpreter recursion limit.
    """
    if not core.is_valid(rules, p):
        raise ValueError(f"invalid position for {rules.label()}: {p}")
    if memo is None:
        memo = {}
    stack: list[tuple[Position, Optional[list[Position]]]] = [(p, None)]
    while stack:
        q, succ = stack.pop()
        if q in memo:
            continue
        if succ is None:
            succ = core.moves(rules, q)
            pending = [r for r in succ if r not in memo]
            if pending:
                stack.append((q, succ))
                stack.extend((r, None) for r in pending)
                continue
        memo[q] = mex(memo[r] for r in succ)
    return memo[p]


def outcome(rules: Rules, p: Position, memo: Optional[dict[Position, int]] = None) -> Outcome:
    """Outcome class of p: P iff its Grundy value is 0."""
    return Outcome.P if grundy(rules, p, memo) == 0 else Outcome.N


def sum_value(component_values: Iterable[int]) -> int:
    """Grundy value of a disjunctive sum, given its components' values."""
    return core.nim_sum(component_values)


@dataclass
class GrundyTable:
    """Grundy values for every valid position within bounds.

    The values dict is keyed by position; treat a built table as
    immutable.  Iteration and items() are lexicographic regardless of
    build order.
    """

    rules: Rules
    bounds: Bounds
    values: dict[Position, int] = field(repr=False)

    def __getitem__(self, p: Position) -> int:
        return self.values[p]

    def __contains__(self, p: Position) -> bool:
        return p in self.values

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Position]:
        return iter(sorted(self.values))

    def items(self) -> list[tuple[Position, int]]:
        return sorted(self.values.items())

    def outcome(self, p: Position) -> Outcome:
        return Outcome.P if self.values[p] == 0 else Outcome.N

    def validate(self) -> None:
        """Re-check every table invariant; raise ValueError on the first violation.

        Confirms the domain equals the enumerated position set and that
        each stored value is the mex of its successors' stored values.
        """
        domain = core.enumerate_positions(self.rules, self.bounds)
        if set(domain) != set(self.values):
            raise ValueError("table domain does not match enumerated positions")
        if self.values.get((0, 0, 0)) != 0:
            raise ValueError("end position must have value 0")
        for p in domain:
            succ = core.moves(self.rules, p)
            expect = mex(self.values[q] for q in succ)
            if self.values[p] != expect:
                raise ValueError(f"value at {p} is {self.values[p]}, expected {expect}")


def _layer_values(rules: Rules, layer: list[Position],
                  values: dict[Position, int]) -> list[int]:
    return [mex(values[q] for q in core.moves(rules, p)) for p in layer]


def build_table(rules: Rules, bounds: Bounds, threads: int = 1) -> GrundyTable:
    """Build the full Grundy table for all valid positions within bounds.

    Positions are processed layer by layer in increasing coordinate sum,
    so every successor is already resolved when a position is reached.
    With threads != 1 each layer is split across a thread pool; results
    are merged in a fixed order, so the table content is independent of
    the thread count.  threads=0 means one thread per CPU.
    """
    bx, by, bz = bounds
    if (bx + 1) * (by + 1) * (bz + 1) > MAX_TABLE_ENTRIES:
        raise ValueError(f"bounds {bounds} exceed the {MAX_TABLE_ENTRIES}-entry table guard")
    if threads < 0:
        raise ValueError("threads must be >= 0")
    if threads == 0:
        threads = os.cpu_count() or 1

    layers: dict[int, list[Position]] = {}
    for p in core.enumerate_positions(rules, bounds):
        layers.setdefault(p[0] + p[1] + p[2], []).append(p)

    values: dict[Position, int] = {}
    if threads == 1:
        for s in sorted(layers):
            layer = layers[s]
            for p, g in zip(layer, _layer_values(rules, layer, values)):
                values[p] = g
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for s in sorted(layers):
                layer = layers[s]
                if len(layer) < _PARALLEL_THRESHOLD:
                    results = _layer_values(rules, layer, values)
                else:
                    step = (len(layer) + threads - 1) // threads
                    chunks = [layer[i:i + step] for i in range(0, len(layer), step)]
                    parts = pool.map(lambda c: _layer_values(rules, c, values), chunks)
                    results = [g for part in parts for g in part]
                # merge only after the whole layer is done; workers read
                # lower layers and never see a partially updated dict
                for p, g in zip(layer, results):
                    values[p] = g
    return GrundyTable(rules, (bx, by, bz), values)
