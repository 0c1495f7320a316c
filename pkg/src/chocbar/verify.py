"""Exhaustive desk-scale checks over bounded position domains.

Each check sweeps every valid position inside a bounding box and
returns a structured report: named counts plus a sorted list of
violating positions.  A failed check is a data result, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import core
from .core import Bounds, Position, Rules
from .grundy import GrundyTable, build_table


@dataclass(frozen=True)
class Discrepancy:
    position: Position
    reason: str


@dataclass
class NimPartition:
    """Valid positions within bounds, split by nim-sum."""

    zero: frozenset[Position]
    nonzero: frozenset[Position]

    def __len__(self) -> int:
        return len(self.zero) + len(self.nonzero)


def nim_partition(rules: Rules, bounds: Bounds) -> NimPartition:
    zero, nonzero = set(), set()
    for p in core.enumerate_positions(rules, bounds):
        (zero if core.nim_sum(p) == 0 else nonzero).add(p)
    return NimPartition(frozenset(zero), frozenset(nonzero))


@dataclass
class VerificationReport:
    """Outcome of one sweep: counts plus sorted violation list."""

    check: str
    rules: Rules
    bounds: Bounds
    counts: dict[str, int]
    discrepancies: list[Discrepancy] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.discrepancies.sort(key=lambda d: (d.position, d.reason))

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def positions(self) -> list[Position]:
        return sorted({d.position for d in self.discrepancies})

    def to_dict(self) -> dict:
        """JSON-ready form with a fixed key set."""
        return {
            "check": self.check,
            "rules": "tri" if self.rules.is_triangular else "rect",
            "k": self.rules.k if self.rules.is_triangular else None,
            "bounds": list(self.bounds),
            "passed": self.passed,
            "counts": dict(self.counts),
            "discrepancies": [list(p) for p in self.positions()],
        }


def _ensure_table(rules: Rules, bounds: Bounds, threads: int,
                  table: GrundyTable | None) -> GrundyTable:
    if table is None:
        return build_table(rules, bounds, threads=threads)
    if table.rules != rules or table.bounds != tuple(bounds):
        raise ValueError("supplied table does not match the requested rules and bounds")
    return table


def _grundy_vs_nim(check: str, rules: Rules, bounds: Bounds, threads: int,
                   table: GrundyTable | None) -> VerificationReport:
    table = _ensure_table(rules, bounds, threads, table)
    found = []
    nim_zero = grundy_zero = 0
    for p, g in table.items():
        ns = core.nim_sum(p)
        nim_zero += ns == 0
        grundy_zero += g == 0
        if g == 0 and ns != 0:
            found.append(Discrepancy(p, "grundy_zero_nimsum_nonzero"))
        elif g != 0 and ns == 0:
            found.append(Discrepancy(p, "grundy_nonzero_nimsum_zero"))
    counts = {"domain": len(table), "nim_zero": nim_zero, "grundy_zero": grundy_zero}
    return VerificationReport(check, rules, bounds, counts, found)


def verify_characterization(k: int, bounds: Bounds, threads: int = 1,
                            table: GrundyTable | None = None) -> VerificationReport:
    """Check that nim-sum zero marks exactly the Grundy-zero positions.

    Holds for every k that is 3 mod 4; other k are rejected since the
    claim is false there in general.
    """
    if k % 4 != 3:
        raise ValueError(f"characterization check needs k = 3 mod 4, got {k}")
    return _grundy_vs_nim("char", Rules.triangular(k), bounds, threads, table)


def verify_rectangular(bounds: Bounds, threads: int = 1,
                       table: GrundyTable | None = None) -> VerificationReport:
    """Same Grundy-vs-nim-sum sweep under rectangular rules (classic Nim)."""
    return _grundy_vs_nim("rect", Rules.rectangular(), bounds, threads, table)


def verify_move_closure(k: int, bounds: Bounds) -> VerificationReport:
    """Check both closure directions of the nim-sum partition, move by move.

    A nim-zero position may not have a nim-zero successor; a nonzero
    position must have at least one.  Needs no Grundy table.
    """
    if k % 4 != 3:
        raise ValueError(f"move-closure check needs k = 3 mod 4, got {k}")
    rules = Rules.triangular(k)
    found = []
    nim_zero = nim_nonzero = 0
    for p in core.enumerate_positions(rules, bounds):
        if core.nim_sum(p) == 0:
            nim_zero += 1
            for axis, q in core.iter_moves(rules, p):
                if core.nim_sum(q) == 0:
                    found.append(Discrepancy(p, f"zero_successor_{axis}"))
        else:
            nim_nonzero += 1
            if not any(core.nim_sum(q) == 0 for _, q in core.iter_moves(rules, p)):
                found.append(Discrepancy(p, "no_zero_successor"))
    counts = {
        "domain": nim_zero + nim_nonzero,
        "nim_zero": nim_zero,
        "nim_nonzero": nim_nonzero,
    }
    return VerificationReport("closure", rules, bounds, counts, found)


def compare_grundy_nimsum(rules: Rules, bounds: Bounds, threads: int = 1,
                          table: GrundyTable | None = None) -> VerificationReport:
    """Count positions whose Grundy value equals their coordinate nim-sum.

    Always passes; the counts are the result.  Use mismatch_positions
    for the actual disagreement list.
    """
    table = _ensure_table(rules, bounds, threads, table)
    equal = sum(1 for p, g in table.items() if g == core.nim_sum(p))
    counts = {"domain": len(table), "equal": equal, "unequal": len(table) - equal}
    return VerificationReport("compare", rules, bounds, counts)


def mismatch_positions(table: GrundyTable) -> list[Position]:
    """Positions whose Grundy value differs from their nim-sum, sorted."""
    return [p for p, g in table.items() if g != core.nim_sum(p)]


def verify_conjecture_4m1(k: int, bounds: Bounds, threads: int = 1,
                          table: GrundyTable | None = None) -> VerificationReport:
    """Check the shifted characterization (x-1) xor y xor (z-1) = 0 for k = 1 mod 4.

    Only interior positions (x >= 1 and z >= 1) are asserted; the x = 0
    or z = 0 boundary has no meaningful shifted nim-sum and is reported
    through counts alone.
    """
    if k % 4 != 1 or k < 5:
        raise ValueError(f"conjecture check needs k = 1 mod 4 with k >= 5, got {k}")
    rules = Rules.triangular(k)
    table = _ensure_table(rules, bounds, threads, table)
    found = []
    interior = boundary = boundary_p = 0
    for p, g in table.items():
        x, y, z = p
        if x == 0 or z == 0:
            boundary += 1
            boundary_p += g == 0
            continue
        interior += 1
        shifted = (x - 1) ^ y ^ (z - 1)
        if g == 0 and shifted != 0:
            found.append(Discrepancy(p, "p_position_shifted_nonzero"))
        elif g != 0 and shifted == 0:
            found.append(Discrepancy(p, "n_position_shifted_zero"))
    counts = {
        "domain": len(table),
        "interior": interior,
        "boundary": boundary,
        "boundary_p": boundary_p,
        "boundary_n": boundary - boundary_p,
    }
    return VerificationReport("conj41", rules, bounds, counts, found)


def enumerate_outcomes(rules: Rules, bounds: Bounds, which: str = "all", threads: int = 1,
                       table: GrundyTable | None = None) -> list[Position]:
    """Valid positions within bounds whose outcome matches the filter.

    which is "P", "N", or "all"; the result is lexicographically sorted.
    """
    if which not in ("P", "N", "all"):
        raise ValueError(f"filter must be P, N, or all, got {which!r}")
    table = _ensure_table(rules, bounds, threads, table)
    if which == "all":
        return [p for p, _ in table.items()]
    want_zero = which == "P"
    return [p for p, g in table.items() if (g == 0) == want_zero]
