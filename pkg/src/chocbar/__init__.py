"""Solvers and exhaustive checkers for rectangular and triangular chocolate-bar games."""

from .core import Bounds, Position, Rules, enumerate_positions, is_valid, iter_moves, moves, nim_sum
from .grundy import GrundyTable, Outcome, build_table, grundy, mex, outcome, sum_value
from .sequences import (
    BitTriple,
    FloorClass,
    SequenceKind,
    Step,
    StepSequence,
    apply_step,
    classify_position,
    classify_sequence,
    complete_yz,
    generate_sequence,
    inequality_class,
)
from .verify import (
    Discrepancy,
    VerificationReport,
    compare_grundy_nimsum,
    enumerate_outcomes,
    mismatch_positions,
    nim_partition,
    verify_characterization,
    verify_conjecture_4m1,
    verify_move_closure,
    verify_rectangular,
)

__version__ = "0.1.0"

__all__ = [
    "BitTriple",
    "Bounds",
    "Discrepancy",
    "FloorClass",
    "GrundyTable",
    "Outcome",
    "Position",
    "Rules",
    "SequenceKind",
    "Step",
    "StepSequence",
    "VerificationReport",
    "apply_step",
    "build_table",
    "classify_position",
    "classify_sequence",
    "compare_grundy_nimsum",
    "complete_yz",
    "enumerate_outcomes",
    "enumerate_positions",
    "generate_sequence",
    "grundy",
    "inequality_class",
    "is_valid",
    "iter_moves",
    "mex",
    "mismatch_positions",
    "moves",
    "nim_partition",
    "nim_sum",
    "outcome",
    "sum_value",
    "verify_characterization",
    "verify_conjecture_4m1",
    "verify_move_closure",
    "verify_rectangular",
]
