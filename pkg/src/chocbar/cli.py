"""Command-line front end.

Subcommands: grundy and outcome for single positions, table for full
CSV/JSON export, enum for outcome-filtered position lists, compare for
Grundy-vs-nim-sum counts, and verify {char,closure,conj41,rect} for the
exhaustive checks.  Exit code 0 on success and passed checks, 1 on a
failed check, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import core, verify
from .core import Bounds, Position, Rules
from .grundy import GrundyTable, build_table, grundy as grundy_value

CSV_HEADER = "x,y,z,grundy,nim_sum,outcome"


class CliError(Exception):
    """Usage-level problem; maps to exit code 2."""


def table_to_csv(table: GrundyTable) -> str:
    lines = [CSV_HEADER]
    for (x, y, z), g in table.items():
        out = "P" if g == 0 else "N"
        lines.append(f"{x},{y},{z},{g},{core.nim_sum((x, y, z))},{out}")
    return "\n".join(lines) + "\n"


def table_from_csv(rules: Rules, bounds: Bounds, text: str) -> GrundyTable:
    """Parse a table export; the derived columns must be self-consistent."""
    lines = text.splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("bad CSV header")
    values: dict[Position, int] = {}
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 6:
            raise ValueError(f"bad CSV row: {ln!r}")
        x, y, z, g = (int(v) for v in parts[:4])
        if int(parts[4]) != x ^ y ^ z:
            raise ValueError(f"nim_sum column mismatch at {(x, y, z)}")
        if parts[5] != ("P" if g == 0 else "N"):
            raise ValueError(f"outcome column mismatch at {(x, y, z)}")
        values[(x, y, z)] = g
    return GrundyTable(rules, bounds, values)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _parse_position(text: str) -> Position:
    parts = text.split(",")
    if len(parts) != 3:
        raise CliError(f"malformed position {text!r}: expected x,y,z")
    try:
        p = tuple(int(v) for v in parts)
    except ValueError:
        raise CliError(f"malformed position {text!r}: expected integers") from None
    if any(v < 0 for v in p):
        raise CliError(f"position coordinates must be non-negative: {text}")
    return p  # type: ignore[return-value]


def _rules_from(args) -> Rules:
    if args.rules == "rect":
        if args.k is not None:
            raise CliError("--rules rect takes no --k")
        return Rules.rectangular()
    if args.k is None:
        raise CliError("--k is required for triangular rules")
    return Rules.triangular(args.k)


def _bounds_from(args) -> Bounds:
    explicit = (args.max_x, args.max_y, args.max_z)
    if args.max is not None:
        if any(v is not None for v in explicit):
            raise CliError("--max cannot be combined with --max-x/--max-y/--max-z")
        bounds = (args.max,) * 3
    elif all(v is not None for v in explicit):
        bounds = explicit
    else:
        raise CliError("bounds required: --max N, or all of --max-x/--max-y/--max-z")
    if any(v < 0 for v in bounds):
        raise CliError(f"bounds must be non-negative, got {bounds}")
    return bounds


def _cache_dir(args) -> Path:
    env = os.environ.get("CHOCO_CACHE_DIR")
    if env:
        return Path(env)
    if args.cache_dir:
        return Path(args.cache_dir)
    return Path.home() / ".cache" / "chocbar"


def _table_for(args, rules: Rules, bounds: Bounds) -> GrundyTable:
    """Build the table, or load and refresh the opt-in CSV cache."""
    if not getattr(args, "cache", False):
        return build_table(rules, bounds, threads=args.threads)
    bx, by, bz = bounds
    path = _cache_dir(args) / f"{rules.label()}_{bx}x{by}x{bz}.csv"
    if path.is_file():
        try:
            table = table_from_csv(rules, bounds, path.read_text())
            if args.debug:
                table.validate()
            return table
        except ValueError:
            pass  # stale or corrupt cache entry: rebuild below
    table = build_table(rules, bounds, threads=args.threads)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(table_to_csv(table))
    return table


def _format_report(report: verify.VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report.to_dict())
    if fmt == "text":
        d = report.to_dict()
        lines = [
            f"check: {d['check']}",
            "rules: " + (f"tri k={d['k']}" if d["k"] is not None else "rect"),
            "bounds: {},{},{}".format(*d["bounds"]),
            "counts: " + " ".join(f"{n}={v}" for n, v in sorted(report.counts.items())),
            f"passed: {'yes' if report.passed else 'no'}",
        ]
        lines.extend(f"discrepancy: {x},{y},{z}" for x, y, z in d["discrepancies"])
        return "\n".join(lines) + "\n"
    raise CliError(f"format {fmt!r} not supported for reports")


def _positions_payload(positions: list[Position], fmt: str) -> str:
    if fmt == "json":
        return _json([list(p) for p in positions])
    if fmt == "csv":
        return "\n".join(["x,y,z"] + [f"{x},{y},{z}" for x, y, z in positions]) + "\n"
    if fmt == "text":
        return "".join(f"{x},{y},{z}\n" for x, y, z in positions)
    raise CliError(f"unknown format {fmt!r}")


def _run_single(args) -> tuple[str, int]:
    rules = _rules_from(args)
    p = _parse_position(args.position)
    g = grundy_value(rules, p)
    meta = {
        "position": list(p),
        "rules": "tri" if rules.is_triangular else "rect",
        "k": rules.k if rules.is_triangular else None,
    }
    if args.cmd == "grundy":
        if args.format == "json":
            return _json({**meta, "value": g}), 0
        if args.format == "text":
            return f"{g}\n", 0
    else:
        out = "P" if g == 0 else "N"
        if args.format == "json":
            return _json({**meta, "outcome": out}), 0
        if args.format == "text":
            return f"{out}\n", 0
    raise CliError(f"format {args.format!r} not supported for {args.cmd}")


def _run_table(args) -> tuple[str, int]:
    rules = _rules_from(args)
    bounds = _bounds_from(args)
    table = _table_for(args, rules, bounds)
    if args.format in ("csv", "text"):
        return table_to_csv(table), 0
    if args.format == "json":
        obj = {
            "rules": "tri" if rules.is_triangular else "rect",
            "k": rules.k if rules.is_triangular else None,
            "bounds": list(bounds),
            "values": [[x, y, z, g] for (x, y, z), g in table.items()],
        }
        return _json(obj), 0
    raise CliError(f"unknown format {args.format!r}")


def _run_enum(args) -> tuple[str, int]:
    rules = _rules_from(args)
    bounds = _bounds_from(args)
    table = _table_for(args, rules, bounds)
    if args.filter == "all":
        positions = [p for p, _ in table.items()]
    else:
        want_zero = args.filter == "P"
        positions = [p for p, g in table.items() if (g == 0) == want_zero]
    return _positions_payload(positions, args.format), 0


def _run_compare(args) -> tuple[str, int]:
    rules = _rules_from(args)
    bounds = _bounds_from(args)
    table = _table_for(args, rules, bounds)
    report = verify.compare_grundy_nimsum(rules, bounds, table=table)
    return _format_report(report, args.format), 0


def _run_verify(args) -> tuple[str, int]:
    bounds = _bounds_from(args)
    if args.verify_check == "char":
        rules = Rules.triangular(args.k)
        report = verify.verify_characterization(args.k, bounds, table=_table_for(args, rules, bounds))
    elif args.verify_check == "closure":
        report = verify.verify_move_closure(args.k, bounds)
    elif args.verify_check == "conj41":
        rules = Rules.triangular(args.k)
        report = verify.verify_conjecture_4m1(args.k, bounds, table=_table_for(args, rules, bounds))
    else:
        report = verify.verify_rectangular(bounds, table=_table_for(args, Rules.rectangular(), bounds))
    return _format_report(report, args.format), 0 if report.passed else 1


def _add_rules_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rules", choices=("rect", "tri"), default="tri")
    p.add_argument("--k", type=int, default=None)


def _add_bounds_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max", type=int, default=None, help="uniform bound for all coordinates")
    p.add_argument("--max-x", type=int, default=None)
    p.add_argument("--max-y", type=int, default=None)
    p.add_argument("--max-z", type=int, default=None)


def _add_output_flags(p: argparse.ArgumentParser, default_format: str) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default=default_format)
    p.add_argument("--out", default=None, help="write output to this file instead of stdout")


def _add_build_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1, help="table build threads; 0 = one per CPU")
    p.add_argument("--cache", action="store_true", help="reuse tables cached as CSV")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--debug", action="store_true", help="re-validate cached tables on load")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chocbar",
        description="Grundy values and exhaustive checks for chocolate-bar cutting games.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    for name in ("grundy", "outcome"):
        p = sub.add_parser(name, help=f"{name} of a single position")
        _add_rules_flags(p)
        p.add_argument("--position", required=True, metavar="x,y,z")
        _add_output_flags(p, "text")

    p = sub.add_parser("table", help="export the full Grundy table")
    _add_rules_flags(p)
    _add_bounds_flags(p)
    _add_output_flags(p, "csv")
    _add_build_flags(p)

    p = sub.add_parser("enum", help="list positions by outcome")
    _add_rules_flags(p)
    _add_bounds_flags(p)
    p.add_argument("--filter", choices=("P", "N", "all"), default="all")
    _add_output_flags(p, "text")
    _add_build_flags(p)

    p = sub.add_parser("compare", help="count Grundy-vs-nim-sum agreement")
    _add_rules_flags(p)
    _add_bounds_flags(p)
    _add_output_flags(p, "json")
    _add_build_flags(p)

    p = sub.add_parser("verify", help="run an exhaustive check")
    vsub = p.add_subparsers(dest="verify_check", required=True)
    for name, with_k, with_build in (
        ("char", True, True),
        ("closure", True, False),
        ("conj41", True, True),
        ("rect", False, True),
    ):
        vp = vsub.add_parser(name)
        if with_k:
            vp.add_argument("--k", type=int, required=True)
        _add_bounds_flags(vp)
        _add_output_flags(vp, "json")
        if with_build:
            _add_build_flags(vp)
    return parser


_DISPATCH = {
    "grundy": _run_single,
    "outcome": _run_single,
    "table": _run_table,
    "enum": _run_enum,
    "compare": _run_compare,
    "verify": _run_verify,
}


def main(argv=None) -> int:
    """Parse and execute; never raises for user-level errors."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        payload, code = _DISPATCH[args.cmd](args)
    except CliError as e:
        print(f"chocbar: {e}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as e:
        print(f"chocbar: {e}", file=sys.stderr)
        return 2
    try:
        if args.out:
            Path(args.out).write_text(payload)
        else:
            sys.stdout.write(payload)
    except OSError as e:
        print(f"chocbar: {e}", file=sys.stderr)
        return 2
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
