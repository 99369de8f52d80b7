"""Command-line front end: suitability checks, plot data, parameter sweeps."""

from __future__ import annotations

import argparse
import copy
import json
import sys
from pathlib import Path

import numpy as np

from .basis import bernstein_basis, sample_basis, sample_curve
from .errors import ComputationError, EngineError, SpecError
from .spaces import space_from_spec
from .suitability import check_space
from .transitions import compute_transitions
from .weights import weight_samples

FLOAT_FMT = "%.17g"


def fmt(x: float) -> str:
    return FLOAT_FMT % float(x)


def load_spec(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file {path} is not valid JSON: {exc}") from None
    if not isinstance(spec, dict):
        raise SpecError("spec file must contain a JSON object")
    return spec


def parse_sweep(spec: dict) -> tuple[tuple[int, int, int], float, float, int]:
    sweep = spec.get("sweep")
    if not isinstance(sweep, dict):
        raise SpecError('spec file has no "sweep" object')
    path = sweep.get("path", "")
    parts = str(path).split("/")
    if len(parts) != 5 or parts[0] != "connections" or parts[2] != "entries":
        raise SpecError(
            f'sweep path {path!r} must look like "connections/I/entries/R/C"'
        )
    try:
        idx, row, col = int(parts[1]), int(parts[3]), int(parts[4])
    except ValueError:
        raise SpecError(f"sweep path {path!r} has non-integer indices") from None
    if not col < row:
        raise SpecError(
            f"sweep path {path!r} must address a strictly-lower-triangle entry"
        )
    try:
        lo, hi = float(sweep["from"]), float(sweep["to"])
        steps = int(sweep["steps"])
    except (KeyError, TypeError, ValueError):
        raise SpecError('sweep needs numeric "from", "to" and integer "steps"') from None
    if steps < 2:
        raise SpecError("sweep needs at least 2 steps")
    return (idx, row, col), lo, hi, steps


def spec_with_entry(spec: dict, addr: tuple[int, int, int], value: float) -> dict:
    idx, row, col = addr
    out = copy.deepcopy(spec)
    conns = out.get("connections")
    if not isinstance(conns, list) or idx >= len(conns):
        raise SpecError(f"sweep path addresses missing connection matrix {idx}")
    mat = conns[idx]
    if mat is None:
        raise SpecError("sweep path addresses an omitted (identity) matrix; "
                        "write it out explicitly to sweep one of its entries")
    try:
        mat[row][col] = value
    except (IndexError, TypeError):
        raise SpecError(
            f"sweep path entry ({row},{col}) outside matrix {idx}"
        ) from None
    return out


def write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(
                cell if isinstance(cell, str) else fmt(cell) for cell in row
            ) + "\n")


def report_text(report) -> str:
    lines = [f"suitable: {'yes' if report.suitable else 'no'}",
             f"dimension m = {report.m}, interior knots k = {report.k}"]
    if report.failure:
        f = report.failure
        lines.append(
            f"failure: level {f.level}, interval {f.interval}, "
            f"function {f.function}, coefficient {f.coefficient}, "
            f"difference {fmt(f.difference)} ({f.kind})"
        )
    if report.reason:
        lines.append(f"reason: {report.reason}")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    spec = load_spec(args.spec)
    space = space_from_spec(spec)
    report = check_space(space, tol=args.tol, trace=args.trace)
    if args.report == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(report_text(report))
    return 0 if report.suitable else 1


def cmd_basis(args) -> int:
    spec = load_spec(args.spec)
    space = space_from_spec(spec)
    transitions = compute_transitions(space)
    basis = bernstein_basis(transitions)
    table = sample_basis(basis, args.grid)
    m = space.dimension
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "basis.csv"
    header = ["x", "side"] + [f"B_{i + 1}" for i in range(m)]
    rows = (
        [x, s, *vals]
        for x, s, vals in zip(table["x"], table["side"], table["values"])
    )
    write_csv(path, header, rows)
    print(f"wrote {path}")
    return 0


def cmd_weights(args) -> int:
    spec = load_spec(args.spec)
    space = space_from_spec(spec)
    transitions = compute_transitions(space)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for sample in weight_samples(transitions, args.grid):
        path = out / f"weights_w{sample.level}.csv"
        rows = zip(sample.x, sample.side, sample.values)
        write_csv(path, ["x", "side", f"w_{sample.level}"], rows)
        print(f"wrote {path}")
    return 0


def cmd_curve(args) -> int:
    spec = load_spec(args.spec)
    space = space_from_spec(spec)
    try:
        polygon = np.loadtxt(args.control, delimiter=",", ndmin=2)
    except (OSError, ValueError) as exc:
        raise SpecError(f"cannot read control-point file: {exc}") from None
    transitions = compute_transitions(space)
    basis = bernstein_basis(transitions)
    table = sample_curve(basis, polygon, args.samples)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "curve.csv"
    d = table["points"].shape[1]
    header = ["t", "side"] + [f"p{i}" for i in range(d)]
    rows = (
        [t, s, *pt]
        for t, s, pt in zip(table["t"], table["side"], table["points"])
    )
    write_csv(path, header, rows)
    print(f"wrote {path}")
    return 0


def cmd_sweep(args) -> int:
    spec = load_spec(args.spec)
    addr, lo, hi, steps = parse_sweep(spec)
    for value in np.linspace(lo, hi, steps):
        modified = spec_with_entry(spec, addr, float(value))
        space = space_from_spec(modified)
        report = check_space(space, tol=args.tol)
        print(f"{fmt(value)}\t{'suitable' if report.suitable else 'unsuitable'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecpsplines",
        description="Suitability testing and optimal bases for piecewise "
                    "Chebyshevian spline spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=True):
        p.add_argument("spec", help="JSON spec file")
        if grid:
            p.add_argument("--grid", type=int, default=200,
                           help="points per interval for sampled output")
        p.add_argument("--tol", type=float, default=1.0,
                       help="scale factor on the monotonicity tolerance")
        p.add_argument("--out", default=".", help="output directory")

    p = sub.add_parser("check", help="run the suitability test")
    common(p, grid=False)
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.add_argument("--trace", action="store_true",
                   help="retain all intermediate coefficient tensors")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("basis", help="sample the design basis to CSV")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("weights", help="sample the weight functions to CSV")
    common(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("curve", help="sample a spline curve to CSV")
    common(p, grid=False)
    p.add_argument("--control", required=True,
                   help="CSV control points, one point per line")
    p.add_argument("--samples", type=int, default=200,
                   help="samples per interval")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("sweep", help="re-check across a matrix-entry sweep")
    common(p, grid=False)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
