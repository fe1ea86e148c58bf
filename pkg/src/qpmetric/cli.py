"""qpm: command-line front end for system documents.

Exit codes are the contract: 0 on success (all checks pass, solver
converged, nonempty enumeration), 1 on a semantic failure (an axiom or
contraction violation, no convergence, empty enumeration), 2 on malformed
input or bad flags.  stdout formats are line-oriented and stable; see the
README for the full list.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus, documents
from .comparison import linear, verify_gamma1
from .contraction import (
    ContractionMode,
    enumerate_endpoints,
    enumerate_fixed_points,
    enumerate_startpoints,
    verify_weak_contraction,
    Violation,
)
from .documents import DocumentError, System
from .solver import Selection, SolveMode, SolverConfig, Status, solve
from .space import DEFAULT_TOLERANCE, check_axioms

_ENV_TOLERANCE = "QPM_TOLERANCE"


def _env_tolerance() -> float:
    raw = os.environ.get(_ENV_TOLERANCE)
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        return float(raw)
    except ValueError:
        raise DocumentError(_ENV_TOLERANCE, f"not a number: {raw!r}") from None


def _load(path: str, force_float: bool) -> System:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError("document", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError("document", f"invalid JSON: {exc}") from exc
    if isinstance(raw, dict):
        is_float = force_float or raw.get("arithmetic") == "float"
        if is_float and "tolerance" not in raw:
            raw["tolerance"] = _env_tolerance()
    return documents.parse_system(raw, force_float=force_float)


def _value(v) -> str:
    return str(Fraction(v)) if isinstance(v, (Fraction, int)) else repr(v)


def cmd_check(args: argparse.Namespace) -> int:
    system = _load(args.path, args.float)
    # The T0 check runs only when the document claims the condition.
    report = check_axioms(system.space)
    ok = report.ok
    for check in report.checks:
        line = f"axiom {check.axiom}: {check.status(report.sampled)}"
        if check.witness is not None:
            line += " witness=(" + ", ".join(str(w) for w in check.witness) + ")"
        print(line)
    if system.gamma is not None:
        g1 = verify_gamma1(system.gamma)
        status = "PASS" if g1.passed else "FAIL"
        line = f"gamma ({system.gamma.kind}): gamma1 {status}"
        if g1.bound_witness is not None:
            line += f" witness={g1.bound_witness}"
        if g1.monotonicity_witness is not None:
            a, b = g1.monotonicity_witness
            line += f" witness=({a}, {b})"
        print(line)
        ok = ok and g1.passed
    print(f"RESULT: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    system = _load(args.path, args.float)
    if system.map is None:
        raise DocumentError("F", "document has no set-valued map")
    if system.gamma is None:
        raise DocumentError("gamma", "document has no comparison function")
    mode = ContractionMode(args.mode)
    result = verify_weak_contraction(system.space, system.map, system.gamma, mode)
    if isinstance(result, Violation):
        print(f"VIOLATION {result.point} mode={mode.value}")
        return 1
    print(f"CERTIFICATE mode={mode.value} points={len(result.checked_points)}")
    for x in result.checked_points:
        print(f"  {x} -> {result.witnesses[x]}")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    system = _load(args.path, args.float)
    if system.map is None:
        raise DocumentError("F", "document has no set-valued map")
    if system.gamma is None:
        raise DocumentError("gamma", "document has no comparison function")
    space = system.space
    if args.start not in space.universe():
        raise DocumentError("--from", f"unknown point {args.start!r}")
    if args.tol is not None:
        tol = Fraction(args.tol) if space.exact else float(Fraction(args.tol))
    else:
        tol = Fraction(0) if space.exact else space.tolerance
    config = SolverConfig(
        mode=SolveMode(args.mode),
        tolerance=tol,
        max_iterations=args.max_iter,
        selection=Selection(args.select),
    )
    trace = solve(space, system.map, system.gamma, args.start, config)
    if args.trace is not None:
        documents.dump_trace(args.trace, trace)
    out = trace.outcome
    if out.status is Status.CONVERGED:
        print(f"CONVERGED {out.point} defect={_value(out.defect)} steps={len(trace.steps)}")
        return 0
    if out.status is Status.CONTRACTION_VIOLATED:
        print(f"CONTRACTION_VIOLATED {out.point} steps={len(trace.steps)}")
        return 1
    cycle = " cycle=true" if out.cycle else ""
    print(
        f"MAX_ITERATIONS last={out.point} defect={_value(out.defect)} "
        f"steps={len(trace.steps)}{cycle}"
    )
    return 1


def cmd_gen(args: argparse.Namespace) -> int:
    g = corpus.GeneratorSeed(seed=args.seed, size=args.size)
    gamma = linear(Fraction(1, 2))
    space, smap = corpus.random_weakly_contractive_system(g, gamma)
    documents.dump_system(
        args.out, space, smap, gamma, meta={"seed": g.seed, "size": g.size}
    )
    print(f"wrote {args.out} (seed={g.seed}, size={g.size})")
    return 0


_ENUMERATORS = {
    "startpoints": enumerate_startpoints,
    "endpoints": enumerate_endpoints,
    "fixedpoints": enumerate_fixed_points,
}


def cmd_enumerate(args: argparse.Namespace) -> int:
    system = _load(args.path, args.float)
    if system.map is None:
        raise DocumentError("F", "document has no set-valued map")
    found = _ENUMERATORS[args.what](system.space, system.map)
    for point in found:
        print(point)
    return 0 if found else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpm",
        description="Check, verify, solve and generate quasi-pseudometric systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_float(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--float",
            action="store_true",
            help="use float arithmetic with a comparison tolerance "
            f"(default exact; tolerance from the document or ${_ENV_TOLERANCE})",
        )

    p = sub.add_parser("check", help="check the space axioms (and gamma1 if present)")
    p.add_argument("path")
    add_float(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify", help="verify the weak-contraction condition")
    p.add_argument("path")
    p.add_argument(
        "--mode", choices=[m.value for m in ContractionMode], default="forward"
    )
    add_float(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("solve", help="iterate toward a startpoint/endpoint/fixed point")
    p.add_argument("path")
    p.add_argument("--mode", choices=[m.value for m in SolveMode], default="startpoint")
    p.add_argument("--from", dest="start", required=True, metavar="POINT")
    p.add_argument("--tol", default=None, help="termination tolerance (rational)")
    p.add_argument("--max-iter", type=int, default=10_000)
    p.add_argument("--select", choices=[s.value for s in Selection], default="greedy")
    p.add_argument("--trace", default=None, metavar="OUT", help="write the JSON trace here")
    add_float(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("gen", help="generate a weakly contractive system document")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("enumerate", help="brute-force startpoints/endpoints/fixed points")
    p.add_argument("path")
    p.add_argument("--what", choices=sorted(_ENUMERATORS), default="startpoints")
    add_float(p)
    p.set_defaults(fn=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        # Bad flag values (e.g. an unparseable --tol rational).
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
