"""JSON system documents and trace serialization.

A *system document* is one self-contained JSON object describing a finite
space, optionally with a set-valued map and a comparison function:

    {
      "points": ["p0", "p1", ...],          point identifiers (strings)
      "d": [["0", "1/2"], ["1", "0"]],      row-major, d[i][j] = d(p_i, p_j)
      "t0": true,                           claims the T0 condition
      "arithmetic": "exact" | "float",      default "exact"
      "tolerance": 1e-9,                    FLOAT mode only, optional
      "F": {"p0": ["p1"], ...},             optional; must cover every point
      "gamma": {"kind": "linear", "c": "1/2"}
               | {"kind": "rational_shrink"}
               | {"kind": "user", "table": [[t, gt], ...]},
      "meta": {...}                         optional free-form metadata
    }

In EXACT mode distance entries are rationals, written as "p/q" strings
(plain integers also parse); FLOAT mode uses JSON numbers.  Malformed
input raises :class:`DocumentError` carrying the offending field, which
the CLI turns into exit code 2; semantically bad but well-formed content
(say, a nonzero diagonal) parses fine and is left to the axiom checker.

Iteration traces serialize one way (they are outputs):

    {"mode": ..., "start": ..., "initial_defect": ...,
     "steps": [{"n", "x", "y", "d", "gamma_d", "defect"}, ...],
     "outcome": {"status", "point", "defect", "steps", "cycle"}}

with rational strings in EXACT mode and points rendered with ``str``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .comparison import ComparisonFunction, linear, rational_shrink, user_table
from .contraction import SetValuedMap
from .solver import IterationTrace
from .space import DEFAULT_TOLERANCE, QSpace, Value, distance_matrix, from_matrix


class DocumentError(ValueError):
    """Malformed document; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


def encode_value(v: Value, exact: bool) -> str | float:
    if exact:
        return str(Fraction(v))
    return float(v)


def parse_value(raw: Any, exact: bool, field: str) -> Value:
    try:
        if exact:
            if isinstance(raw, float):
                return Fraction(str(raw))
            return Fraction(raw)
        return float(Fraction(raw)) if isinstance(raw, str) else float(raw)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DocumentError(field, f"not a valid number: {raw!r}") from exc


@dataclass(frozen=True)
class System:
    """A parsed system document."""

    space: QSpace
    map: SetValuedMap | None = None
    gamma: ComparisonFunction | None = None
    meta: Mapping[str, Any] | None = None


def _parse_gamma(doc: Any) -> ComparisonFunction:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DocumentError("gamma", "expected an object with a 'kind' field")
    kind = doc["kind"]
    try:
        if kind == "linear":
            if "c" not in doc:
                raise DocumentError("gamma.c", "linear kind requires a factor")
            return linear(parse_value(doc["c"], True, "gamma.c"))
        if kind == "rational_shrink":
            return rational_shrink()
        if kind == "user":
            table = doc.get("table")
            if not isinstance(table, list) or not table:
                raise DocumentError("gamma.table", "user kind requires a nonempty table")
            knots = []
            for i, pair in enumerate(table):
                if not isinstance(pair, list) or len(pair) != 2:
                    raise DocumentError(f"gamma.table[{i}]", "expected a [t, gamma_t] pair")
                knots.append(
                    (
                        parse_value(pair[0], True, f"gamma.table[{i}][0]"),
                        parse_value(pair[1], True, f"gamma.table[{i}][1]"),
                    )
                )
            return user_table(knots)
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError("gamma", str(exc)) from exc
    raise DocumentError("gamma.kind", f"unknown kind {kind!r}")


def gamma_document(gamma: ComparisonFunction) -> dict[str, Any]:
    if gamma.kind == "linear":
        return {"kind": "linear", "c": str(gamma.c)}
    if gamma.kind == "rational_shrink":
        return {"kind": "rational_shrink"}
    if gamma.table is None:
        raise ValueError("callable-backed user functions do not serialize")
    return {
        "kind": "user",
        "table": [[encode_value(t, True), encode_value(v, True)] for t, v in gamma.table],
    }


def parse_system(doc: Any, *, force_float: bool = False) -> System:
    """Parse a system document into live objects.

    ``force_float`` overrides the document's arithmetic flag (the CLI's
    ``--float``).  Raises :class:`DocumentError` on the first malformed
    field.
    """
    if not isinstance(doc, dict):
        raise DocumentError("document", "expected a JSON object")

    points = doc.get("points")
    if not isinstance(points, list) or not points:
        raise DocumentError("points", "expected a nonempty list of point ids")
    if any(not isinstance(p, str) for p in points):
        raise DocumentError("points", "point ids must be strings")
    if len(set(points)) != len(points):
        raise DocumentError("points", "duplicate point ids")

    arithmetic = doc.get("arithmetic", "exact")
    if arithmetic not in ("exact", "float"):
        raise DocumentError("arithmetic", f"expected 'exact' or 'float', got {arithmetic!r}")
    exact = arithmetic == "exact" and not force_float

    n = len(points)
    matrix = doc.get("d")
    if not isinstance(matrix, list) or len(matrix) != n:
        raise DocumentError("d", f"expected a {n}x{n} matrix")
    rows = []
    for i, row in enumerate(matrix):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"d[{i}]", f"expected a row of {n} entries")
        parsed_row = []
        for j, raw in enumerate(row):
            v = parse_value(raw, exact, f"d[{i}][{j}]")
            if v < 0:
                raise DocumentError(f"d[{i}][{j}]", "distances must be nonnegative")
            parsed_row.append(v)
        rows.append(parsed_row)

    t0 = doc.get("t0", False)
    if not isinstance(t0, bool):
        raise DocumentError("t0", "expected a boolean")

    tolerance = doc.get("tolerance", DEFAULT_TOLERANCE)
    if not isinstance(tolerance, (int, float)) or tolerance < 0:
        raise DocumentError("tolerance", "expected a nonnegative number")

    space = from_matrix(points, rows, exact=exact, t0=t0, tolerance=float(tolerance))

    smap = None
    if "F" in doc:
        fdoc = doc["F"]
        if not isinstance(fdoc, dict):
            raise DocumentError("F", "expected an object mapping points to images")
        universe = set(points)
        images: dict[str, list[str]] = {}
        for x, image in fdoc.items():
            if x not in universe:
                raise DocumentError(f"F.{x}", "not a point of the space")
            if not isinstance(image, list) or not image:
                raise DocumentError(f"F.{x}", "image must be a nonempty list")
            if len(set(image)) != len(image):
                raise DocumentError(f"F.{x}", "image contains duplicates")
            for target in image:
                if target not in universe:
                    raise DocumentError(f"F.{x}", f"image point {target!r} is not in the space")
            images[x] = list(image)
        missing = [p for p in points if p not in images]
        if missing:
            raise DocumentError(f"F.{missing[0]}", "no image for this point")
        smap = SetValuedMap(images)

    gamma = _parse_gamma(doc["gamma"]) if "gamma" in doc else None
    return System(space=space, map=smap, gamma=gamma, meta=doc.get("meta"))


def system_document(
    space: QSpace,
    F: SetValuedMap | None = None,
    gamma: ComparisonFunction | None = None,
    meta: Mapping[str, Any] | None = None,
) -> dict[str, Any]:
    """Serialize a finite system to a document (inverse of parse_system)."""
    points = space.universe()
    ids = [str(p) for p in points]
    if len(set(ids)) != len(ids):
        raise ValueError("point ids collide when rendered as strings")
    doc: dict[str, Any] = {
        "points": ids,
        "d": [
            [encode_value(v, space.exact) for v in row] for row in distance_matrix(space)
        ],
        "t0": space.t0,
        "arithmetic": "exact" if space.exact else "float",
    }
    if not space.exact:
        doc["tolerance"] = space.tolerance
    if F is not None:
        doc["F"] = {str(x): [str(y) for y in F(x)] for x in points}
    if gamma is not None:
        doc["gamma"] = gamma_document(gamma)
    if meta is not None:
        doc["meta"] = dict(meta)
    return doc


def load_system(path: str | Path, *, force_float: bool = False) -> System:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError("document", f"invalid JSON: {exc}") from exc
    return parse_system(raw, force_float=force_float)


def dump_system(
    path: str | Path,
    space: QSpace,
    F: SetValuedMap | None = None,
    gamma: ComparisonFunction | None = None,
    meta: Mapping[str, Any] | None = None,
) -> None:
    doc = system_document(space, F, gamma, meta)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def trace_document(trace: IterationTrace) -> dict[str, Any]:
    """Serialize an iteration trace (EXACT runs use rational strings)."""
    exact = trace.space.exact if trace.space is not None else True
    enc = lambda v: encode_value(v, exact)  # noqa: E731
    return {
        "mode": trace.mode.value,
        "start": str(trace.start),
        "initial_defect": enc(trace.initial_defect),
        "steps": [
            {
                "n": s.n,
                "x": str(s.x),
                "y": str(s.y),
                "d": enc(s.d),
                "gamma_d": enc(s.gamma_d),
                "defect": enc(s.defect),
            }
            for s in trace.steps
        ],
        "outcome": {
            "status": trace.outcome.status.value,
            "point": str(trace.outcome.point),
            "defect": enc(trace.outcome.defect),
            "steps": len(trace.steps),
            "cycle": trace.outcome.cycle,
        },
    }


def dump_trace(path: str | Path, trace: IterationTrace) -> None:
    Path(path).write_text(json.dumps(trace_document(trace), indent=2) + "\n", encoding="utf-8")
