"""Defect functionals and weak-contraction verification for set-valued maps.

A set-valued map F sends each point to a nonempty finite set of points in
the same space.  Three defect functionals measure how far a point is from
being distinguished for F:

* startpoint defect   H({x}, Fx) = max_{b in Fx} d(x, b),
* endpoint defect     H(Fx, {x}) = max_{a in Fx} d(a, x),
* fixed defect        max of the two (the symmetrized, H^s, defect).

A point is a startpoint / endpoint / fixed point exactly when the matching
defect is zero (within tolerance in FLOAT mode; the docs are explicit that
a FLOAT-mode "startpoint" means defect <= tolerance).

``verify_weak_contraction`` checks, over a whole finite universe, the
existential inequality that powers the iteration: every x must admit some
y in Fx whose own defect is bounded by d(x, y) - gamma(d(x, y)) (FORWARD
mode; DUAL and SYMMETRIC use the conjugate and symmetrized variants).  The
verifier is exhaustive and deterministic: candidates are scanned in
universe order, the stored witness minimizes its own defect with ties
broken by universe order, and a violation reports the smallest-index x
with no admissible candidate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .comparison import ComparisonFunction
from .space import Point, QSpace, Value, _unique


class SetValuedMap:
    """A pure map from points to nonempty finite point sets.

    Accepts either a mapping (point -> iterable of points) or a callable.
    Images are normalized to duplicate-free tuples preserving the order in
    which members were supplied (callers that care about determinism supply
    universe-ordered images; the generators in :mod:`qpmetric.corpus` do).
    Callable results are cached, so repeated queries at the same point
    always return the identical image.
    """

    def __init__(
        self,
        mapping: Mapping[Point, Iterable[Point]] | Callable[[Point], Iterable[Point]],
    ) -> None:
        if callable(mapping) and not isinstance(mapping, Mapping):
            self._fn: Callable[[Point], Iterable[Point]] | None = mapping
            self._table: dict[Point, tuple[Point, ...]] = {}
        else:
            self._fn = None
            self._table = {x: self._normalize(x, image) for x, image in mapping.items()}

    @staticmethod
    def _normalize(x: Point, image: Iterable[Point]) -> tuple[Point, ...]:
        members = _unique(tuple(image))
        if not members:
            raise ValueError(f"image of {x!r} must be nonempty")
        return members

    def __call__(self, x: Point) -> tuple[Point, ...]:
        if x not in self._table:
            if self._fn is None:
                raise KeyError(f"map is not defined at {x!r}")
            self._table[x] = self._normalize(x, self._fn(x))
        return self._table[x]

    def defined_points(self) -> tuple[Point, ...]:
        """Points with a materialized image (all of them for dict-backed maps)."""
        return tuple(self._table)


def startpoint_defect(space: QSpace, x: Point, F: SetValuedMap) -> Value:
    """H({x}, Fx): zero exactly when x is a startpoint of F."""
    return max(space.d(x, b) for b in F(x))


def endpoint_defect(space: QSpace, x: Point, F: SetValuedMap) -> Value:
    """H(Fx, {x}): the startpoint defect computed in the conjugate space."""
    return max(space.d(a, x) for a in F(x))


def fixed_defect(space: QSpace, x: Point, F: SetValuedMap) -> Value:
    """The symmetrized defect max{H({x}, Fx), H(Fx, {x})}."""
    return max(startpoint_defect(space, x, F), endpoint_defect(space, x, F))


class ContractionMode(enum.Enum):
    """Which weak-contraction inequality to check.

    FORWARD bounds the startpoint defect of the witness by
    d(x, y) - gamma(d(x, y)); DUAL bounds the endpoint defect by
    d(y, x) - gamma(d(y, x)); SYMMETRIC bounds the symmetrized defect by
    the minimum of both right-hand sides.
    """

    FORWARD = "forward"
    DUAL = "dual"
    SYMMETRIC = "symmetric"


_DEFECTS = {
    ContractionMode.FORWARD: startpoint_defect,
    ContractionMode.DUAL: endpoint_defect,
    ContractionMode.SYMMETRIC: fixed_defect,
}


def mode_defect(
    space: QSpace, x: Point, F: SetValuedMap, mode: ContractionMode
) -> Value:
    """The defect functional matching a contraction mode."""
    return _DEFECTS[mode](space, x, F)


def admissibility_bound(
    space: QSpace,
    gamma: ComparisonFunction,
    mode: ContractionMode,
    x: Point,
    y: Point,
) -> Value:
    """Right-hand side of the mode's inequality at the pair (x, y)."""
    if mode is ContractionMode.FORWARD:
        t = space.d(x, y)
        return t - gamma(t)
    if mode is ContractionMode.DUAL:
        s = space.d(y, x)
        return s - gamma(s)
    t = space.d(x, y)
    s = space.d(y, x)
    return min(t - gamma(t), s - gamma(s))


@dataclass(frozen=True)
class ContractionCertificate:
    """A full witness map: for every checked x, a y in Fx satisfying the
    mode's inequality.  The witness minimizes its own defect among the
    admissible candidates, ties broken by universe order."""

    mode: ContractionMode
    witnesses: dict[Point, Point]
    checked_points: tuple[Point, ...]


@dataclass(frozen=True)
class Violation:
    """The smallest-index point with no admissible candidate in its image."""

    mode: ContractionMode
    point: Point


def verify_weak_contraction(
    space: QSpace,
    F: SetValuedMap,
    gamma: ComparisonFunction,
    mode: ContractionMode = ContractionMode.FORWARD,
) -> ContractionCertificate | Violation:
    """Exhaustively verify the weak-contraction condition on a finite space.

    Returns a :class:`ContractionCertificate` or a :class:`Violation`;
    a violation is a reported value, not an error.  Deterministic: the
    universe is scanned in order and within one x the candidates are
    scanned in universe order, so the result does not depend on set
    iteration order or scheduling.
    """
    universe = space.universe()
    order = {p: i for i, p in enumerate(universe)}
    defect_cache: dict[Point, Value] = {}

    def defect(y: Point) -> Value:
        if y not in defect_cache:
            defect_cache[y] = mode_defect(space, y, F, mode)
        return defect_cache[y]

    witnesses: dict[Point, Point] = {}
    for x in universe:
        best: tuple[Value, int, Point] | None = None
        for y in sorted(F(x), key=order.__getitem__):
            dy = defect(y)
            if space.leq(dy, admissibility_bound(space, gamma, mode, x, y)):
                key = (dy, order[y], y)
                if best is None or key[:2] < best[:2]:
                    best = key
        if best is None:
            return Violation(mode=mode, point=x)
        witnesses[x] = best[2]
    return ContractionCertificate(mode=mode, witnesses=witnesses, checked_points=universe)


def _enumerate(space: QSpace, F: SetValuedMap, defect_fn) -> list[Point]:
    return [x for x in space.universe() if space.is_zero(defect_fn(space, x, F))]


def enumerate_startpoints(space: QSpace, F: SetValuedMap) -> list[Point]:
    """All points with zero startpoint defect, in universe order.

    Brute force over the finite universe; this is the independent oracle
    the iterative solver is tested against.  May be empty.
    """
    return _enumerate(space, F, startpoint_defect)


def enumerate_endpoints(space: QSpace, F: SetValuedMap) -> list[Point]:
    """All points with zero endpoint defect, in universe order.

    Always equals ``enumerate_startpoints(conjugate(space), F)``.
    """
    return _enumerate(space, F, endpoint_defect)


def enumerate_fixed_points(space: QSpace, F: SetValuedMap) -> list[Point]:
    """All points with zero symmetrized defect, in universe order."""
    return _enumerate(space, F, fixed_defect)
