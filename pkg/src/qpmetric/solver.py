"""Constructive startpoint/endpoint/fixed-point iteration with trace replay.

The solver iterates x_{n+1} in F(x_n), restricting the choice at every step
to *admissible* candidates y, those satisfying the weak-contraction
inequality

    defect(y) <= d(x_n, y) - gamma(d(x_n, y))

(with the conjugate or symmetrized variants for ENDPOINT and FIXEDPOINT
modes).  Admissible steps force the chain

    d(x_{n+1}, x_{n+2}) <= defect(x_{n+1}) <= d(x_n, x_{n+1})
                                              - gamma(d(x_n, x_{n+1})),

so step distances and defects are nonincreasing and the gamma values
telescope into a partial-sum bound.  ``validate_trace`` replays exactly
those inequalities on a recorded trace, plus a brute-force prefix
left-K-Cauchy certificate.

Termination is by defect: the run converges as soon as the mode defect at
the current point drops to the configured tolerance (exactly zero in EXACT
mode with tolerance 0), which is the conclusion the iteration is after.
Limit detection over infinite orbits is out of scope.

ENDPOINT mode is the startpoint algorithm run on the conjugate space, so
its traces coincide step for step with STARTPOINT traces on
``conjugate(space)``.

Choice of candidate is configurable but always restricted to admissible
ones; the existential form of the contraction condition guarantees nothing
about arbitrary members of F(x_n).  Experimenters who want to try other
selection rules can build on :func:`admissible_candidates`.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .comparison import ComparisonFunction, SampledComparisonWarning
from .contraction import (
    ContractionMode,
    SetValuedMap,
    admissibility_bound,
    mode_defect,
)
from .space import Point, QSpace, Value, conjugate


class SolveMode(enum.Enum):
    STARTPOINT = "startpoint"
    ENDPOINT = "endpoint"
    FIXEDPOINT = "fixedpoint"


class Selection(enum.Enum):
    """How to pick among admissible candidates.

    GREEDY_MIN_DEFECT takes the admissible candidate minimizing its own
    defect; FIRST_ADMISSIBLE takes the first admissible candidate.  Ties
    and "first" are resolved by universe order on finite spaces and by
    image encounter order on oracle spaces, so both rules are
    deterministic.
    """

    GREEDY_MIN_DEFECT = "greedy"
    FIRST_ADMISSIBLE = "first"


#: Solve modes map onto the contraction inequality they enforce.
_CONTRACTION_OF = {
    SolveMode.STARTPOINT: ContractionMode.FORWARD,
    SolveMode.ENDPOINT: ContractionMode.FORWARD,  # in the conjugate space
    SolveMode.FIXEDPOINT: ContractionMode.SYMMETRIC,
}


@dataclass(frozen=True)
class SolverConfig:
    mode: SolveMode = SolveMode.STARTPOINT
    tolerance: Value = 0
    max_iterations: int = 10_000
    selection: Selection = Selection.GREEDY_MIN_DEFECT

    def __post_init__(self) -> None:
        if self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")


@dataclass(frozen=True)
class Step:
    """One iteration record: from x the solver chose y in F(x).

    ``d`` is the step distance in the space the iteration ran in (the
    conjugate for ENDPOINT runs), ``gamma_d`` its gamma value, ``defect``
    the mode defect of y.  Steps are numbered from 1.
    """

    n: int
    x: Point
    y: Point
    d: Value
    gamma_d: Value
    defect: Value


class Status(enum.Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    CONTRACTION_VIOLATED = "contraction_violated"


@dataclass(frozen=True)
class Outcome:
    """Terminal state of a run.

    ``point`` is the converged point, the last point visited
    (MAX_ITERATIONS), or the point whose image held no admissible
    candidate (CONTRACTION_VIOLATED).  ``cycle`` marks early exhaustion
    because the orbit was revisiting points without improving the defect.
    """

    status: Status
    point: Point
    defect: Value
    cycle: bool = False


@dataclass(frozen=True)
class IterationTrace:
    """Full record of one run: start point, steps, outcome.

    ``space`` is the space the iteration effectively ran in (the conjugate
    of the input for ENDPOINT runs); it is kept for trace validation and
    is not serialized.
    """

    mode: SolveMode
    start: Point
    initial_defect: Value
    steps: tuple[Step, ...]
    outcome: Outcome
    space: QSpace | None = field(default=None, repr=False, compare=False)

    @property
    def points(self) -> tuple[Point, ...]:
        """The visited orbit x_0, x_1, ..., in order."""
        return (self.start,) + tuple(s.y for s in self.steps)


def admissible_candidates(
    space: QSpace,
    F: SetValuedMap,
    gamma: ComparisonFunction,
    x: Point,
    mode: ContractionMode = ContractionMode.FORWARD,
) -> list[tuple[Point, Value]]:
    """Deterministically ordered admissible (candidate, defect) pairs at x.

    The hook for custom selection experiments: everything the solver knows
    about one step is in this list.  Order is universe order when the
    space is finite, image encounter order otherwise.
    """
    candidates = F(x)
    if space.finite:
        order = {p: i for i, p in enumerate(space.universe())}
        candidates = sorted(candidates, key=order.__getitem__)
    out = []
    for y in candidates:
        dy = mode_defect(space, y, F, mode)
        if space.leq(dy, admissibility_bound(space, gamma, mode, x, y)):
            out.append((y, dy))
    return out


def solve(
    space: QSpace,
    F: SetValuedMap,
    gamma: ComparisonFunction,
    x0: Point,
    config: SolverConfig | None = None,
) -> IterationTrace:
    """Iterate F from x0 until the mode defect reaches the tolerance.

    Outcomes (never exceptions):

    * CONVERGED(x*, defect): defect <= tolerance; with EXACT arithmetic and
      tolerance 0 the returned point is a genuine startpoint, endpoint or
      fixed point.
    * CONTRACTION_VIOLATED(x): no candidate in F(x) satisfies the
      admissibility inequality, i.e. the weak-contraction hypothesis fails
      on the visited orbit.
    * MAX_ITERATIONS: budget exhausted, or (flagged via ``cycle``) the
      orbit kept revisiting points without improving the defect, which on
      a finite space only happens when the hypothesis fails.

    Identical inputs and config produce identical traces.
    """
    config = config or SolverConfig()
    if not space.exact and config.tolerance == 0:
        raise ValueError("tolerance 0 requires EXACT arithmetic")
    if not gamma.certified:
        warnings.warn(
            "gamma is only SAMPLED: the summability condition (g2) is not "
            "certified, so convergence is not guaranteed",
            SampledComparisonWarning,
            stacklevel=2,
        )

    work = conjugate(space) if config.mode is SolveMode.ENDPOINT else space
    cmode = _CONTRACTION_OF[config.mode]

    defect_cache: dict[Point, Value] = {}

    def defect(p: Point) -> Value:
        if p not in defect_cache:
            defect_cache[p] = mode_defect(work, p, F, cmode)
        return defect_cache[p]

    steps: list[Step] = []
    x = x0
    current = defect(x)
    initial = current
    visited = {x}
    best = current
    stall = 0
    outcome: Outcome | None = None

    while True:
        if current <= config.tolerance:
            outcome = Outcome(Status.CONVERGED, x, current)
            break
        if len(steps) >= config.max_iterations:
            outcome = Outcome(Status.MAX_ITERATIONS, x, current)
            break

        admissible = admissible_candidates(work, F, gamma, x, cmode)
        if not admissible:
            outcome = Outcome(Status.CONTRACTION_VIOLATED, x, current)
            break
        if config.selection is Selection.GREEDY_MIN_DEFECT:
            y, dy = min(admissible, key=lambda pair: pair[1])
        else:
            y, dy = admissible[0]

        t = work.d(x, y)
        steps.append(Step(n=len(steps) + 1, x=x, y=y, d=t, gamma_d=gamma(t), defect=dy))
        x, current = y, dy

        # Finite spaces cycle only when the hypothesis fails; bail out
        # before burning the whole budget.
        if x in visited and not current < best:
            stall += 1
        else:
            stall = 0
        visited.add(x)
        best = min(best, current)
        if stall >= len(visited):
            outcome = Outcome(Status.MAX_ITERATIONS, x, current, cycle=True)
            break

    return IterationTrace(
        mode=config.mode,
        start=x0,
        initial_defect=initial,
        steps=tuple(steps),
        outcome=outcome,
        space=work,
    )


#: Fixed descending epsilon schedule for the prefix left-K-Cauchy
#: certificate: 1, 1/2, 1/4, ..., 2^-16.
EPSILON_SCHEDULE: tuple[Fraction, ...] = tuple(Fraction(1, 2**k) for k in range(17))


@dataclass(frozen=True)
class CheckResult:
    """PASS, or FAIL at ``first_failure``: the step number n whose value
    broke monotonicity, or the prefix length m whose partial-sum bound
    failed."""

    passed: bool
    first_failure: int | None = None


@dataclass(frozen=True)
class TraceReport:
    """Replay of the iteration inequalities on a recorded trace.

    ``steps_monotone``: step distances d_n never increase.
    ``defects_monotone``: defects never increase (the initial defect is
    included ahead of the per-step defects).
    ``partial_sums``: for every m >= 3, the gamma values of the first
    m - 2 step distances sum to at most d_1 - d_{m-1} (hence at most d_1).
    ``cauchy``: per epsilon of the fixed schedule, the smallest index n0
    such that every recorded forward distance d(x_k, x_n) with
    n0 <= k <= n stays below epsilon; None when no space was available to
    evaluate distances (e.g. a hand-built trace).
    """

    steps_monotone: CheckResult
    defects_monotone: CheckResult
    partial_sums: CheckResult
    cauchy: tuple[tuple[Fraction, int], ...] | None

    @property
    def ok(self) -> bool:
        return (
            self.steps_monotone.passed
            and self.defects_monotone.passed
            and self.partial_sums.passed
        )


def validate_trace(
    trace: IterationTrace,
    gamma: ComparisonFunction,
    space: QSpace | None = None,
) -> TraceReport:
    """Re-verify the solver's inequalities from the recorded values.

    Works from the trace alone (gamma values are recomputed from the
    recorded step distances, not trusted).  The left-K-Cauchy certificate
    additionally needs the distance oracle; it uses ``space`` or, by
    default, the space the trace ran in, and is skipped (None) when
    neither is available.
    """
    space = space if space is not None else trace.space
    if space is not None:
        leq = space.leq
    else:
        leq = lambda a, b: a <= b  # noqa: E731  (hand-built traces: exact)

    ds = [s.d for s in trace.steps]
    defects = [trace.initial_defect] + [s.defect for s in trace.steps]

    steps_monotone = CheckResult(True)
    for i in range(1, len(ds)):
        if not leq(ds[i], ds[i - 1]):
            steps_monotone = CheckResult(False, trace.steps[i].n)
            break

    defects_monotone = CheckResult(True)
    for i in range(1, len(defects)):
        if not leq(defects[i], defects[i - 1]):
            defects_monotone = CheckResult(False, trace.steps[i - 1].n)
            break

    partial = CheckResult(True)
    if len(ds) >= 2:
        total = 0
        # 1-based: d_1 is the first recorded step distance.
        for m in range(3, len(ds) + 2):
            total = total + gamma(ds[m - 3])
            if not leq(total, ds[0] - ds[m - 2]):
                partial = CheckResult(False, m)
                break

    cauchy = None
    if space is not None:
        pts = trace.points
        last = len(pts) - 1
        table = []
        for eps in EPSILON_SCHEDULE:
            n0 = last
            # Brute force: smallest n0 with d(x_k, x_n) < eps for all
            # n0 <= k <= n <= last.  n0 = last always works (d(x, x) = 0).
            for start in range(last + 1):
                ok = all(
                    space.d(pts[k], pts[n]) < eps
                    for k in range(start, last + 1)
                    for n in range(k, last + 1)
                )
                if ok:
                    n0 = start
                    break
            table.append((eps, n0))
        cauchy = tuple(table)

    return TraceReport(
        steps_monotone=steps_monotone,
        defects_monotone=defects_monotone,
        partial_sums=partial,
        cauchy=cauchy,
    )
