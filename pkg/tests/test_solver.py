from fractions import Fraction

import pytest

from qpmetric import (
    GeneratorSeed,
    IterationTrace,
    Outcome,
    SampledComparisonWarning,
    Selection,
    SetValuedMap,
    SolveMode,
    SolverConfig,
    Status,
    Step,
    admissible_candidates,
    conjugate,
    dyadic_halving_system,
    enumerate_startpoints,
    from_matrix,
    linear,
    random_weakly_contractive_system,
    solve,
    user_function,
    validate_trace,
)

F = Fraction
ZERO, ONE = F(0), F(1)


@pytest.fixture
def dyadic():
    return dyadic_halving_system()


class TestSolve:
    def test_dyadic_from_one_single_greedy_step(self, dyadic):
        space, Fm, gamma = dyadic
        trace = solve(space, Fm, gamma, ONE)
        assert trace.outcome == Outcome(Status.CONVERGED, ZERO, ZERO)
        # One step: 1/2 is inadmissible (defect 1 > 2 - 1... over d=1), 0 wins.
        assert trace.steps == (
            Step(n=1, x=ONE, y=ZERO, d=F(2), gamma_d=ONE, defect=ZERO),
        )
        assert trace.initial_defect == 2

    def test_start_at_startpoint_is_zero_steps(self, dyadic):
        space, Fm, gamma = dyadic
        trace = solve(space, Fm, gamma, ZERO)
        assert trace.outcome.status is Status.CONVERGED
        assert trace.steps == ()

    def test_swap_map_violates_immediately(self, swap_system):
        space, Fm, gamma = swap_system
        trace = solve(space, Fm, gamma, "a")
        assert trace.outcome == Outcome(Status.CONTRACTION_VIOLATED, "a", ONE)
        assert trace.steps == ()

    def test_greedy_vs_first_selection(self, funnel_system):
        space, Fm, gamma = funnel_system
        greedy = solve(space, Fm, gamma, "a")
        assert greedy.outcome.point == "c"
        assert [s.y for s in greedy.steps] == ["c"]
        first = solve(
            space, Fm, gamma, "a", SolverConfig(selection=Selection.FIRST_ADMISSIBLE)
        )
        assert first.outcome.point == "c"
        assert [s.y for s in first.steps] == ["b", "c"]

    def test_admissible_candidates_hook(self, funnel_system):
        space, Fm, gamma = funnel_system
        pairs = admissible_candidates(space, Fm, gamma, "a")
        assert pairs == [("b", F(1, 4)), ("c", ZERO)]

    def test_endpoint_equals_startpoint_on_conjugate(self):
        gamma = linear(F(1, 2))
        for seed in range(8):
            space, Fm = random_weakly_contractive_system(GeneratorSeed(seed=seed, size=7))
            for x0 in space.universe():
                via_endpoint = solve(space, Fm, gamma, x0, SolverConfig(mode=SolveMode.ENDPOINT))
                via_conjugate = solve(conjugate(space), Fm, gamma, x0)
                assert via_endpoint.steps == via_conjugate.steps
                assert via_endpoint.outcome == via_conjugate.outcome

    def test_fixedpoint_mode_on_dyadic(self, dyadic):
        space, Fm, gamma = dyadic
        trace = solve(space, Fm, gamma, ONE, SolverConfig(mode=SolveMode.FIXEDPOINT))
        assert trace.outcome.status is Status.CONVERGED
        assert trace.outcome.point == ZERO
        assert len(trace.steps) == 1

    def test_converged_points_are_enumerated_startpoints(self):
        gamma = linear(F(1, 2))
        for seed in range(10):
            space, Fm = random_weakly_contractive_system(GeneratorSeed(seed=seed, size=8))
            oracle = enumerate_startpoints(space, Fm)
            for x0 in space.universe():
                trace = solve(space, Fm, gamma, x0)
                assert trace.outcome.status is Status.CONVERGED
                assert trace.outcome.defect == 0
                assert trace.outcome.point in oracle
                zero_steps = len(trace.steps) == 0
                assert zero_steps == (x0 in oracle)

    def test_deterministic_traces(self):
        gamma = linear(F(1, 2))
        space, Fm = random_weakly_contractive_system(GeneratorSeed(seed=77, size=9))
        for x0 in space.universe():
            a = solve(space, Fm, gamma, x0)
            b = solve(space, Fm, gamma, x0)
            assert a.steps == b.steps and a.outcome == b.outcome

    def test_sampled_gamma_warns(self, dyadic):
        space, Fm, _ = dyadic
        with pytest.warns(SampledComparisonWarning):
            solve(space, Fm, user_function(lambda t: t / 2), ONE)

    def test_certified_gamma_does_not_warn(self, dyadic):
        import warnings

        space, Fm, gamma = dyadic
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            solve(space, Fm, gamma, ONE)

    def test_max_iterations_budget(self, funnel_system):
        space, Fm, gamma = funnel_system
        trace = solve(
            space,
            Fm,
            gamma,
            "a",
            SolverConfig(selection=Selection.FIRST_ADMISSIBLE, max_iterations=1),
        )
        assert trace.outcome.status is Status.MAX_ITERATIONS
        assert not trace.outcome.cycle
        assert trace.outcome.point == "b"

    def test_degenerate_gamma_cycles_flagged(self, swap_system):
        # gamma == 0 admits the swap forever; the cycle exit should fire
        # long before the 10k budget.
        space, Fm, _ = swap_system
        with pytest.warns(SampledComparisonWarning):
            trace = solve(space, Fm, user_function(lambda t: 0 * t), "a")
        assert trace.outcome.status is Status.MAX_ITERATIONS
        assert trace.outcome.cycle
        assert len(trace.steps) < 10

    def test_float_space_requires_positive_tolerance(self):
        space = from_matrix(("a", "b"), [[0, 1], [1, 0]], exact=False)
        Fm = SetValuedMap({"a": ["a"], "b": ["b"]})
        with pytest.raises(ValueError):
            solve(space, Fm, linear(F(1, 2)), "a", SolverConfig(tolerance=0))
        trace = solve(space, Fm, linear(F(1, 2)), "a", SolverConfig(tolerance=1e-9))
        assert trace.outcome.status is Status.CONVERGED

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SolverConfig(tolerance=-1)
        with pytest.raises(ValueError):
            SolverConfig(max_iterations=0)


def _hand_trace(ds, defects, initial=None, gammas=None):
    """Assemble a trace from raw step distances and defects."""
    steps = tuple(
        Step(
            n=i + 1,
            x=f"x{i}",
            y=f"x{i + 1}",
            d=d,
            gamma_d=gammas[i] if gammas else d / 2,
            defect=defect,
        )
        for i, (d, defect) in enumerate(zip(ds, defects))
    )
    return IterationTrace(
        mode=SolveMode.STARTPOINT,
        start="x0",
        initial_defect=ds[0] if initial is None else initial,
        steps=steps,
        outcome=Outcome(Status.CONVERGED, f"x{len(ds)}", defects[-1]),
    )


class TestValidateTrace:
    def test_solver_traces_pass(self, dyadic):
        space, Fm, gamma = dyadic
        trace = solve(space, Fm, gamma, ONE)
        report = validate_trace(trace, gamma)
        assert report.ok
        assert report.cauchy is not None

    def test_multistep_trace_passes(self, funnel_system):
        space, Fm, gamma = funnel_system
        trace = solve(
            space, Fm, gamma, "a", SolverConfig(selection=Selection.FIRST_ADMISSIBLE)
        )
        report = validate_trace(trace, gamma)
        assert report.ok

    def test_increasing_step_distances_fail(self):
        gamma = linear(F(1, 2))
        trace = _hand_trace([ONE, F(2)], [F(1, 2), F(1, 4)])
        report = validate_trace(trace, gamma)
        assert not report.steps_monotone.passed
        assert report.steps_monotone.first_failure == 2

    def test_increasing_defects_fail(self):
        gamma = linear(F(1, 2))
        trace = _hand_trace([F(2), ONE], [F(1, 2), F(3, 4)], initial=F(2))
        report = validate_trace(trace, gamma)
        assert report.steps_monotone.passed
        assert not report.defects_monotone.passed
        assert report.defects_monotone.first_failure == 2

    def test_partial_sum_bound_fails(self):
        # d barely shrinks while gamma(d_1) = 1/2 exceeds d_1 - d_2 = 1/8.
        gamma = linear(F(1, 2))
        trace = _hand_trace([ONE, F(7, 8)], [F(7, 8), F(3, 4)], initial=F(2))
        report = validate_trace(trace, gamma)
        assert report.steps_monotone.passed
        assert report.defects_monotone.passed
        assert not report.partial_sums.passed
        assert report.partial_sums.first_failure == 3

    def test_gamma_recomputed_not_trusted(self):
        # Recorded gamma_d values are garbage; only recorded d matters.
        gamma = linear(F(1, 2))
        trace = _hand_trace([F(2), ONE], [ONE, F(1, 2)], initial=F(2), gammas=[F(99), F(99)])
        assert validate_trace(trace, gamma).ok

    def test_cauchy_skipped_without_space(self):
        gamma = linear(F(1, 2))
        trace = _hand_trace([F(2), ONE], [ONE, F(1, 2)], initial=F(2))
        assert validate_trace(trace, gamma).cauchy is None

    def test_cauchy_certificate_is_valid_and_minimal(self):
        gamma = linear(F(1, 2))
        space, Fm = random_weakly_contractive_system(GeneratorSeed(seed=13, size=9), gamma)
        longest = max(
            (solve(space, Fm, gamma, x0, SolverConfig(selection=Selection.FIRST_ADMISSIBLE))
             for x0 in space.universe()),
            key=lambda t: len(t.steps),
        )
        report = validate_trace(longest, gamma)
        pts = longest.points
        last = len(pts) - 1
        for eps, n0 in report.cauchy:
            tail = range(n0, last + 1)
            assert all(space.d(pts[k], pts[n]) < eps for k in tail for n in tail if k <= n)
            if n0 > 0:
                before = range(n0 - 1, last + 1)
                assert not all(
                    space.d(pts[k], pts[n]) < eps for k in before for n in before if k <= n
                )
