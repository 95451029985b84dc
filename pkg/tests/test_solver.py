import itertools
import random
from dataclasses import replace

import numpy as np
import pytest

from splitcut import (
    AlphaBetaDomination,
    DCut,
    Interval,
    InternalPartition,
    ProblemSpec,
    ResourceLimitError,
    SolverOptions,
    brute_force_count,
    construct_witness,
    count_solutions,
    optimize_size,
    random_graph,
    solve,
    solve_vector_box_sum,
    solve_with_size,
    validate_cut,
)
from splitcut.solver import phase_candidate_masks

from conftest import edgeless_graph
from helpers import random_problem

SPLIT = SolverOptions(engine="splitlist")


class TestNamedInstances:
    def test_p4_internal_count(self, p4):
        spec = ProblemSpec(InternalPartition(), mode="count")
        assert solve(p4, spec, SPLIT).count == 2

    def test_p4_internal_found_in_degenerate_sweep(self, p4):
        # both feasible cuts have one half-side empty, so they belong to the
        # degenerate sweep, not the main join
        feasible = {c.left.mask for c in brute_force_count(p4, InternalPartition(), materialize=True).cuts}
        assert feasible == {0b0011, 0b1100}
        phase_a, phase_b = phase_candidate_masks(p4)
        assert feasible <= set(phase_b.tolist())
        assert not feasible & set(phase_a.tolist())

    def test_c4_dcut_decide(self, c4):
        assert solve(c4, ProblemSpec(DCut(1)), SPLIT).feasible

    def test_k4_dcut_decide(self, k4):
        result = solve(k4, ProblemSpec(DCut(1)), SPLIT)
        assert not result.feasible
        assert result.count == 0

    def test_counts(self, c4, k3):
        assert count_solutions(c4, ProblemSpec(DCut(1)), SPLIT) == 4
        assert count_solutions(edgeless_graph(4), ProblemSpec(InternalPartition()), SPLIT) == 14
        abdom = ProblemSpec(AlphaBetaDomination(Interval(0, 0), Interval(0, 3)))
        assert count_solutions(k3, abdom, SPLIT) == 3


class TestWitness:
    def test_c4_witness_is_valid(self, c4):
        w = construct_witness(c4, ProblemSpec(DCut(1)), SPLIT)
        assert w is not None
        assert validate_cut(c4, DCut(1), w)[0]
        feasible = {c.left.mask for c in brute_force_count(c4, DCut(1), materialize=True).cuts}
        assert w.left.mask in feasible

    def test_k4_no_witness(self, k4):
        assert construct_witness(k4, ProblemSpec(DCut(1)), SPLIT) is None

    def test_two_edges_witness(self, two_edges):
        w = construct_witness(two_edges, ProblemSpec(InternalPartition()), SPLIT)
        assert w.left.mask in (0b0011, 0b1100)

    def test_witness_soundness_random(self, rng):
        for _ in range(30):
            n = rng.randint(1, 12)
            g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
            problem = random_problem(rng, n)
            spec = ProblemSpec(problem, mode="witness")
            result = solve(g, spec, SPLIT)
            expected = brute_force_count(g, problem).count
            assert result.feasible == (expected > 0)
            assert (result.witness is not None) == result.feasible
            if result.witness is not None:
                assert result.witness.proper
                assert validate_cut(g, problem, result.witness)[0]

    def test_pairjoin_witness(self, rng):
        # the quadratic join extracts witnesses without an index
        opts = SolverOptions(engine="pairjoin")
        for _ in range(15):
            n = rng.randint(4, 11)
            g = random_graph(n, 0.4, rng)
            problem = random_problem(rng, n)
            spec = ProblemSpec(problem, mode="witness")
            result = solve(g, spec, opts)
            assert result.feasible == (brute_force_count(g, problem).count > 0)
            if result.witness is not None:
                assert validate_cut(g, problem, result.witness)[0]


class TestEngineEquivalence:
    def test_all_routes_agree(self, rng):
        option_sets = [
            SolverOptions(),  # auto
            SolverOptions(engine="splitlist"),
            SolverOptions(engine="pairjoin"),
            SolverOptions(engine="brute"),
            SolverOptions(engine="splitlist", index_engine="naive"),
            SolverOptions(engine="splitlist", prune=False),
            SolverOptions(engine="splitlist", leaf_threshold=1),
            SolverOptions(engine="splitlist", leaf_threshold=1024),
            SolverOptions(engine="splitlist", shuffle_coords=True, seed=9),
            SolverOptions(engine="splitlist", threads=3),
        ]
        for _ in range(25):
            n = rng.randint(1, 12)
            g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
            spec = ProblemSpec(random_problem(rng, n), mode="count")
            counts = {solve(g, spec, opts).count for opts in option_sets}
            assert len(counts) == 1

    def test_internal_routes_agree(self, rng):
        for _ in range(15):
            n = rng.randint(1, 10)
            g = random_graph(n, 0.5, rng)
            spec = ProblemSpec(InternalPartition(), mode="count")
            direct = solve(g, spec, SolverOptions(engine="splitlist"))
            via_icc = solve(
                g, spec, SolverOptions(engine="splitlist", internal_route="icc")
            )
            assert direct.count == via_icc.count

    def test_auto_delegates_small(self, rng):
        g = random_graph(6, 0.5, rng)
        spec = ProblemSpec(DCut(1), mode="count")
        auto = solve(g, spec, SolverOptions())
        assert auto.stats.stored == 0 and auto.stats.queries == 0
        forced = solve(g, spec, SolverOptions(engine="splitlist"))
        assert forced.stats.queries > 0
        assert auto.count == forced.count


class TestSizeModes:
    def test_k3_abdom_sizes(self, k3):
        spec = ProblemSpec(AlphaBetaDomination(Interval(0, 0), Interval(0, 3)))
        assert solve_with_size(k3, spec, 1, SPLIT).count == 3
        assert solve_with_size(k3, spec, 2, SPLIT).count == 0

    def test_edgeless_internal_t2(self):
        spec = ProblemSpec(InternalPartition())
        assert solve_with_size(edgeless_graph(4), spec, 2, SPLIT).count == 6

    def test_out_of_range(self, k3):
        with pytest.raises(ValueError):
            solve_with_size(k3, ProblemSpec(DCut(1)), 3, SPLIT)
        with pytest.raises(ValueError):
            solve_with_size(k3, ProblemSpec(DCut(1)), 0, SPLIT)

    def test_stratification(self, rng):
        for _ in range(12):
            n = rng.randint(2, 11)
            g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
            problem = random_problem(rng, n)
            spec = ProblemSpec(problem, mode="count")
            total = solve(g, spec, SPLIT).count
            by_size = sum(
                solve_with_size(g, spec, t, SPLIT).count for t in range(1, n)
            )
            assert by_size == total

    def test_size_witness(self, rng):
        g = random_graph(9, 0.3, rng)
        spec = ProblemSpec(InternalPartition(), mode="witness")
        for t in range(1, 9):
            result = solve(g, replace(spec, size_target=t), SPLIT)
            if result.witness is not None:
                assert len(result.witness.left) == t


class TestOptimize:
    def test_k3_abdom_maximize(self, k3):
        spec = ProblemSpec(AlphaBetaDomination(Interval(0, 0), Interval(0, 3)))
        assert optimize_size(k3, spec, "maximize", SPLIT) == 1

    def test_k4_infeasible(self, k4):
        assert optimize_size(k4, ProblemSpec(DCut(1)), "minimize", SPLIT) is None

    def test_edgeless_internal_maximize(self):
        g = edgeless_graph(4)
        assert optimize_size(g, ProblemSpec(InternalPartition()), "maximize", SPLIT) == 3
        assert optimize_size(g, ProblemSpec(InternalPartition()), "minimize", SPLIT) == 1

    def test_direction_validated(self, k3):
        with pytest.raises(ValueError):
            optimize_size(k3, ProblemSpec(DCut(1)), "sideways", SPLIT)

    def test_matches_brute_extremes(self, rng):
        for _ in range(12):
            n = rng.randint(2, 10)
            g = random_graph(n, 0.5, rng)
            problem = random_problem(rng, n)
            res = brute_force_count(g, problem)
            spec = ProblemSpec(problem)
            assert optimize_size(g, spec, "minimize", SPLIT) == res.min_left
            assert optimize_size(g, spec, "maximize", SPLIT) == res.max_left

    def test_mode_via_solve(self, k3):
        spec = ProblemSpec(
            AlphaBetaDomination(Interval(0, 0), Interval(0, 3)),
            mode="maximize_left",
        )
        result = solve(k3, spec, SPLIT)
        assert result.feasible and result.optimal_size == 1


class TestHeavyPruning:
    def test_tight_caps_stay_exact(self, rng):
        # all-upper-bounded constraints make the prune drop most rows; the
        # count must not move
        from splitcut import Interval, IntervalConstrainedCut, VertexConstraints

        for _ in range(10):
            n = rng.randint(6, 12)
            g = random_graph(n, 0.6, rng)
            cons = tuple(
                VertexConstraints(
                    *(Interval(0, rng.randint(0, 2)) for _ in range(4))
                )
                for _ in range(n)
            )
            problem = IntervalConstrainedCut(cons)
            spec = ProblemSpec(problem, mode="count")
            pruned = solve(g, spec, SPLIT)
            unpruned = solve(g, spec, SolverOptions(engine="splitlist", prune=False))
            assert pruned.count == unpruned.count == brute_force_count(g, problem).count
            assert pruned.stats.stored <= unpruned.stats.stored


class TestResultInvariants:
    def test_feasible_count_witness_agree(self, rng):
        for _ in range(20):
            n = rng.randint(1, 11)
            g = random_graph(n, 0.5, rng)
            problem = random_problem(rng, n)
            counted = solve(g, ProblemSpec(problem, mode="count"), SPLIT)
            witnessed = solve(g, ProblemSpec(problem, mode="witness"), SPLIT)
            assert counted.feasible == (counted.count > 0)
            assert witnessed.feasible == counted.feasible
            assert (witnessed.witness is not None) == witnessed.feasible

    def test_stats_populated(self, rng):
        g = random_graph(11, 0.5, rng)
        result = solve(g, ProblemSpec(DCut(2), mode="count"), SPLIT)
        assert result.stats.queries > 0 or result.stats.stored >= 0
        assert result.stats.time_ms > 0

    def test_tiny_graphs(self):
        # n in {1, 2, 3}: the main join is empty and the sweep is exhaustive
        for n in (1, 2, 3):
            g = edgeless_graph(n)
            expected = (1 << n) - 2
            for opts in (SPLIT, SolverOptions(engine="brute"), SolverOptions(engine="pairjoin")):
                assert solve(g, ProblemSpec(InternalPartition(), mode="count"), opts).count == expected


class TestCaps:
    def test_solver_cap(self, rng):
        g = random_graph(12, 0.5, rng)
        with pytest.raises(ResourceLimitError):
            solve(g, ProblemSpec(DCut(1)), SolverOptions(engine="splitlist", max_n=11))

    def test_memory_budget(self, rng):
        g = random_graph(14, 0.5, rng)
        with pytest.raises(ResourceLimitError):
            solve(
                g,
                ProblemSpec(DCut(1)),
                SolverOptions(engine="splitlist", memory_budget_mb=0),
            )

    def test_pairjoin_guard(self, rng):
        g = random_graph(12, 0.5, rng)
        with pytest.raises(ResourceLimitError):
            solve(
                g,
                ProblemSpec(DCut(1)),
                SolverOptions(engine="pairjoin", pairjoin_max_n=11),
            )

    def test_brute_guard(self, rng):
        g = random_graph(12, 0.5, rng)
        with pytest.raises(ResourceLimitError):
            solve(
                g,
                ProblemSpec(DCut(1)),
                SolverOptions(engine="brute", brute_max_n=11),
            )


class TestPhasePartition:
    def test_disjoint_cover(self):
        for n in range(1, 11):
            g = edgeless_graph(n)
            phase_a, phase_b = phase_candidate_masks(g)
            combined = np.concatenate([phase_a, phase_b])
            assert len(combined) == 1 << n
            assert len(np.unique(combined)) == 1 << n


class TestBoxSum:
    def test_forced_pair(self):
        assert solve_vector_box_sum([[1, 0], [0, 1]], [1, 1], [1, 1]) == [0, 1]

    def test_no_subset(self):
        assert solve_vector_box_sum([[2]], [1], [1]) is None

    def test_empty_subset_admissible(self):
        assert solve_vector_box_sum([[5]], [0, ], [0]) == []

    def test_disallow_empty(self):
        assert solve_vector_box_sum([[5]], [0], [0], allow_empty=False) is None
        # a nonempty zero-sum subset is still found
        found = solve_vector_box_sum([[5], [-5]], [0], [0], allow_empty=False)
        assert found == [0, 1]

    def test_validates_box(self):
        with pytest.raises(ValueError):
            solve_vector_box_sum([[1, 2]], [1, 1], [0, 0])
        with pytest.raises(ValueError):
            solve_vector_box_sum([[1, 2]], [0], [0, 0])

    def test_against_brute_force(self):
        rng = random.Random(31)
        for trial in range(60):
            k = rng.randint(0, 12)
            dim = rng.randint(1, 6)
            vectors = [
                [rng.randint(-6, 6) for _ in range(dim)] for _ in range(k)
            ]
            centre = [rng.randint(-8, 8) for _ in range(dim)]
            width = rng.randint(0, 4)
            lo = [c - width for c in centre]
            hi = [c + width for c in centre]
            witness = solve_vector_box_sum(vectors, lo, hi)
            feasible = False
            for size in range(k + 1):
                for subset in itertools.combinations(range(k), size):
                    sums = [
                        sum(vectors[i][j] for i in subset) for j in range(dim)
                    ]
                    if all(lo[j] <= sums[j] <= hi[j] for j in range(dim)):
                        feasible = True
                        break
                if feasible:
                    break
            assert (witness is not None) == feasible
            if witness is not None:
                sums = [sum(vectors[i][j] for i in witness) for j in range(dim)]
                assert all(lo[j] <= sums[j] <= hi[j] for j in range(dim))
                assert witness == sorted(set(witness))
