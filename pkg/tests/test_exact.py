import numpy as np
import pytest
from hypothesis import given, settings

from diskcover import (
    BudgetExceededError,
    Instance,
    generate_candidates,
    min_cover,
    solution_violations,
    solve_kmeans,
    solve_random,
    solve_spiral,
    solve_strip,
    TrialConfig,
)
from diskcover.geometry import Disk, covers
from diskcover.bench import generate_topology

from conftest import instances
from oracles import (
    grid_cover_masks,
    min_cover_size_by_combinations,
    min_cover_size_by_enumeration,
)


class TestGenerateCandidates:
    def test_single_point(self):
        inst = Instance(points=[(2.0, 3.0)], radius=1.0)
        cands = generate_candidates(inst)
        assert len(cands) == 1
        assert cands[0].center == (2.0, 3.0)
        assert cands[0].coverage == 0b1

    def test_tangent_pair_collapses_to_midpoint(self):
        inst = Instance(points=[(0.0, 0.0), (2.0, 0.0)], radius=1.0)
        unpruned = generate_candidates(inst, prune=False)
        assert len(unpruned) == 3  # two singletons plus the midpoint
        pruned = generate_candidates(inst)
        assert len(pruned) == 1
        assert pruned[0].center == (1.0, 0.0)
        assert pruned[0].coverage == 0b11

    def test_candidate_count_bound_and_coverage_validity(self):
        inst = generate_topology(12, 4.0, seed=9, radius=1.0)
        cands = generate_candidates(inst, prune=False)
        k = inst.k
        assert len(cands) <= k + k * (k - 1)
        for c in cands:
            assert c.coverage != 0
            disk = Disk(c.center, inst.radius)
            for i in range(k):
                if c.coverage >> i & 1:
                    assert covers(disk, inst.points[i])

    def test_pruning_never_changes_optimum(self):
        for seed in range(8):
            inst = generate_topology(8, 3.0, seed=seed, radius=1.0)
            assert min_cover(inst, prune=True).m == min_cover(inst, prune=False).m


class TestMinCover:
    def test_three_collinear(self):
        inst = Instance(points=[(0.0, 0.0), (2.0, 0.0), (4.0, 0.0)], radius=1.0)
        sol = min_cover(inst)
        assert sol.m == 2
        assert not solution_violations(inst, sol)

    def test_two_far_points(self):
        inst = Instance(points=[(0.0, 0.0), (5.0, 0.0)], radius=1.0)
        assert min_cover(inst).m == 2

    def test_matches_exhaustive_enumeration_reference_instance(self):
        inst = generate_topology(20, 4.0, seed=11, radius=1.0)
        sol = min_cover(inst)
        masks = [c.coverage for c in generate_candidates(inst)]
        assert sol.m == min_cover_size_by_enumeration(masks, inst.k)
        assert not solution_violations(inst, sol)

    def test_budget_exhaustion_raises(self):
        inst = generate_topology(25, 4.0, seed=3, radius=0.8)
        with pytest.raises(BudgetExceededError):
            min_cover(inst, node_limit=1)

    def test_enumeration_oracles_agree_on_tiny_instances(self):
        for seed in range(6):
            inst = generate_topology(7, 3.0, seed=40 + seed, radius=1.0)
            masks = [c.coverage for c in generate_candidates(inst)]
            assert min_cover_size_by_enumeration(
                masks, inst.k
            ) == min_cover_size_by_combinations(masks, inst.k)

    def test_candidates_reach_grid_optimum(self):
        for seed in (5, 6, 7):
            inst = generate_topology(10, 3.0, seed=seed, radius=1.0)
            cand_masks = [c.coverage for c in generate_candidates(inst)]
            grid_masks = grid_cover_masks(inst.points, inst.radius)
            m_cand = min_cover_size_by_enumeration(cand_masks, inst.k)
            m_grid = min_cover_size_by_enumeration(grid_masks, inst.k)
            assert m_cand == m_grid == min_cover(inst).m

    @given(instances(max_size=12))
    @settings(max_examples=30)
    def test_oracle_never_beaten_by_heuristics(self, inst):
        opt = min_cover(inst).m
        cfg = TrialConfig(trials=5, seed=1)
        assert solve_spiral(inst).m >= opt
        assert solve_strip(inst, cfg).m >= opt
        assert solve_kmeans(inst, cfg).m >= opt
        assert solve_random(inst, cfg).m >= opt

    @given(instances(max_size=12))
    @settings(max_examples=30)
    def test_solution_contract(self, inst):
        sol = min_cover(inst)
        assert not solution_violations(inst, sol)
        assert sol.m <= inst.k
