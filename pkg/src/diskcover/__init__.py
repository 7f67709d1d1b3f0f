"""Minimum-cardinality disk cover: heuristics, exact oracle, and benchmarks."""

from .baselines import TrialConfig, solve_kmeans, solve_random, solve_strip
from .bench import (
    Campaign,
    LinkBudget,
    coverage_radius,
    generate_topology,
    run_campaign,
    solve_by_name,
)
from .exact import BudgetExceededError, CandidateDisk, generate_candidates, min_cover
from .geometry import Disk, Point, convex_hull, covers, dist, one_center
from .problem import Instance, Solution, is_feasible, solution_violations
from .spiral import ContractError, LocalCoverResult, local_cover, solve_spiral
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Campaign",
    "CandidateDisk",
    "ContractError",
    "Disk",
    "Instance",
    "LinkBudget",
    "LocalCoverResult",
    "Point",
    "Solution",
    "TrialConfig",
    "convex_hull",
    "coverage_radius",
    "covers",
    "dist",
    "generate_candidates",
    "generate_topology",
    "is_feasible",
    "local_cover",
    "min_cover",
    "one_center",
    "render_svg",
    "run_campaign",
    "solution_violations",
    "solve_by_name",
    "solve_kmeans",
    "solve_random",
    "solve_spiral",
    "solve_strip",
]
