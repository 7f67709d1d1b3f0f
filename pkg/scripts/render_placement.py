#!/usr/bin/env python3
"""Generate a topology, solve it, and render the placement as an SVG.

The default settings reproduce the illustrative regime: 80 points in a
10 km^2 square covered by half-kilometre disks, solved by the spiral walk
(the dash-dotted arrow chain shows the placement order curling inward).

    python scripts/render_placement.py --out placement.svg
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from diskcover import TrialConfig, render_svg, solution_violations, solve_by_name
from diskcover.bench import generate_topology


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=80)
    parser.add_argument("--side", type=float, default=10.0 ** 0.5)
    parser.add_argument("--radius", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=21)
    parser.add_argument("--algo", default="spiral")
    parser.add_argument("--out", default="placement.svg")
    args = parser.parse_args()

    inst = generate_topology(args.k, args.side, args.seed, radius=args.radius)
    sol = solve_by_name(args.algo, inst, seed=args.seed, trials=TrialConfig(seed=args.seed))
    problems = solution_violations(inst, sol)
    if problems:
        raise SystemExit(f"infeasible solution: {problems}")
    Path(args.out).write_text(render_svg(inst, sol))
    print(f"{args.algo}: {sol.m} disks for {inst.k} points (r={args.radius:g}); wrote {args.out}")


if __name__ == "__main__":
    main()
