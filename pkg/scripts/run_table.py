#!/usr/bin/env python3
"""Run a solver comparison sweep and print the aggregate table.

Example (the experiment behind the acceptance numbers, ~2 min):

    python scripts/run_table.py --k 80 --ratios 2,4,6,8,10 --topologies 20 \
        --algos spiral,strip,kmeans,random --seed 10408 --out-dir results/
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from diskcover import Campaign, TrialConfig, run_campaign
from diskcover.bench import aggregate_csv, raw_csv, report_json


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=80)
    parser.add_argument("--side", type=float, default=1.0)
    parser.add_argument("--ratios", default="2,4,6,8,10")
    parser.add_argument("--topologies", type=int, default=5)
    parser.add_argument("--algos", default="spiral,strip,kmeans,random")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--out-dir", default=None, help="also write raw/aggregate CSV and JSON here")
    args = parser.parse_args()

    campaign = Campaign(
        k=args.k,
        side=args.side,
        ratios=[float(s) for s in args.ratios.split(",")],
        topologies=args.topologies,
        base_seed=args.seed,
        algorithms=[s.strip() for s in args.algos.split(",")],
        trials=TrialConfig(trials=args.trials),
    )
    report = run_campaign(campaign, progress=lambda msg: print(f"  {msg}", file=sys.stderr))

    ratios = report.ratios
    print(f"\nK={report.k}, topologies={args.topologies}, generator={report.generator}")
    header = ["algorithm", "metric"] + [f"D/r={x:g}" for x in ratios]
    widths = [max(10, len(h) + 2) for h in header]
    print("".join(h.ljust(w) for h, w in zip(header, widths)))
    for algo in report.algorithms:
        means = ["-" if report.mean_m(algo, x) is None else f"{report.mean_m(algo, x):.2f}" for x in ratios]
        times = [f"{report.mean_runtime_ms(algo, x):.0f}" for x in ratios]
        print("".join(c.ljust(w) for c, w in zip([algo, "mean M"] + means, widths)))
        print("".join(c.ljust(w) for c, w in zip(["", "t (ms)"] + times, widths)))

    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "raw.csv").write_text(raw_csv(report))
        (out / "aggregate.csv").write_text(aggregate_csv(report))
        (out / "report.json").write_text(report_json(report))
        print(f"\nwrote {out}/raw.csv, aggregate.csv, report.json")


if __name__ == "__main__":
    main()
