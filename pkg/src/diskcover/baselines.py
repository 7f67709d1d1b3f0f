"""Comparison heuristics: strip cover, k-means with bisection, random placement."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import ABS_TOL, REL_TOL, Disk, Point, covers, one_center, within_radius
from .problem import Instance, Solution


@dataclass(frozen=True)
class TrialConfig:
    """Knobs for the stochastic baselines and the strip geometry.

    Strip height is ``strip_height_factor * r``; the default sqrt(3) keeps a
    midline-centered disk spanning the full strip while retaining horizontal
    reach at the strip edges.  Factors above 2 would leave strip corners out
    of reach, hence the bound.
    """

    trials: int = 100
    seed: int = 0
    max_kmeans_iters: int = 100
    strip_height_factor: float = math.sqrt(3.0)

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.max_kmeans_iters < 1:
            raise ValueError("max_kmeans_iters must be >= 1")
        if not 0.0 < self.strip_height_factor <= 2.0:
            raise ValueError("strip_height_factor must be in (0, 2]")


def solve_strip(inst: Instance, cfg: Optional[TrialConfig] = None) -> Solution:
    """Greedy left-to-right cover of horizontal strips, one strip at a time.

    Strip midlines sit at ``min_y + i*h`` (the bottom-most point lies on the
    first midline); each point belongs to its nearest midline.  Within a
    strip, points are swept by ascending x: starting from the leftmost
    uncovered point, the run of following points is absorbed while the group
    still fits in one radius-r disk, that group's smallest enclosing disk is
    placed, and every strip point it reaches is covered by it.  Points in
    other strips are never considered by a disk, which is the strip scheme's
    defining restriction.  Fully deterministic.
    """
    cfg = cfg or TrialConfig()
    r = inst.require_radius()
    pts = inst.points
    t0 = time.perf_counter()

    h = cfg.strip_height_factor * r
    min_y = min(p[1] for p in pts)
    strips: dict[int, list[int]] = {}
    for k, p in enumerate(pts):
        s = int(math.floor((p[1] - min_y) / h + 0.5))
        strips.setdefault(s, []).append(k)

    centers: list[Point] = []
    newly_all: list[list[int]] = []
    for s in sorted(strips):
        remaining = sorted(strips[s], key=lambda k: (pts[k][0], pts[k][1], k))
        while remaining:
            group = [remaining[0]]
            mec = one_center([pts[remaining[0]]])
            for k in remaining[1:]:
                trial = one_center([pts[g] for g in group] + [pts[k]])
                if not within_radius(r, trial.radius):
                    break
                group.append(k)
                mec = trial
            disk = Disk(mec.center, r)
            newly = [k for k in remaining if covers(disk, pts[k])]
            centers.append(mec.center)
            newly_all.append(newly)
            taken = set(newly)
            remaining = [k for k in remaining if k not in taken]

    return Solution(
        algorithm="strip",
        seed=cfg.seed,
        centers=centers,
        newly_covered=newly_all,
        runtime=time.perf_counter() - t0,
    )


def _kmeanspp_init(xy: np.ndarray, p: int, rng: np.random.Generator) -> np.ndarray:
    """Careful seeding: first center uniform, then squared-distance weighted."""
    n = len(xy)
    cents = np.empty((p, 2), dtype=float)
    cents[0] = xy[int(rng.integers(n))]
    d2 = ((xy - cents[0]) ** 2).sum(axis=1)
    for j in range(1, p):
        total = float(d2.sum())
        if total <= 0.0:
            cents[j:] = cents[0]
            break
        u = rng.random()
        idx = int(np.searchsorted(np.cumsum(d2 / total), u, side="right"))
        cents[j] = xy[min(idx, n - 1)]
        d2 = np.minimum(d2, ((xy - cents[j]) ** 2).sum(axis=1))
    return cents


def _lloyd_clusters(
    xy: np.ndarray,
    p: int,
    r: float,
    rng: np.random.Generator,
    max_iters: int,
) -> Optional[list[np.ndarray]]:
    """One k-means run (batch passes, then single-point refinement moves);
    returns the clusters when every one fits in a radius-r disk, else None.
    """
    n = len(xy)
    cents = _kmeanspp_init(xy, p, rng)
    labels = None
    for _ in range(max_iters):
        d2 = ((xy[:, None, :] - cents[None, :, :]) ** 2).sum(axis=2)
        new_labels = d2.argmin(axis=1)
        if labels is not None and np.array_equal(new_labels, labels):
            break
        labels = new_labels
        counts = np.bincount(labels, minlength=p)
        sx = np.bincount(labels, weights=xy[:, 0], minlength=p)
        sy = np.bincount(labels, weights=xy[:, 1], minlength=p)
        nonempty = counts > 0
        cents[nonempty, 0] = sx[nonempty] / counts[nonempty]
        cents[nonempty, 1] = sy[nonempty] / counts[nonempty]
        if not nonempty.all():
            # Re-seed each empty cluster on the point farthest from its
            # assigned center, then let the next pass reassign.
            own = ((xy - cents[labels]) ** 2).sum(axis=1)
            for j in np.flatnonzero(~nonempty):
                far = int(own.argmax())
                cents[j] = xy[far]
                own[far] = 0.0
    assert labels is not None

    # Refinement: apply the best single-point move while it lowers the total
    # within-cluster squared error (sizes reweight the change: a point joining
    # a cluster of n costs n/(n+1) of its squared distance, leaving refunds
    # n/(n-1)).  Escapes the plateaus batch passes converge to.
    labels = labels.copy()
    counts = np.bincount(labels, minlength=p).astype(float)
    d2 = ((xy[:, None, :] - cents[None, :, :]) ** 2).sum(axis=2)
    idx = np.arange(n)
    for _ in range(3 * n):
        src_sizes = counts[labels]
        with np.errstate(divide="ignore", invalid="ignore"):
            refund = np.where(src_sizes > 1.0, src_sizes / (src_sizes - 1.0), 0.0)
        gain = refund * d2[idx, labels]
        cost = (counts / (counts + 1.0))[None, :] * d2
        delta = cost - gain[:, None]
        delta[idx, labels] = np.inf
        delta[src_sizes <= 1.0, :] = np.inf  # never empty a cluster
        flat = int(np.argmin(delta))
        i, dst = flat // p, flat % p
        if delta[i, dst] >= -1e-12:
            break
        s = int(labels[i])
        cents[s] = (counts[s] * cents[s] - xy[i]) / (counts[s] - 1.0)
        cents[dst] = (counts[dst] * cents[dst] + xy[i]) / (counts[dst] + 1.0)
        counts[s] -= 1.0
        counts[dst] += 1.0
        labels[i] = dst
        d2[:, s] = ((xy - cents[s]) ** 2).sum(axis=1)
        d2[:, dst] = ((xy - cents[dst]) ** 2).sum(axis=1)

    bound = r * (1.0 + REL_TOL) + ABS_TOL
    clusters = []
    for j in range(p):
        members = np.flatnonzero(labels == j)
        if members.size == 0:
            continue
        sub = xy[members]
        # Half the bounding-box extent lower-bounds the enclosing radius.
        if max(sub.max(axis=0) - sub.min(axis=0)) / 2.0 > bound:
            return None
        mec = one_center([(q[0], q[1]) for q in sub])
        if not within_radius(r, mec.radius):
            return None
        clusters.append(members)
    return clusters


def _kmeans_trial(
    xy: np.ndarray,
    n_distinct: int,
    r: float,
    rng: np.random.Generator,
    max_iters: int,
) -> list[np.ndarray]:
    # Bisection over the cluster count, treating feasibility as monotone.
    # One cluster per distinct position is always feasible, hence the cap.
    lo, hi = 1, n_distinct
    best: Optional[tuple[int, list[np.ndarray]]] = None
    while lo < hi:
        mid = (lo + hi) // 2
        clusters = _lloyd_clusters(xy, mid, r, rng, max_iters)
        if clusters is not None:
            hi = mid
            best = (mid, clusters)
        else:
            lo = mid + 1
    if best is None or best[0] != lo:
        clusters = _lloyd_clusters(xy, lo, r, rng, max_iters)
        if clusters is not None:
            best = (lo, clusters)
    if best is None:
        # Unreachable in practice: one cluster per distinct position has radius 0.
        by_pos: dict[tuple[float, float], list[int]] = {}
        for k, q in enumerate(xy):
            by_pos.setdefault((q[0], q[1]), []).append(k)
        best = (len(by_pos), [np.array(v) for v in by_pos.values()])
    return best[1]


def solve_kmeans(inst: Instance, cfg: Optional[TrialConfig] = None) -> Solution:
    """Best of `trials` k-means partitions, bisecting the cluster count per trial.

    A trial runs seeded k-means (careful init, batch passes, single-point
    refinement) at each probed p and is feasible when every non-empty cluster
    fits in a radius-r disk; empty clusters are dropped, so a trial's disk
    count may come in under p.  Final centers are each cluster's
    smallest-enclosing-disk center.
    """
    cfg = cfg or TrialConfig()
    r = inst.require_radius()
    t0 = time.perf_counter()
    xy = np.asarray(inst.points, dtype=float)
    n_distinct = len(np.unique(xy, axis=0))

    best: Optional[list[np.ndarray]] = None
    for t in range(cfg.trials):
        rng = np.random.Generator(np.random.PCG64(cfg.seed + t))
        clusters = _kmeans_trial(xy, n_distinct, r, rng, cfg.max_kmeans_iters)
        if best is None or len(clusters) < len(best):
            best = clusters
    assert best is not None

    centers: list[Point] = []
    newly_all: list[list[int]] = []
    for members in best:
        mec = one_center([(q[0], q[1]) for q in xy[members]])
        centers.append(mec.center)
        newly_all.append([int(k) for k in members])

    return Solution(
        algorithm="kmeans",
        seed=cfg.seed,
        centers=centers,
        newly_covered=newly_all,
        runtime=time.perf_counter() - t0,
    )


def solve_random(inst: Instance, cfg: Optional[TrialConfig] = None) -> Solution:
    """Best of `trials` passes that stack disks on uniformly drawn uncovered points."""
    cfg = cfg or TrialConfig()
    r = inst.require_radius()
    t0 = time.perf_counter()
    xy = np.asarray(inst.points, dtype=float)
    k_total = len(xy)
    bound = r * (1.0 + REL_TOL) + ABS_TOL

    best_centers: Optional[list[Point]] = None
    best_newly: Optional[list[list[int]]] = None
    for t in range(cfg.trials):
        rng = np.random.Generator(np.random.PCG64(cfg.seed + t))
        alive = np.ones(k_total, dtype=bool)
        centers: list[Point] = []
        newly_all: list[list[int]] = []
        while alive.any():
            live = np.flatnonzero(alive)
            pick = int(live[int(rng.integers(live.size))])
            cx, cy = float(xy[pick, 0]), float(xy[pick, 1])
            d = np.hypot(xy[live, 0] - cx, xy[live, 1] - cy)
            taken = live[d <= bound]
            centers.append((cx, cy))
            newly_all.append([int(i) for i in taken])
            alive[taken] = False
        if best_centers is None or len(centers) < len(best_centers):
            best_centers = centers
            best_newly = newly_all
    assert best_centers is not None and best_newly is not None

    return Solution(
        algorithm="random",
        seed=cfg.seed,
        centers=best_centers,
        newly_covered=best_newly,
        runtime=time.perf_counter() - t0,
    )
