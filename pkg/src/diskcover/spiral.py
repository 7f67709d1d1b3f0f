"""Sequential perimeter-first placement with greedy local disk refinement.

Each disk is anchored at a point on the convex hull of the still-uncovered
set, grown over nearby hull points first and interior points second, and the
process walks the shrinking perimeter counterclockwise until nothing is left.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .geometry import Disk, Point, convex_hull, covers, dist, one_center, within_radius
from .problem import Instance, Solution


class ContractError(ValueError):
    """A local_cover precondition was violated by the caller."""


@dataclass
class LocalCoverResult:
    center: Point
    covered: list[int]


@dataclass
class SpiralStep:
    """Per-iteration trace record for invariant checks and debugging."""

    k0: int
    boundary: list[int]
    newly_boundary: list[int]
    newly: list[int]
    center: Point


def local_cover(
    u: Point,
    prio: Sequence[int],
    sec: Sequence[int],
    inst: Instance,
) -> LocalCoverResult:
    """Grow a one-disk cover around `prio` with as many `sec` points as greedily fit.

    Starting from a location `u` that already covers every prioritized point,
    repeatedly: drop secondary candidates that sit farther than 2r from some
    committed point (they can never share its disk), absorb candidates already
    within r of the current location, then try the nearest remaining candidate
    by re-solving the enclosing-disk problem; stop at the first candidate that
    would push the disk radius past r.

    Returns the final location and the committed indices (in admission
    order).  Raises :class:`ContractError` when the preconditions fail: prio
    empty, prio/sec overlapping, prio not coverable by one radius-r disk, or
    `u` not covering all of prio.
    """
    r = inst.require_radius()
    pts = inst.points
    if not prio:
        raise ContractError("prio set must be non-empty")
    covered = list(dict.fromkeys(prio))
    if len(covered) != len(prio):
        raise ContractError("prio set contains repeated indices")
    pending = list(dict.fromkeys(sec))
    if len(pending) != len(sec):
        raise ContractError("sec set contains repeated indices")
    if set(covered) & set(pending):
        raise ContractError("prio and sec sets overlap")
    # Contract checks run at twice the coverage slack: a committed set built
    # from tolerant coverage tests can sit one rounding step past a single
    # slack, and that must not read as a caller error.
    loose = 2.0 * (r * 1e-9 + 1e-12)
    if one_center([pts[k] for k in covered]).radius > r + loose:
        raise ContractError("prio set is not coverable by a single radius-r disk")
    loc = (float(u[0]), float(u[1]))
    if any(dist(loc, pts[k]) > r + loose for k in covered):
        raise ContractError("starting location does not cover the prio set")

    two_r = 2.0 * r

    def keep_near(candidates: list[int], anchors: Sequence[int]) -> list[int]:
        # A candidate beyond 2r of any committed point can never share its disk.
        kept = []
        for k in candidates:
            pk = pts[k]
            if all(within_radius(two_r, dist(pk, pts[a])) for a in anchors):
                kept.append(k)
        return kept

    pending = keep_near(pending, covered)
    while pending:
        here = Disk(loc, r)
        near = [k for k in pending if covers(here, pts[k])]
        if near:
            covered.extend(near)
            near_set = set(near)
            pending = [k for k in pending if k not in near_set]
            pending = keep_near(pending, near)
            if not pending:
                break
        k1 = min(pending, key=lambda k: (dist(loc, pts[k]), k))
        trial = one_center([pts[k] for k in covered] + [pts[k1]])
        if not within_radius(r, trial.radius):
            break
        loc = trial.center
        covered.append(k1)
        pending.remove(k1)
        pending = keep_near(pending, [k1])
    return LocalCoverResult(center=loc, covered=covered)


def solve_spiral(
    inst: Instance,
    seed: int = 0,
    deterministic_start: bool = True,
    keep_trace: bool = False,
) -> Solution:
    """Cover every point with radius-r disks placed along the shrinking perimeter.

    With ``deterministic_start`` the first anchor of each sweep is the
    bottom-most (then left-most) hull point, making the output bit-identical
    across runs; otherwise the anchor is drawn uniformly from the hull points
    using ``seed``.  Subsequent anchors follow the counterclockwise walk from
    the previous anchor over the hull points that remain uncovered.
    """
    r = inst.require_radius()
    pts = inst.points
    t0 = time.perf_counter()
    rng = np.random.Generator(np.random.PCG64(seed))

    uncovered = list(range(inst.k))
    carried: Optional[int] = None
    centers: list[Point] = []
    newly_all: list[list[int]] = []
    steps: list[SpiralStep] = []

    while uncovered:
        hull_local = convex_hull([pts[k] for k in uncovered])
        boundary = [uncovered[i] for i in hull_local]
        bset = set(boundary)
        inner = [k for k in uncovered if k not in bset]

        if carried is not None and carried in bset:
            k0 = carried
        elif deterministic_start:
            k0 = boundary[0]
        else:
            k0 = boundary[int(rng.integers(len(boundary)))]

        first = local_cover(pts[k0], [k0], [k for k in boundary if k != k0], inst)
        second = local_cover(first.center, first.covered, inner, inst)
        center = second.center

        disk = Disk(center, r)
        newly = [k for k in uncovered if covers(disk, pts[k])]
        newly_set = set(newly)
        centers.append(center)
        newly_all.append(newly)
        uncovered = [k for k in uncovered if k not in newly_set]

        carried = None
        pos = boundary.index(k0)
        for off in range(1, len(boundary)):
            cand = boundary[(pos + off) % len(boundary)]
            if cand not in newly_set:
                carried = cand
                break
        if keep_trace:
            steps.append(
                SpiralStep(
                    k0=k0,
                    boundary=boundary,
                    newly_boundary=list(first.covered),
                    newly=newly,
                    center=center,
                )
            )

    return Solution(
        algorithm="spiral",
        seed=seed,
        centers=centers,
        newly_covered=newly_all,
        runtime=time.perf_counter() - t0,
        trace=steps if keep_trace else None,
    )
