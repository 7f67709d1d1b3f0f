"""2D primitives: distances, strict convex hulls, smallest enclosing disks."""

from __future__ import annotations

import math
import random
from typing import NamedTuple, Optional, Sequence

Point = tuple[float, float]

# Shared coverage slack: a point at distance d counts as inside a disk of
# radius rho when d <= rho * (1 + REL_TOL) + ABS_TOL.  Every radius-vs-r
# comparison in the package uses the same rule so that boundary contacts
# (points exactly at the coverage radius) survive floating point.
REL_TOL = 1e-9
ABS_TOL = 1e-12

# Internal slack for the enclosing-disk recursion only.
_MEC_EPS = 1.0 + 1e-14


class Disk(NamedTuple):
    center: Point
    radius: float


def dist(a: Point, b: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(a[0] - b[0], a[1] - b[1])


def within_radius(radius: float, d: float) -> bool:
    """Tolerant radius comparison: d <= radius up to the shared slack."""
    return d <= radius * (1.0 + REL_TOL) + ABS_TOL


def covers(d: Disk, p: Point) -> bool:
    """True when p lies in d, within the shared coverage slack."""
    return within_radius(d.radius, dist(d.center, p))


def _cross(o: Point, a: Point, b: Point) -> float:
    """Cross product of oa and ob; positive when o->a->b turns left."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of the strict convex hull in counterclockwise order.

    Only extreme points are listed: collinear boundary points are dropped.
    Duplicate coordinates collapse to the lowest index.  For three or more
    hull vertices the listing starts at the bottom-most (then left-most)
    vertex; a degenerate input (all points collinear) yields the two extreme
    indices, lower index first, and a single distinct point yields [index].
    """
    if not points:
        raise ValueError("convex_hull: empty point list")
    first_idx: dict[Point, int] = {}
    for i, p in enumerate(points):
        q = (p[0], p[1])
        if q not in first_idx:
            first_idx[q] = i
    uniq = sorted(first_idx)
    if len(uniq) == 1:
        return [first_idx[uniq[0]]]

    lower: list[Point] = []
    for p in uniq:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(uniq):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]

    if len(ring) == 2:
        i, j = first_idx[ring[0]], first_idx[ring[1]]
        return [min(i, j), max(i, j)]
    start = min(range(len(ring)), key=lambda i: (ring[i][1], ring[i][0]))
    ring = ring[start:] + ring[:start]
    return [first_idx[p] for p in ring]


def one_center(points: Sequence[Point]) -> Disk:
    """Smallest disk containing every input point.

    Incremental construction over a deterministically shuffled copy, so the
    result is bit-identical across runs for identical input.  The returned
    radius is the exact maximum center-to-point distance, hence
    ``dist(center, p) <= radius`` holds for every input point as computed by
    :func:`dist`.
    """
    if not points:
        raise ValueError("one_center: empty point list")
    pts = [(float(p[0]), float(p[1])) for p in points]
    random.Random(0x5EED5).shuffle(pts)

    c: Optional[Disk] = None
    for i, p in enumerate(pts):
        if c is None or not _inside(c, p):
            c = _mec_one_known(pts[: i + 1], p)
    assert c is not None
    radius = max(dist(c.center, q) for q in pts)
    return Disk(c.center, radius)


def _inside(c: Disk, p: Point) -> bool:
    return dist(c.center, p) <= c.radius * _MEC_EPS


def _mec_one_known(points: Sequence[Point], p: Point) -> Disk:
    # Smallest disk over `points` with p known to be on the boundary.
    c = Disk(p, 0.0)
    for i, q in enumerate(points):
        if not _inside(c, q):
            if c.radius == 0.0:
                c = _diameter_disk(p, q)
            else:
                c = _mec_two_known(points[: i + 1], p, q)
    return c


def _mec_two_known(points: Sequence[Point], p: Point, q: Point) -> Disk:
    # Smallest disk over `points` with p and q known to be on the boundary.
    circ = _diameter_disk(p, q)
    left: Optional[Disk] = None
    right: Optional[Disk] = None
    px, py = p
    qx, qy = q
    for s in points:
        if _inside(circ, s):
            continue
        cross = _cross(p, q, s)
        c = _circumdisk(p, q, s)
        if c is None:
            continue
        ccx, ccy = c.center
        if cross > 0.0 and (
            left is None
            or _cross(p, q, (ccx, ccy)) > _cross(p, q, left.center)
        ):
            left = c
        elif cross < 0.0 and (
            right is None
            or _cross(p, q, (ccx, ccy)) < _cross(p, q, right.center)
        ):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        assert right is not None
        return right
    if right is None:
        return left
    return left if left.radius <= right.radius else right


def _diameter_disk(a: Point, b: Point) -> Disk:
    cx = (a[0] + b[0]) / 2.0
    cy = (a[1] + b[1]) / 2.0
    r = max(dist((cx, cy), a), dist((cx, cy), b))
    return Disk((cx, cy), r)


def _circumdisk(a: Point, b: Point, c: Point) -> Optional[Disk]:
    # Translate by a for conditioning; None for a degenerate (collinear) triple.
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0:
        return None
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = (a[0] + ux, a[1] + uy)
    radius = max(dist(center, a), dist(center, b), dist(center, c))
    return Disk(center, radius)
