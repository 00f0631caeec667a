"""Convex hulls of lattice point sets with exact integer predicates.

All orientation tests are integer cross products on Python ints, so there
is no epsilon tuning anywhere; floats appear only in the final perimeter
and diameter values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

Point = tuple[int, int]


@dataclass(frozen=True)
class ConvexHull:
    """Strictly extreme points in counterclockwise order.

    Collinear boundary points are dropped.  Degenerate inputs collapse to
    two vertices (all collinear) or one (all coincident).
    """

    vertices: tuple[Point, ...]

    def perimeter(self) -> float:
        """Euclidean boundary length.

        A two-point hull counts its segment twice, matching the measure of
        lines meeting a segment; a single point has length 0.
        """
        pts = self.vertices
        if len(pts) == 1:
            return 0.0
        if len(pts) == 2:
            return 2.0 * math.dist(pts[0], pts[1])
        return sum(
            math.dist(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))
        )

    def diameter(self) -> float:
        """Largest pairwise vertex distance, by rotating calipers."""
        return math.sqrt(_diameter_sq(self.vertices))

    def contains(self, point) -> bool:
        """Exact inside-or-on-boundary test."""
        p = (int(point[0]), int(point[1]))
        pts = self.vertices
        if len(pts) == 1:
            return p == pts[0]
        if len(pts) == 2:
            return _on_segment(pts[0], pts[1], p)
        h = len(pts)
        return all(_cross(pts[i], pts[(i + 1) % h], p) >= 0 for i in range(h))


def convex_hull(points) -> ConvexHull:
    """Convex hull of a non-empty collection of lattice points."""
    pts = np.asarray(points, dtype=np.int64)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] == 0:
        raise ValueError("need a non-empty sequence of (x, y) lattice points")
    return ConvexHull(tuple(_monotone_chain(_extreme_candidates(pts))))


def _extreme_candidates(pts: np.ndarray) -> list[Point]:
    # only the lowest and highest point of each column can be extreme
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    s = pts[order]
    xs = s[:, 0]
    first = np.flatnonzero(np.r_[True, xs[1:] != xs[:-1]])
    last = np.r_[first[1:] - 1, xs.size - 1]
    cands = {tuple(p) for p in s[first].tolist()}
    cands.update(tuple(p) for p in s[last].tolist())
    return sorted(cands)


def _monotone_chain(pts: list[Point]) -> list[Point]:
    # pts sorted and deduplicated; strict turns only, so collinear points drop out
    if len(pts) == 1:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _dist_sq(a: Point, b: Point) -> int:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    if _cross(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _diameter_sq(pts: tuple[Point, ...]) -> int:
    h = len(pts)
    if h == 1:
        return 0
    if h == 2:
        return _dist_sq(pts[0], pts[1])
    best = 0
    k = 1
    for i in range(h):
        j = (i + 1) % h
        if k in (i, j):
            k = (j + 1) % h  # keep the caliper strictly ahead of the edge
        while True:
            k_next = (k + 1) % h
            if k_next == i:
                break
            if _cross(pts[i], pts[j], pts[k_next]) > _cross(pts[i], pts[j], pts[k]):
                k = k_next
            else:
                break
        best = max(best, _dist_sq(pts[i], pts[k]), _dist_sq(pts[j], pts[k]))
    return best
