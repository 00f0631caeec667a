"""Normalized snowflake curves and box-counting dimension estimation.

The order-n polygon is translated to the origin and scaled by its Pell
bounding side so it sits in the unit square; touched-cell counts over
dyadic grids then give a log-log slope to compare with the closed-form
dimension of the limit curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from fibsnow.turtle import LatticePath, bounding_box
from fibsnow.words import pell


@dataclass(frozen=True, eq=False)
class RealPath:
    """Vertex sequence in normalized units; axis-aligned segments."""

    vertices: np.ndarray  # (n, 2) float64


@dataclass(frozen=True)
class BoxCountEntry:
    k: int
    epsilon: float  # cell side, 2**-k
    count: int  # touched cells of the 2**k x 2**k grid


@dataclass(frozen=True)
class BoxCountSeries:
    entries: tuple[BoxCountEntry, ...]


@dataclass(frozen=True)
class DimensionFit:
    slope: float
    intercept: float
    r_squared: float
    k_range: tuple[int, int]


def theoretical_dimension() -> float:
    """Dimension of the limit curve, log(2 + sqrt 5) / log(1 + sqrt 2)."""
    return math.log(2.0 + math.sqrt(5.0)) / math.log(1.0 + math.sqrt(2.0))


def normalize_snowflake(path: LatticePath, n: int) -> RealPath:
    """Translate the bounding-box corner to the origin and scale by the
    order-n Pell box side, so every vertex lands in the unit square."""
    (x0, y0), (x1, y1) = bounding_box(path)
    side = 2 * pell(n + 1) - 1
    if x1 - x0 != side or y1 - y0 != side:
        raise ValueError(
            f"bounding box {x1 - x0}x{y1 - y0} does not match the "
            f"order-{n} Pell side {side}"
        )
    shifted = path.vertices - np.array([x0, y0], dtype=np.int64)
    return RealPath(shifted.astype(np.float64) / side)


def segment_scale(path: RealPath) -> float:
    """Longest segment length, the resolution floor of the curve."""
    return float(np.abs(np.diff(path.vertices, axis=0)).sum(axis=1).max())


def max_admissible_k(path: RealPath) -> int:
    """Finest dyadic scale index k with 2**-k >= 4 * segment length."""
    return int(math.floor(math.log2(1.0 / (4.0 * segment_scale(path)))))


def box_count_series(
    path: RealPath,
    k_min: int,
    k_max: int,
    *,
    enforce_scale_floor: bool = True,
) -> BoxCountSeries:
    """Touched-cell counts of the 2**k x 2**k half-open grid on [0, 1)^2
    for each k in [k_min, k_max]; the top/right boundary is clamped inward.

    The scale floor keeps the finest grid at least four times coarser than
    one segment: below segment scale any polygon reads as one-dimensional.
    Pass enforce_scale_floor=False to count below the floor anyway.
    """
    if not 1 <= k_min <= k_max:
        raise ValueError(f"need 1 <= k_min <= k_max, got [{k_min}, {k_max}]")
    v = path.vertices
    if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 2:
        raise ValueError("need an (n, 2) vertex array with n >= 2")
    if float(v.min()) < 0.0 or float(v.max()) > 1.0:
        raise ValueError("normalized vertices must lie in the unit square")
    a, b = v[:-1], v[1:]
    if not bool(((a[:, 0] == b[:, 0]) | (a[:, 1] == b[:, 1])).all()):
        raise ValueError("box counting requires axis-aligned segments")
    if enforce_scale_floor:
        cap = max_admissible_k(path)
        if k_max > cap:
            raise ValueError(
                f"k_max {k_max} is below the scale floor; "
                f"the maximum admissible k is {cap}"
            )
    entries = tuple(
        BoxCountEntry(k=k, epsilon=2.0**-k, count=_touched_cell_count(v, k))
        for k in range(k_min, k_max + 1)
    )
    return BoxCountSeries(entries)


def estimate_dimension(series: BoxCountSeries) -> DimensionFit:
    """Least-squares slope of log(count) against log(1/epsilon)."""
    e = series.entries
    if len(e) < 3:
        raise ValueError("need at least 3 scales to fit a dimension")
    x = np.array([entry.k for entry in e], dtype=np.float64) * math.log(2.0)
    y = np.log(np.array([entry.count for entry in e], dtype=np.float64))
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    ss_res = float((residuals**2).sum())
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return DimensionFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        k_range=(e[0].k, e[-1].k),
    )


def _touched_cell_count(v: np.ndarray, k: int) -> int:
    """Exact count of grid cells touched by the axis-aligned segments."""
    grid = 1 << k
    a, b = v[:-1], v[1:]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    ilo = np.clip(np.floor(lo * grid).astype(np.int64), 0, grid - 1)
    ihi = np.clip(np.floor(hi * grid).astype(np.int64), 0, grid - 1)
    spans = ihi - ilo  # one coordinate of each row is 0 (axis-aligned)
    n_cells = spans.sum(axis=1) + 1
    total = int(n_cells.sum())
    seg = np.repeat(np.arange(len(n_cells)), n_cells)
    within = np.arange(total) - np.repeat(np.cumsum(n_cells) - n_cells, n_cells)
    horizontal = spans[:, 0] > 0
    dx = np.where(horizontal[seg], within, 0)
    dy = np.where(horizontal[seg], 0, within)
    ids = (ilo[seg, 1] + dy) * grid + (ilo[seg, 0] + dx)
    return int(np.unique(ids).size)
