"""Unit-step turtle on the integer lattice.

A word over {L, R} steers a turtle that starts at the origin heading east
and draws one unit segment before reading each letter; L turns a quarter
turn counterclockwise, R clockwise, with the y axis pointing up.  The
convention is fixed once so traced coordinates are reproducible; all the
laws verified here are invariant under the symmetries of the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from fibsnow.words import SNOWFLAKE_CAP, snowflake_word

# headings indexed 0..3: east, north, west, south
_DX = np.array([1, 0, -1, 0], dtype=np.int64)
_DY = np.array([0, 1, 0, -1], dtype=np.int64)

_L_BYTE = ord("L")
_R_BYTE = ord("R")

_COORD_LIMIT = 1 << 30  # vertex packing in classify() needs |x|, |y| below this


@dataclass(frozen=True, eq=False)
class LatticePath:
    """Ordered lattice vertices joined by unit axis-aligned segments."""

    vertices: np.ndarray  # (n, 2) int64 with n >= 2; do not mutate

    def __post_init__(self):
        v = self.vertices
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 2:
            raise ValueError("a path needs an (n, 2) vertex array with n >= 2")
        steps = np.abs(np.diff(v, axis=0)).sum(axis=1)
        if not bool((steps == 1).all()):
            raise ValueError("consecutive vertices must differ by one unit step")

    @property
    def segment_count(self) -> int:
        return self.vertices.shape[0] - 1


@dataclass(frozen=True)
class PathClass:
    closed: bool
    non_intersecting: bool


def trace(word: str) -> LatticePath:
    """Trace a turn word into a lattice path of ``len(word) + 1`` segments."""
    if word:
        raw = np.frombuffer(word.encode("ascii"), dtype=np.uint8)
        if not bool(np.isin(raw, (_L_BYTE, _R_BYTE)).all()):
            raise ValueError("turn words may only contain the letters L and R")
        turns = np.where(raw == _L_BYTE, 1, -1).astype(np.int64)
        headings = np.empty(turns.size + 1, dtype=np.int64)
        headings[0] = 0
        np.cumsum(turns, out=headings[1:])
        headings %= 4
    else:
        headings = np.zeros(1, dtype=np.int64)
    vertices = np.zeros((headings.size + 1, 2), dtype=np.int64)
    np.cumsum(_DX[headings], out=vertices[1:, 0])
    np.cumsum(_DY[headings], out=vertices[1:, 1])
    return LatticePath(vertices)


def classify(path: LatticePath) -> PathClass:
    """Closed iff the endpoints coincide; non-intersecting iff no vertex
    repeats, the shared endpoints of a closed path excepted."""
    v = path.vertices
    closed = bool((v[0] == v[-1]).all())
    body = v[:-1] if closed else v
    keys = _pack(body)
    distinct = np.unique(keys).size == keys.size
    return PathClass(closed=closed, non_intersecting=bool(distinct))


def bounding_box(path: LatticePath) -> tuple[tuple[int, int], tuple[int, int]]:
    """Componentwise (min, max) corners over the path vertices."""
    v = path.vertices
    mn = v.min(axis=0)
    mx = v.max(axis=0)
    return (int(mn[0]), int(mn[1])), (int(mx[0]), int(mx[1]))


def snowflake_path(n: int, cap: int = SNOWFLAKE_CAP) -> LatticePath:
    """The order-n snowflake polygon, closed and non-intersecting."""
    return trace(snowflake_word(n, cap=cap))


def _pack(v: np.ndarray) -> np.ndarray:
    # injective (x, y) -> x * 2**31 + y for |x|, |y| < 2**30
    if v.size and int(np.abs(v).max()) >= _COORD_LIMIT:
        raise ValueError("coordinates too large to classify")
    return v[:, 0] * (2 * _COORD_LIMIT) + v[:, 1]
