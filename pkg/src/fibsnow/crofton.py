"""Random-line crossing statistics for lattice paths.

A line is the zero set of x*cos(theta) + y*sin(theta) - rho, and (rho,
theta) carries the uniform kinematic measure.  Proposals are drawn over a
disk covering the path; lines that miss the path are rejected, which
realizes the conditional law given at least one crossing.  Under that law
the mean crossing count of a curve of length LEN whose convex hull has
boundary length PERIM is 2*LEN/PERIM, so the Monte Carlo mean has an
exact analytic counterpart to compare against.

Estimates are deterministic functions of (path, samples, seed): the
accepted samples are split into fixed-size blocks, each block draws from
a generator derived from (seed, block index), and block tallies are
merged by integer-exact commutative sums, so neither the worker count
nor the merge order can change the output.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from fibsnow import kernels
from fibsnow.hull import convex_hull
from fibsnow.turtle import LatticePath, bounding_box

#: Mean crossing counts grow like a * GROWTH_RATE**n along the snowflake family.
GROWTH_RATE = (2.0 + math.sqrt(5.0)) / (1.0 + math.sqrt(2.0))

#: Accepted samples per block; block tallies merge commutatively.
BLOCK_SIZE = 4096

_MAX_CONSECUTIVE_REJECTIONS = 1_000_000
_TOL_SCALE = 1e-9  # default vertex tolerance, relative to the proposal radius


class _Degenerate:
    """Sentinel: the line passes within tolerance of a path vertex."""

    def __repr__(self):
        return "DEGENERATE"


DEGENERATE = _Degenerate()


@dataclass(frozen=True)
class LineParam:
    theta: float  # radians in [0, pi)
    rho: float  # lattice units


@dataclass(frozen=True)
class CroftonEstimate:
    mean: float
    stderr: float  # sample standard deviation / sqrt(samples)
    samples: int
    analytic_mean: float


@dataclass(frozen=True)
class CrossingHistogram:
    counts: dict[int, int]  # crossing count j -> number of accepted lines
    total_samples: int
    degenerate_resamples: int
    zero_rejections: int


def sample_line(
    rng: np.random.Generator, center: tuple[float, float], radius: float
) -> LineParam:
    """Draw one line, uniform in (rho, theta) among lines meeting the disk."""
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    theta = rng.uniform(0.0, math.pi)
    offset = rng.uniform(-radius, radius)
    rho = center[0] * math.cos(theta) + center[1] * math.sin(theta) + offset
    return LineParam(theta=theta, rho=rho)


def crossing_count(line: LineParam, path: LatticePath, tol: float):
    """Segments whose endpoints fall strictly on opposite sides of the line.

    Returns DEGENERATE when any path vertex lies within tol of the line,
    signalling the caller to resample.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    xs = np.ascontiguousarray(path.vertices[:, 0], dtype=np.float64)
    ys = np.ascontiguousarray(path.vertices[:, 1], dtype=np.float64)
    ct = np.array([math.cos(line.theta)])
    st = np.array([math.sin(line.theta)])
    rho = np.array([line.rho])
    c = int(kernels.crossing_counts(xs, ys, ct, st, rho, tol)[0])
    return DEGENERATE if c < 0 else c


def analytic_mean(path: LatticePath) -> float:
    """Exact conditional mean crossing count, 2 * length / hull perimeter.

    Unit segments make the Euclidean length equal the segment count.
    """
    perim = convex_hull(path.vertices).perimeter()
    if perim == 0.0:
        raise ValueError("degenerate hull with zero boundary length")
    return 2.0 * path.segment_count / perim


def proposal_disk(path: LatticePath) -> tuple[tuple[float, float], float]:
    """Sampling disk: the bounding-box circumdisk padded by 0.1%."""
    (x0, y0), (x1, y1) = bounding_box(path)
    center = ((x0 + x1) / 2.0, (y0 + y1) / 2.0)
    radius = math.hypot(x1 - x0, y1 - y0) / 2.0 * 1.001
    return center, radius


def estimate_crossings(
    path: LatticePath,
    samples: int,
    seed: int,
    *,
    workers: int = 1,
    tol: float | None = None,
) -> tuple[CroftonEstimate, CrossingHistogram]:
    """Monte Carlo crossing statistics over `samples` accepted lines.

    Zero-crossing and degenerate proposals are rejected and resampled.
    Output depends only on (path, samples, seed); `workers` controls thread
    parallelism over blocks without affecting any result bit.
    """
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    center, radius = proposal_disk(path)
    if tol is None:
        tol = _TOL_SCALE * radius
    closed = bool((path.vertices[0] == path.vertices[-1]).all())
    xs = np.ascontiguousarray(path.vertices[:, 0], dtype=np.float64)
    ys = np.ascontiguousarray(path.vertices[:, 1], dtype=np.float64)

    n_blocks = (samples + BLOCK_SIZE - 1) // BLOCK_SIZE
    quotas = [
        (i, min(BLOCK_SIZE, samples - i * BLOCK_SIZE)) for i in range(n_blocks)
    ]

    def run(block):
        index, quota = block
        return _block_tally(
            xs, ys, quota, seed, index, center, radius, tol, closed
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(run, quotas))
    else:
        tallies = [run(q) for q in quotas]

    counts: Counter[int] = Counter()
    s1 = s2 = degenerate = zero = 0
    for tally in tallies:
        counts.update(tally[0])
        s1 += tally[1]
        s2 += tally[2]
        degenerate += tally[3]
        zero += tally[4]

    mean = s1 / samples
    # integer-exact variance numerator keeps the result order-independent
    var = (samples * s2 - s1 * s1) / (samples * (samples - 1)) if samples > 1 else 0.0
    stderr = math.sqrt(max(var, 0.0) / samples)
    estimate = CroftonEstimate(
        mean=mean,
        stderr=stderr,
        samples=samples,
        analytic_mean=analytic_mean(path),
    )
    histogram = CrossingHistogram(
        counts=dict(sorted(counts.items())),
        total_samples=samples,
        degenerate_resamples=degenerate,
        zero_rejections=zero,
    )
    return estimate, histogram


def crossing_entropy(hist: CrossingHistogram) -> float:
    """Plug-in entropy (nats) of the empirical crossing-count distribution."""
    total = hist.total_samples
    if total <= 0:
        raise ValueError("histogram has no samples")
    h = 0.0
    for j in sorted(hist.counts):
        c = hist.counts[j]
        if c:
            p = c / total
            h -= p * math.log(p)
    return h


def bootstrap_entropy_sigma(
    hist: CrossingHistogram, resamples: int = 200, seed: int = 0
) -> float:
    """Bootstrap standard error of the plug-in entropy.

    Resamples the histogram multinomially and returns the sample standard
    deviation of the resampled entropies.
    """
    total = hist.total_samples
    if total <= 0:
        raise ValueError("histogram has no samples")
    keys = sorted(hist.counts)
    p = np.array([hist.counts[j] for j in keys], dtype=np.float64) / total
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(2,)))
    q = rng.multinomial(total, p, size=resamples) / total
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(q > 0.0, q * np.log(q), 0.0)
    return float((-terms.sum(axis=1)).std(ddof=1))


def entropy_bound(length: float, hull_perimeter: float) -> float:
    """Upper bound (nats) on the crossing entropy of a curve of the given
    length whose hull boundary has the given length.

    Zero at the convex limit hull_perimeter == 2 * length, where every line
    crossing the curve crosses it the same number of times.
    """
    two_l = 2.0 * length
    if hull_perimeter <= 0.0:
        raise ValueError("hull perimeter must be positive")
    if hull_perimeter > two_l:
        raise ValueError(
            "hull perimeter exceeds twice the curve length; "
            "no curve satisfies that"
        )
    if hull_perimeter == two_l:
        return 0.0
    mean = two_l / hull_perimeter
    return math.log(mean) + (1.0 - 1.0 / mean) * math.log(
        two_l / (two_l - hull_perimeter)
    )


def asymptotic_model(n: int, a: float) -> float:
    """Geometric growth model a * GROWTH_RATE**n for the mean crossing count."""
    return a * GROWTH_RATE**n


def _block_tally(xs, ys, quota, seed, block_index, center, radius, tol, closed):
    """Accept exactly `quota` lines; returns (counts, sum, sum_sq, degenerate,
    zero_rejections), all integer-exact."""
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(1, block_index)))
    cx, cy = center
    counts: Counter[int] = Counter()
    s1 = s2 = degenerate = zero = 0
    consecutive_rejects = 0
    need = quota
    while need > 0:
        m = (3 * need) // 2 + 64  # covers typical acceptance rates in one draw
        theta = rng.uniform(0.0, math.pi, size=m)
        offset = rng.uniform(-radius, radius, size=m)
        ct = np.cos(theta)
        st = np.sin(theta)
        rho = (cx * ct + cy * st) + offset
        c = kernels.crossing_counts(xs, ys, ct, st, rho, tol)
        accept = c > 0
        cum = np.cumsum(accept)
        used = m if cum[-1] < need else int(np.searchsorted(cum, need)) + 1
        c = c[:used]
        accept = accept[:used]
        acc = c[accept]
        degenerate += int((c == -1).sum())
        zero += int((c == 0).sum())
        if acc.size == 0:
            consecutive_rejects += used
        else:
            consecutive_rejects = used - 1 - int(np.flatnonzero(accept)[-1])
        if consecutive_rejects > _MAX_CONSECUTIVE_REJECTIONS:
            raise RuntimeError(
                f"{consecutive_rejects} consecutive proposals rejected; "
                "the path/tolerance combination looks pathological"
            )
        if closed and acc.size and bool((acc % 2).any()):
            raise RuntimeError(
                "odd crossing count against a closed path; tolerance too coarse"
            )
        values, reps = np.unique(acc, return_counts=True)
        for v, r in zip(values.tolist(), reps.tolist()):
            counts[int(v)] += int(r)
        s1 += int(acc.sum())
        s2 += int(np.square(acc).sum())
        need -= int(acc.size)
    return counts, s1, s2, degenerate, zero
