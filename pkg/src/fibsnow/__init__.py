"""Fibonacci-snowflake lattice polygons and their complexity measures.

Turn-word generation, lattice tracing with exact closure and simplicity
checks, integer convex hulls, random-line crossing statistics with their
analytic means, crossing-count entropy with its upper bound, and
box-counting dimension against the closed-form value.
"""

from fibsnow.crofton import (
    BLOCK_SIZE,
    DEGENERATE,
    GROWTH_RATE,
    CroftonEstimate,
    CrossingHistogram,
    LineParam,
    analytic_mean,
    asymptotic_model,
    bootstrap_entropy_sigma,
    crossing_count,
    crossing_entropy,
    entropy_bound,
    estimate_crossings,
    proposal_disk,
    sample_line,
)
from fibsnow.fractal import (
    BoxCountEntry,
    BoxCountSeries,
    DimensionFit,
    RealPath,
    box_count_series,
    estimate_dimension,
    max_admissible_k,
    normalize_snowflake,
    theoretical_dimension,
)
from fibsnow.hull import ConvexHull, convex_hull
from fibsnow.kernels import BACKEND
from fibsnow.turtle import (
    LatticePath,
    PathClass,
    bounding_box,
    classify,
    snowflake_path,
    trace,
)
from fibsnow.words import (
    SNOWFLAKE_CAP,
    WORD_CAP,
    closed_forms,
    complement,
    fib_length,
    fibonacci_word,
    pell,
    snowflake_word,
)

__version__ = "0.1.0"
