"""Command-line front end: generation, verification, rendering, reports.

All numeric output is JSON (or the CSV histogram) with stable field names;
reports embed their configuration and are byte-identical for a fixed
(order, samples, seed) regardless of worker count.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from fibsnow import crofton, fractal, hull, turtle, words

_UNITS = {
    "path.segments": "unit segments",
    "path.bounding_box": "lattice units",
    "hull.perimeter": "lattice units",
    "hull.diameter": "lattice units",
    "hull.perimeter_pell_ratio": "dimensionless",
    "crofton.analytic_mean": "crossings per accepted line",
    "crofton.mc_mean": "crossings per accepted line",
    "crofton.mc_stderr": "crossings per accepted line",
    "crofton.prefactor": "dimensionless",
    "entropy.value": "nats",
    "entropy.bootstrap_sigma": "nats",
    "entropy.bound": "nats",
    "entropy.value_per_order": "nats",
    "dimension.slope": "dimensionless",
    "dimension.theoretical": "dimensionless",
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibsnow",
        description="Fibonacci-snowflake lattice polygons and their complexity measures",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("gen", help="print a turn word and its length")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--word", choices=["qn", "snowflake"], default="snowflake")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("trace", help="trace a turn word; print vertices and classification as JSON")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--word")
    grp.add_argument("--stdin", action="store_true", help="read the word from the first stdin token")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("snowflake", help="print snowflake polygon vertices as JSON")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=_cmd_snowflake)

    p = sub.add_parser("verify", help="check the exact length, closure, and box laws")
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="render the snowflake polygon as an SVG polyline")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--stroke-width", type=float, default=1.0)
    p.add_argument("--size", type=int, default=1024, help="canvas side in pixels")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("crofton", help="random-line crossing statistics and entropy")
    _add_mc_flags(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_crofton)

    p = sub.add_parser("boxdim", help="box-count series and dimension fit")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--kmin", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_boxdim)

    p = sub.add_parser("report", help="full per-order report as JSON")
    _add_mc_flags(p)
    p.add_argument("--kmin", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_report)

    return parser


def _add_mc_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)


def _cmd_gen(args) -> int:
    if args.word == "qn":
        w = words.fibonacci_word(args.order)
    else:
        w = words.snowflake_word(args.order)
    print(w)
    print(f"length {len(w)}")
    return 0


def _cmd_trace(args) -> int:
    if args.stdin:
        tokens = sys.stdin.read().split()
        word = tokens[0] if tokens else ""
    else:
        word = args.word
    path = turtle.trace(word)
    cls = turtle.classify(path)
    print(
        _json_text(
            {
                "word": word,
                "segments": path.segment_count,
                "closed": cls.closed,
                "non_intersecting": cls.non_intersecting,
                "vertices": path.vertices.tolist(),
            }
        ),
        end="",
    )
    return 0


def _cmd_snowflake(args) -> int:
    path = turtle.snowflake_path(args.order)
    cls = turtle.classify(path)
    print(
        _json_text(
            {
                "order": args.order,
                "segments": path.segment_count,
                "closed": cls.closed,
                "non_intersecting": cls.non_intersecting,
                "vertices": path.vertices.tolist(),
            }
        ),
        end="",
    )
    return 0


def _cmd_verify(args) -> int:
    header = (
        f"{'order':>5} {'segments':>9} {'expected':>9} {'closed':>6} "
        f"{'simple':>6} {'side':>6} {'expected':>8} {'status':>6}"
    )
    print(header)
    all_ok = True
    for n in range(args.max_order + 1):
        w = words.snowflake_word(n)
        path = turtle.trace(w)
        cls = turtle.classify(path)
        (x0, y0), (x1, y1) = turtle.bounding_box(path)
        want_segments = 4 * words.fib_length(3 * n + 1)
        want_side = 2 * words.pell(n + 1) - 1
        ok = (
            path.segment_count == len(w) + 1 == want_segments
            and cls.closed
            and cls.non_intersecting
            and x1 - x0 == want_side
            and y1 - y0 == want_side
        )
        all_ok &= ok
        print(
            f"{n:>5} {path.segment_count:>9} {want_segments:>9} "
            f"{_yn(cls.closed):>6} {_yn(cls.non_intersecting):>6} "
            f"{x1 - x0:>6} {want_side:>8} {'ok' if ok else 'FAIL':>6}"
        )
    print(f"{'all checks passed' if all_ok else 'FAILURES detected'} (orders 0..{args.max_order})")
    return 0 if all_ok else 1


def _cmd_render(args) -> int:
    path = turtle.snowflake_path(args.order)
    svg = render_svg(path, size=args.size, stroke_width=args.stroke_width)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def render_svg(path: turtle.LatticePath, size: int = 1024, stroke_width: float = 1.0) -> str:
    """One-polyline SVG of the path, y axis flipped to screen convention,
    5% margin."""
    v = path.vertices
    (x0, y0), (x1, y1) = turtle.bounding_box(path)
    span = max(x1 - x0, y1 - y0, 1)
    margin = 0.05 * size
    scale = (size - 2.0 * margin) / span
    px = margin + (v[:, 0] - x0) * scale
    py = size - margin - (v[:, 1] - y0) * scale
    points = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(px.tolist(), py.tolist()))
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n'
        f'  <polyline fill="none" stroke="black" stroke-width="{stroke_width}" '
        f'points="{points}"/>\n'
        "</svg>\n"
    )


def _cmd_crofton(args) -> int:
    path = turtle.snowflake_path(args.order)
    est, hist = crofton.estimate_crossings(
        path, args.samples, args.seed, workers=args.workers
    )
    if args.format == "csv":
        text = _histogram_csv(hist)
    else:
        entropy = crofton.crossing_entropy(hist)
        sigma = crofton.bootstrap_entropy_sigma(hist, seed=args.seed)
        perim = hull.convex_hull(path.vertices).perimeter()
        text = _json_text(
            {
                "config": {"order": args.order, "samples": args.samples, "seed": args.seed},
                "analytic_mean": est.analytic_mean,
                "mc_mean": est.mean,
                "mc_stderr": est.stderr,
                "samples": est.samples,
                "histogram": _histogram_rows(hist),
                "degenerate_resamples": hist.degenerate_resamples,
                "zero_rejections": hist.zero_rejections,
                "entropy": entropy,
                "entropy_bootstrap_sigma": sigma,
                "entropy_bound": crofton.entropy_bound(path.segment_count, perim),
            }
        )
    _write_output(text, args.out)
    return 0


def _cmd_boxdim(args) -> int:
    path = turtle.snowflake_path(args.order)
    normalized = fractal.normalize_snowflake(path, args.order)
    k_min, k_max = _resolve_k_range(normalized, args.kmin, args.kmax)
    series = fractal.box_count_series(normalized, k_min, k_max)
    fit = fractal.estimate_dimension(series)
    theoretical = fractal.theoretical_dimension()
    text = _json_text(
        {
            "config": {"order": args.order, "k_min": k_min, "k_max": k_max},
            "series": [[e.k, e.epsilon, e.count] for e in series.entries],
            "slope": fit.slope,
            "intercept": fit.intercept,
            "r_squared": fit.r_squared,
            "k_range": list(fit.k_range),
            "theoretical_dimension": theoretical,
            "abs_error": abs(fit.slope - theoretical),
        }
    )
    _write_output(text, args.out)
    return 0


def _cmd_report(args) -> int:
    report = build_report(
        args.order,
        args.samples,
        args.seed,
        k_min=args.kmin,
        k_max=args.kmax,
        workers=args.workers,
    )
    _write_output(_json_text(report), args.out)
    return 0


def build_report(
    order: int,
    samples: int,
    seed: int,
    *,
    k_min: int | None = None,
    k_max: int | None = None,
    workers: int = 1,
) -> dict:
    """Assemble the full per-order report.

    Worker count is deliberately not embedded: it cannot change any value.
    """
    path = turtle.snowflake_path(order)
    cls = turtle.classify(path)
    (x0, y0), (x1, y1) = turtle.bounding_box(path)
    side = x1 - x0
    pell_side = 2 * words.pell(order + 1) - 1

    h = hull.convex_hull(path.vertices)
    perim = h.perimeter()
    diam = h.diameter()

    est, hist = crofton.estimate_crossings(path, samples, seed, workers=workers)
    entropy = crofton.crossing_entropy(hist)
    sigma = crofton.bootstrap_entropy_sigma(hist, seed=seed)
    bound = crofton.entropy_bound(path.segment_count, perim)

    normalized = fractal.normalize_snowflake(path, order)
    dimension = None
    try:
        lo, hi = _resolve_k_range(normalized, k_min, k_max)
        series = fractal.box_count_series(normalized, lo, hi)
        fit = fractal.estimate_dimension(series)
        dimension = {
            "series": [[e.k, e.epsilon, e.count] for e in series.entries],
            "slope": fit.slope,
            "intercept": fit.intercept,
            "r_squared": fit.r_squared,
            "k_range": list(fit.k_range),
            "theoretical": fractal.theoretical_dimension(),
        }
    except ValueError:
        dimension = None  # order too small for three admissible scales

    rate = crofton.GROWTH_RATE
    return {
        "config": {
            "order": order,
            "samples": samples,
            "seed": seed,
            "k_min": k_min,
            "k_max": k_max,
        },
        "word": {"length": 4 * words.fib_length(3 * order + 1) - 1},
        "path": {
            "segments": path.segment_count,
            "closed": cls.closed,
            "non_intersecting": cls.non_intersecting,
            "bounding_box": {"min": [x0, y0], "max": [x1, y1], "side": side},
            "side_matches_pell": side == pell_side and (y1 - y0) == pell_side,
        },
        "hull": {
            "vertex_count": len(h.vertices),
            "perimeter": perim,
            "diameter": diam,
            "perimeter_pell_ratio": perim / (1.0 + math.sqrt(2.0)) ** order,
        },
        "crofton": {
            "analytic_mean": est.analytic_mean,
            "mc_mean": est.mean,
            "mc_stderr": est.stderr,
            "samples": est.samples,
            "histogram": _histogram_rows(hist),
            "degenerate_resamples": hist.degenerate_resamples,
            "zero_rejections": hist.zero_rejections,
            "growth_rate": rate,
            "prefactor": est.analytic_mean / rate**order,
        },
        "entropy": {
            "value": entropy,
            "bootstrap_sigma": sigma,
            "bound": bound,
            "value_per_order": entropy / order if order > 0 else None,
        },
        "dimension": dimension,
        "units": _UNITS,
    }


def _resolve_k_range(normalized, k_min, k_max) -> tuple[int, int]:
    """Default scale range: k_min 2, k_max at the scale floor; k_min drops
    toward 1 when fewer than three scales would remain."""
    if k_max is None:
        k_max = fractal.max_admissible_k(normalized)
    if k_min is None:
        k_min = 2
        if k_max - k_min + 1 < 3:
            k_min = max(1, k_max - 2)
    return k_min, k_max


def _histogram_rows(hist: crofton.CrossingHistogram) -> list[list[int]]:
    return [[j, hist.counts[j]] for j in sorted(hist.counts)]


def _histogram_csv(hist: crofton.CrossingHistogram) -> str:
    lines = ["j,count,probability"]
    total = hist.total_samples
    for j in sorted(hist.counts):
        c = hist.counts[j]
        lines.append(f"{j},{c},{c / total!r}")
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write_output(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


if __name__ == "__main__":
    sys.exit(main())
