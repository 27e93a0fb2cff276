"""Actual-vs-estimated comparison series, divergence flagging, and plot
emission (tidy CSV plus hand-emitted SVG line charts).

SVG output is deterministic: fixed decimal formatting, no dependencies,
byte-identical files for identical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .dataset import Dataset, Quarter
from .mlp import MlEstimator
from .ols import RegressionResult
from .taylor import RuleParams, rule_rate

__all__ = [
    "SeriesRow",
    "EstimateSeries",
    "DivergenceEpisode",
    "build_series",
    "find_divergences",
    "emit_csv",
    "load_comparison_csv",
    "emit_svg",
]


@dataclass(frozen=True)
class SeriesRow:
    date: Quarter
    actual: float
    estimated: float

    @property
    def error(self) -> float:
        return self.actual - self.estimated


@dataclass(frozen=True)
class EstimateSeries:
    model_name: str
    rows: tuple[SeriesRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def errors(self) -> list[float]:
        return [r.error for r in self.rows]


@dataclass(frozen=True)
class DivergenceEpisode:
    start: Quarter
    end: Quarter
    peak_abs_error: float


def build_series(
    dataset: Dataset,
    estimator: RuleParams | RegressionResult | MlEstimator,
    model_name: str | None = None,
) -> EstimateSeries:
    """Run one estimator over every quarter of the dataset.

    Accepts a rule parameter set, a fitted regression, or a trained
    network estimator.
    """
    if isinstance(estimator, RuleParams):
        predict = lambda pi, gap: rule_rate(pi, gap, estimator)  # noqa: E731
        default_name = "rule"
    elif isinstance(estimator, RegressionResult):
        predict = estimator.predict
        default_name = "ols_fit"
    elif isinstance(estimator, MlEstimator):
        if estimator.net.w.shape[0] != 2:
            raise ValueError(
                f"network expects {estimator.net.w.shape[0]} inputs, "
                "but this dataset provides 2"
            )
        predict = estimator.predict
        default_name = "ml"
    else:
        raise TypeError(f"unsupported estimator type {type(estimator).__name__}")

    rows = tuple(
        SeriesRow(
            date=r.date,
            actual=r.fedfunds,
            estimated=predict(r.inflation, r.output_gap),
        )
        for r in dataset.rows
    )
    return EstimateSeries(model_name=model_name or default_name, rows=rows)


def find_divergences(
    series: EstimateSeries, threshold: float
) -> list[DivergenceEpisode]:
    """Maximal runs of consecutive quarters with |error| above threshold."""
    if threshold <= 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    episodes: list[DivergenceEpisode] = []
    start: Quarter | None = None
    end: Quarter | None = None
    peak = 0.0
    for row in series.rows:
        err = abs(row.error)
        if err > threshold:
            if start is None:
                start, peak = row.date, err
            else:
                peak = max(peak, err)
            end = row.date
        elif start is not None:
            episodes.append(DivergenceEpisode(start, end, peak))
            start = None
    if start is not None:
        episodes.append(DivergenceEpisode(start, end, peak))
    return episodes


COMPARISON_CSV_HEADER = "date,model,actual,estimated,error"


def emit_csv(series: list[EstimateSeries], path: str | Path) -> Path:
    """Write the tidy comparison CSV, one row per (model, quarter).

    Floats are written with ``repr`` so re-parsing restores them exactly.
    """
    path = Path(path)
    lines = [COMPARISON_CSV_HEADER]
    for s in series:
        for r in s.rows:
            lines.append(
                f"{r.date},{s.model_name},{r.actual!r},{r.estimated!r},{r.error!r}"
            )
    path.write_text("\n".join(lines) + "\n")
    return path


def load_comparison_csv(text: str) -> list[EstimateSeries]:
    """Inverse of :func:`emit_csv` (the stored error column is implied by
    actual - estimated and is not kept separately)."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != COMPARISON_CSV_HEADER:
        raise ValueError(f"expected header {COMPARISON_CSV_HEADER!r}")
    by_model: dict[str, list[SeriesRow]] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 5:
            raise ValueError(f"line {line_no}: expected five columns")
        date = Quarter.from_string(parts[0])
        by_model.setdefault(parts[1], []).append(
            SeriesRow(date=date, actual=float(parts[2]), estimated=float(parts[3]))
        )
    return [
        EstimateSeries(model_name=name, rows=tuple(rows))
        for name, rows in by_model.items()
    ]


# -- SVG emission ----------------------------------------------------------

_ACTUAL_COLOR = "#222222"
_MODEL_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")
_FONT = 'font-family="Helvetica,Arial,sans-serif"'


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _nice_step(span: float, target_ticks: int = 6) -> float:
    if span <= 0:
        return 1.0
    raw = span / target_ticks
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            return mult * mag
    return 10.0 * mag


def emit_svg(
    series: list[EstimateSeries],
    path: str | Path,
    title: str = "",
    size: tuple[int, int] = (900, 480),
) -> Path:
    """Write a standalone SVG line chart.

    One polyline carries the shared actual rate, plus one per model's
    estimates; axis ticks and a legend are included.  Output is
    byte-identical for identical inputs.
    """
    series = [s for s in series if s.rows]
    if not series:
        raise ValueError("no data to plot")

    width, height = size
    left, right, top, bottom = 64.0, 150.0, 44.0, 48.0
    plot_w = width - left - right
    plot_h = height - top - bottom

    dates = sorted({r.date for s in series for r in s.rows})
    index = {d: i for i, d in enumerate(dates)}
    xmax = max(len(dates) - 1, 1)

    values = [r.actual for s in series for r in s.rows]
    values += [r.estimated for s in series for r in s.rows]
    lo, hi = min(values), max(values)
    if lo == hi:
        lo, hi = lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    lo, hi = lo - pad, hi + pad

    def x_at(d: Quarter) -> float:
        return left + plot_w * index[d] / xmax

    def y_at(v: float) -> float:
        return top + plot_h * (hi - v) / (hi - lo)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if title:
        out.append(
            f'<text x="{_fmt(left)}" y="26" {_FONT} font-size="16">{title}</text>'
        )

    # axes
    out.append(
        f'<line x1="{_fmt(left)}" y1="{_fmt(top + plot_h)}" '
        f'x2="{_fmt(left + plot_w)}" y2="{_fmt(top + plot_h)}" stroke="#555555"/>'
    )
    out.append(
        f'<line x1="{_fmt(left)}" y1="{_fmt(top)}" '
        f'x2="{_fmt(left)}" y2="{_fmt(top + plot_h)}" stroke="#555555"/>'
    )

    # x ticks: at most 8, evenly spaced over the quarter index
    n_xticks = min(8, len(dates))
    for k in range(n_xticks):
        i = round(k * xmax / max(n_xticks - 1, 1)) if len(dates) > 1 else 0
        d = dates[i]
        x = x_at(d)
        out.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(top + plot_h)}" '
            f'x2="{_fmt(x)}" y2="{_fmt(top + plot_h + 5)}" stroke="#555555"/>'
        )
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(top + plot_h + 20)}" {_FONT} '
            f'font-size="11" text-anchor="middle">{d}</text>'
        )

    # y ticks on a nice grid
    step = _nice_step(hi - lo)
    tick = math.ceil(lo / step) * step
    while tick <= hi:
        y = y_at(tick)
        out.append(
            f'<line x1="{_fmt(left - 5)}" y1="{_fmt(y)}" '
            f'x2="{_fmt(left)}" y2="{_fmt(y)}" stroke="#555555"/>'
        )
        out.append(
            f'<line x1="{_fmt(left)}" y1="{_fmt(y)}" x2="{_fmt(left + plot_w)}" '
            f'y2="{_fmt(y)}" stroke="#eeeeee"/>'
        )
        label = f"{tick:.10g}"
        out.append(
            f'<text x="{_fmt(left - 9)}" y="{_fmt(y + 4)}" {_FONT} '
            f'font-size="11" text-anchor="end">{label}</text>'
        )
        tick += step

    def polyline(points: list[tuple[float, float]], color: str, dash: str = "") -> str:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        return (
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"{extra}/>'
        )

    # one shared actual line: first series providing each date wins
    actual_at: dict[Quarter, float] = {}
    for s in series:
        for r in s.rows:
            actual_at.setdefault(r.date, r.actual)
    out.append(
        polyline([(x_at(d), y_at(actual_at[d])) for d in dates if d in actual_at],
                 _ACTUAL_COLOR)
    )
    for k, s in enumerate(series):
        color = _MODEL_COLORS[k % len(_MODEL_COLORS)]
        out.append(
            polyline([(x_at(r.date), y_at(r.estimated)) for r in s.rows], color)
        )

    # legend
    lx = left + plot_w + 14.0
    entries = [("actual", _ACTUAL_COLOR)] + [
        (s.model_name, _MODEL_COLORS[k % len(_MODEL_COLORS)])
        for k, s in enumerate(series)
    ]
    for k, (label, color) in enumerate(entries):
        ly = top + 10.0 + 18.0 * k
        out.append(
            f'<line x1="{_fmt(lx)}" y1="{_fmt(ly)}" x2="{_fmt(lx + 22)}" '
            f'y2="{_fmt(ly)}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{_fmt(lx + 28)}" y="{_fmt(ly + 4)}" {_FONT} '
            f'font-size="12">{label}</text>'
        )

    out.append("</svg>")
    path = Path(path)
    path.write_text("\n".join(out) + "\n")
    return path
