"""Quarterly panel ingestion: FRED-style CSV series, alignment, gap variables.

All types are immutable after construction and all operations are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

__all__ = [
    "Quarter",
    "RawSeries",
    "PanelRow",
    "QuarterlyPanel",
    "DatasetRow",
    "Dataset",
    "FixedTargets",
    "ParseError",
    "DuplicateObservationError",
    "NoOverlapError",
    "parse_fred_csv",
    "align_panel",
    "compute_output_gap",
    "build_dataset",
    "dataset_to_csv",
    "dataset_from_csv",
]

MISSING_SENTINEL = "."


class ParseError(ValueError):
    """Malformed input file; message names the offending line."""


class DuplicateObservationError(ValueError):
    """The same observation date appears more than once in a series."""


class NoOverlapError(ValueError):
    """The input series share no common quarter."""


@dataclass(frozen=True, order=True)
class Quarter:
    """A calendar quarter, totally ordered by (year, quarter)."""

    year: int
    quarter: int

    def __post_init__(self) -> None:
        if self.quarter not in (1, 2, 3, 4):
            raise ValueError(f"quarter must be in 1..4, got {self.quarter}")

    @classmethod
    def from_month(cls, year: int, month: int) -> "Quarter":
        if not 1 <= month <= 12:
            raise ValueError(f"month must be in 1..12, got {month}")
        return cls(year, (month - 1) // 3 + 1)

    @classmethod
    def from_string(cls, text: str) -> "Quarter":
        """Parse the 'YYYYQn' form, e.g. '1954Q3'."""
        head, _, tail = text.upper().partition("Q")
        if not tail:
            raise ValueError(f"not a quarter string: {text!r}")
        try:
            return cls(int(head), int(tail))
        except ValueError as exc:
            raise ValueError(f"not a quarter string: {text!r}") from exc

    def successor(self) -> "Quarter":
        if self.quarter == 4:
            return Quarter(self.year + 1, 1)
        return Quarter(self.year, self.quarter + 1)

    def __str__(self) -> str:
        return f"{self.year}Q{self.quarter}"


@dataclass(frozen=True)
class RawSeries:
    """One named series of per-quarter observations, strictly increasing."""

    name: str
    observations: tuple[tuple[Quarter, float], ...]
    dropped_missing: int = 0
    aggregated_quarters: int = 0

    def __post_init__(self) -> None:
        dates = [q for q, _ in self.observations]
        for prev, cur in zip(dates, dates[1:]):
            if cur == prev:
                raise DuplicateObservationError(
                    f"series {self.name!r}: duplicate quarter {cur}"
                )
            if cur < prev:
                raise ParseError(
                    f"series {self.name!r}: observations not in chronological "
                    f"order at {cur}"
                )

    def __len__(self) -> int:
        return len(self.observations)

    def quarters(self) -> set[Quarter]:
        return {q for q, _ in self.observations}


@dataclass(frozen=True)
class PanelRow:
    date: Quarter
    fedfunds: float
    inflation: float
    real_gdp: float
    potential_gdp: float


@dataclass(frozen=True)
class QuarterlyPanel:
    """Inner join of the four source series on Quarter, sorted ascending."""

    rows: tuple[PanelRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def span(self) -> tuple[Quarter, Quarter]:
        return self.rows[0].date, self.rows[-1].date


@dataclass(frozen=True)
class DatasetRow:
    date: Quarter
    fedfunds: float
    inflation: float
    inflation_gap: float
    output_gap: float


@dataclass(frozen=True)
class FixedTargets:
    """Equilibrium real rate and inflation target, both 2 percent by default."""

    r_star: float = 2.0
    pi_star: float = 2.0


@dataclass(frozen=True)
class Dataset:
    """Per-quarter regression variables in percent units."""

    rows: tuple[DatasetRow, ...]
    targets: FixedTargets = field(default_factory=FixedTargets)

    def __len__(self) -> int:
        return len(self.rows)

    def span(self) -> tuple[Quarter, Quarter]:
        return self.rows[0].date, self.rows[-1].date


def _parse_iso_date(text: str, line_no: int) -> tuple[int, int]:
    parts = text.strip().split("-")
    if len(parts) != 3:
        raise ParseError(f"line {line_no}: malformed date {text!r}")
    try:
        year, month = int(parts[0]), int(parts[1])
        int(parts[2])
    except ValueError:
        raise ParseError(f"line {line_no}: malformed date {text!r}") from None
    if not 1 <= month <= 12:
        raise ParseError(f"line {line_no}: malformed date {text!r}")
    return year, month


def parse_fred_csv(text: str, series_name: str) -> RawSeries:
    """Parse a two-column FRED observation export into a quarterly series.

    The file carries one header row followed by ISO-dated observations.
    Rows whose value is the FRED missing sentinel "." are dropped (counted
    in ``dropped_missing``).  Monthly files are folded to quarters by
    arithmetic mean of the months in each quarter; ``aggregated_quarters``
    records how many quarters were averaged from more than one row.  A
    repeated observation date is rejected, as FRED exports never contain
    one.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("line 1: empty file") from None
    if len(header) < 2:
        raise ParseError("line 1: expected a DATE column and a value column")

    seen_dates: set[tuple[int, int]] = set()
    # quarter -> list of monthly values, in file order
    buckets: list[tuple[Quarter, list[float]]] = []
    dropped = 0
    for line_no, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) < 2:
            raise ParseError(f"line {line_no}: expected two columns")
        year, month = _parse_iso_date(row[0], line_no)
        raw_value = row[1].strip()
        if raw_value == MISSING_SENTINEL:
            dropped += 1
            continue
        try:
            value = float(raw_value)
        except ValueError:
            raise ParseError(
                f"line {line_no}: non-numeric value {raw_value!r}"
            ) from None
        if (year, month) in seen_dates:
            raise DuplicateObservationError(
                f"series {series_name!r}: duplicate observation for "
                f"{row[0].strip()} (line {line_no})"
            )
        seen_dates.add((year, month))
        q = Quarter.from_month(year, month)
        if buckets and buckets[-1][0] == q:
            buckets[-1][1].append(value)
        else:
            buckets.append((q, [value]))

    observations = tuple(
        (q, sum(values) / len(values)) for q, values in buckets
    )
    aggregated = sum(1 for _, values in buckets if len(values) > 1)
    return RawSeries(
        name=series_name,
        observations=observations,
        dropped_missing=dropped,
        aggregated_quarters=aggregated,
    )


def align_panel(
    fedfunds: RawSeries,
    inflation: RawSeries,
    real_gdp: RawSeries,
    potential_gdp: RawSeries,
) -> QuarterlyPanel:
    """Inner-join the four series on Quarter; only common quarters survive."""
    series = (fedfunds, inflation, real_gdp, potential_gdp)
    for s in series:
        if not s.observations:
            raise ValueError(f"series {s.name!r} is empty")
    common = set.intersection(*(s.quarters() for s in series))
    if not common:
        raise NoOverlapError(
            "no quarter is covered by all four series: "
            + ", ".join(f"{s.name} ({s.observations[0][0]}..{s.observations[-1][0]})" for s in series)
        )
    maps = [dict(s.observations) for s in series]
    rows = tuple(
        PanelRow(q, maps[0][q], maps[1][q], maps[2][q], maps[3][q])
        for q in sorted(common)
    )
    return QuarterlyPanel(rows)


def compute_output_gap(real_gdp: float, potential_gdp: float) -> float:
    """Percent deviation of real GDP from potential, 100*(y - y*)/y*."""
    if potential_gdp <= 0:
        raise ValueError(f"potential GDP must be positive, got {potential_gdp}")
    return 100.0 * (real_gdp - potential_gdp) / potential_gdp


def build_dataset(panel: QuarterlyPanel, targets: FixedTargets) -> Dataset:
    """Derive the gap variables, preserving row order."""
    if not panel.rows:
        raise ValueError("panel is empty")
    rows = tuple(
        DatasetRow(
            date=r.date,
            fedfunds=r.fedfunds,
            inflation=r.inflation,
            inflation_gap=r.inflation - targets.pi_star,
            output_gap=compute_output_gap(r.real_gdp, r.potential_gdp),
        )
        for r in panel.rows
    )
    return Dataset(rows=rows, targets=targets)


PANEL_CSV_HEADER = "date,fedfunds,inflation,inflation_gap,output_gap"


def dataset_to_csv(dataset: Dataset) -> str:
    """Serialize to the panel CSV format at full decimal precision.

    Values are written with ``repr``, so re-parsing reproduces the floats
    bit-exactly.
    """
    lines = [PANEL_CSV_HEADER]
    for r in dataset.rows:
        lines.append(
            f"{r.date},{r.fedfunds!r},{r.inflation!r},"
            f"{r.inflation_gap!r},{r.output_gap!r}"
        )
    return "\n".join(lines) + "\n"


def dataset_from_csv(text: str, targets: FixedTargets | None = None) -> Dataset:
    """Parse a panel CSV produced by :func:`dataset_to_csv`."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("line 1: empty panel file") from None
    if [c.strip() for c in header] != PANEL_CSV_HEADER.split(","):
        raise ParseError(
            f"line 1: expected header {PANEL_CSV_HEADER!r}, got {','.join(header)!r}"
        )
    rows = []
    for line_no, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 5:
            raise ParseError(f"line {line_no}: expected five columns")
        try:
            date = Quarter.from_string(row[0])
        except ValueError:
            raise ParseError(f"line {line_no}: malformed date {row[0]!r}") from None
        try:
            values = [float(v) for v in row[1:]]
        except ValueError:
            raise ParseError(f"line {line_no}: non-numeric value in {row[1:]}") from None
        rows.append(DatasetRow(date, *values))
    if targets is None:
        targets = FixedTargets()
    return Dataset(rows=tuple(rows), targets=targets)
