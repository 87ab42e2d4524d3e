"""Renderer-independent descriptions of the three plots.

* Beamplot: one beam per publication year with the individual percentiles,
  the year median, the career median and the reference value 50.
* Scatter: paper percentile (x) against journal percentile (y) with the
  world-average lines at 50, dashed dataset medians, the bisecting line and
  row/column/quadrant counts.
* Difference against mean (DAM): mean of both percentiles (x) against
  paper minus journal percentile (y).

Sections split at the reference lines (50 for percentiles and means, 0 for
differences). A value sitting exactly on a split counts toward the upper or
right side. Quadrants run counterclockwise from the top right::

    q2 | q1        r1 = upper row, r2 = lower row
    ---+---        c1 = right column, c2 = left column
    q3 | q4

Every "average" drawn here is a median. Points are stored in a canonical
order (by id, then coordinates) so a builder's output never depends on input
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import median

from impactplot.metrics import percent

WORLD_AVERAGE = 50.0
ROW_LABELS = ("r1", "r2")
COLUMN_LABELS = ("c1", "c2")
QUADRANT_LABELS = ("q1", "q2", "q3", "q4")
_ROUNDTRIP_SLACK = 1e-9


@dataclass(frozen=True)
class SectionStats:
    label: str
    count: int
    percent: int

    def to_dict(self):
        return {"label": self.label, "count": self.count, "percent": self.percent}

    @classmethod
    def from_dict(cls, d):
        return cls(d["label"], d["count"], d["percent"])


def classify(x: float, y: float, x_split: float, y_split: float) -> tuple[str, str, str]:
    """Row, column and quadrant label of a point."""
    right = x >= x_split
    upper = y >= y_split
    row = "r1" if upper else "r2"
    col = "c1" if right else "c2"
    if upper:
        quad = "q1" if right else "q2"
    else:
        quad = "q4" if right else "q3"
    return row, col, quad


def _section_stats(coords, x_split, y_split):
    counts = {label: 0 for label in ROW_LABELS + COLUMN_LABELS + QUADRANT_LABELS}
    members = {label: [] for label in QUADRANT_LABELS}
    for x, y in coords:
        row, col, quad = classify(x, y, x_split, y_split)
        counts[row] += 1
        counts[col] += 1
        counts[quad] += 1
        members[quad].append((x, y))
    n = len(coords)

    def stats(labels):
        return tuple(SectionStats(lab, counts[lab], percent(counts[lab], n)) for lab in labels)

    return stats(ROW_LABELS), stats(COLUMN_LABELS), stats(QUADRANT_LABELS), members


def _lookup(sections, label):
    for s in sections:
        if s.label == label:
            return s
    raise KeyError(label)


def _require_points(points):
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    return points


# ---------------------------------------------------------------- beamplot


@dataclass(frozen=True)
class YearGroup:
    values: tuple[float, ...]
    median: float


@dataclass(frozen=True)
class BeamplotModel:
    year_groups: dict[int, YearGroup]
    overall_median: float
    metric_kind: str
    reference_value: float = WORLD_AVERAGE

    @property
    def n_points(self) -> int:
        return sum(len(g.values) for g in self.year_groups.values())

    def to_dict(self):
        return {
            "kind": "beamplot",
            "metric_kind": self.metric_kind,
            "reference_value": self.reference_value,
            "overall_median": self.overall_median,
            "year_groups": [
                {"year": year, "values": list(g.values), "median": g.median}
                for year, g in self.year_groups.items()
            ],
        }

    @classmethod
    def from_dict(cls, d):
        groups = {g["year"]: YearGroup(tuple(g["values"]), g["median"]) for g in d["year_groups"]}
        return cls(groups, d["overall_median"], d["metric_kind"], d["reference_value"])


def build_beamplot(points, metric_kind: str = "paper") -> BeamplotModel:
    """Group paper (or journal) percentiles by year, with year and career medians."""
    if metric_kind not in ("paper", "journal"):
        raise ValueError(f"metric_kind must be 'paper' or 'journal', got {metric_kind!r}")
    points = _require_points(points)
    attr = f"{metric_kind}_percentile"
    by_year: dict[int, list[float]] = {}
    for p in points:
        by_year.setdefault(p.year, []).append(getattr(p, attr))
    groups = {
        year: YearGroup(tuple(sorted(vals)), median(vals)) for year, vals in sorted(by_year.items())
    }
    overall = median(getattr(p, attr) for p in points)
    return BeamplotModel(groups, overall, metric_kind)


# ---------------------------------------------------------------- scatter


@dataclass(frozen=True)
class ScatterPoint:
    id: str
    x: float
    y: float
    top10: bool


@dataclass(frozen=True)
class ScatterModel:
    """x = paper percentile, y = journal percentile."""

    points: tuple[ScatterPoint, ...]
    median_x: float
    median_y: float
    rows: tuple[SectionStats, ...]
    columns: tuple[SectionStats, ...]
    quadrants: tuple[SectionStats, ...]
    quadrant_medians: dict[str, tuple[float, float]]
    world_x: float = WORLD_AVERAGE
    world_y: float = WORLD_AVERAGE

    def section(self, label: str) -> SectionStats:
        return _lookup(self.rows + self.columns + self.quadrants, label)

    def to_dict(self):
        return {
            "kind": "scatter",
            "points": [{"id": p.id, "x": p.x, "y": p.y, "top10": p.top10} for p in self.points],
            "world_lines": {"x": self.world_x, "y": self.world_y},
            "dataset_medians": {"x": self.median_x, "y": self.median_y},
            "bisecting_line": {"from": [0.0, 0.0], "to": [100.0, 100.0]},
            "rows": [s.to_dict() for s in self.rows],
            "columns": [s.to_dict() for s in self.columns],
            "quadrants": [s.to_dict() for s in self.quadrants],
            "quadrant_medians": {q: list(xy) for q, xy in self.quadrant_medians.items()},
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            points=tuple(ScatterPoint(p["id"], p["x"], p["y"], p["top10"]) for p in d["points"]),
            median_x=d["dataset_medians"]["x"],
            median_y=d["dataset_medians"]["y"],
            rows=tuple(SectionStats.from_dict(s) for s in d["rows"]),
            columns=tuple(SectionStats.from_dict(s) for s in d["columns"]),
            quadrants=tuple(SectionStats.from_dict(s) for s in d["quadrants"]),
            quadrant_medians={q: tuple(xy) for q, xy in d["quadrant_medians"].items()},
            world_x=d["world_lines"]["x"],
            world_y=d["world_lines"]["y"],
        )


def build_scatter(points) -> ScatterModel:
    points = _require_points(points)
    spts = sorted(
        (ScatterPoint(p.id, p.paper_percentile, p.journal_percentile, p.top10) for p in points),
        key=lambda s: (s.id, s.x, s.y),
    )
    coords = [(s.x, s.y) for s in spts]
    rows, cols, quads, members = _section_stats(coords, WORLD_AVERAGE, WORLD_AVERAGE)
    quad_medians = {
        q: (median(x for x, _ in m), median(y for _, y in m)) for q, m in members.items() if m
    }
    return ScatterModel(
        points=tuple(spts),
        median_x=median(x for x, _ in coords),
        median_y=median(y for _, y in coords),
        rows=rows,
        columns=cols,
        quadrants=quads,
        quadrant_medians=quad_medians,
    )


# ---------------------------------------------------------------- difference against mean


def _check_percentile(name, value):
    if not (0.0 <= value <= 100.0):
        raise ValueError(f"{name} must lie in [0, 100], got {value!r}")


def to_dam(paper_percentile: float, journal_percentile: float) -> tuple[float, float]:
    """(mean, diff) with diff = paper - journal."""
    _check_percentile("paper percentile", paper_percentile)
    _check_percentile("journal percentile", journal_percentile)
    mean = (paper_percentile + journal_percentile) / 2
    diff = paper_percentile - journal_percentile
    return mean, diff


def _clamp_reconstructed(name, value):
    # Float noise can land a hair outside the range on the way back.
    if -_ROUNDTRIP_SLACK <= value < 0.0:
        return 0.0
    if 100.0 < value <= 100.0 + _ROUNDTRIP_SLACK:
        return 100.0
    _check_percentile(name, value)
    return value


def from_dam(mean: float, diff: float) -> tuple[float, float]:
    """Inverse of :func:`to_dam`: paper = mean + diff/2, journal = mean - diff/2."""
    paper = _clamp_reconstructed("reconstructed paper percentile", mean + diff / 2)
    journal = _clamp_reconstructed("reconstructed journal percentile", mean - diff / 2)
    return paper, journal


@dataclass(frozen=True)
class DamPoint:
    id: str
    mean: float
    diff: float
    top10: bool

    @property
    def unfilled(self) -> bool:
        return self.top10


@dataclass(frozen=True)
class DamModel:
    """x = mean of the two percentiles, y = paper minus journal percentile."""

    points: tuple[DamPoint, ...]
    median_diff: float
    median_mean: float
    rows: tuple[SectionStats, ...]
    columns: tuple[SectionStats, ...]
    quadrants: tuple[SectionStats, ...]
    zero_diff_axis: float = 0.0
    mid_mean_axis: float = WORLD_AVERAGE

    def section(self, label: str) -> SectionStats:
        return _lookup(self.rows + self.columns + self.quadrants, label)

    def to_dict(self):
        return {
            "kind": "damplot",
            "points": [
                {"id": p.id, "mean": p.mean, "diff": p.diff, "top10": p.top10} for p in self.points
            ],
            "median_diff_line": self.median_diff,
            "median_mean_line": self.median_mean,
            "zero_diff_axis": self.zero_diff_axis,
            "mid_mean_axis": self.mid_mean_axis,
            "rows": [s.to_dict() for s in self.rows],
            "columns": [s.to_dict() for s in self.columns],
            "quadrants": [s.to_dict() for s in self.quadrants],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            points=tuple(DamPoint(p["id"], p["mean"], p["diff"], p["top10"]) for p in d["points"]),
            median_diff=d["median_diff_line"],
            median_mean=d["median_mean_line"],
            rows=tuple(SectionStats.from_dict(s) for s in d["rows"]),
            columns=tuple(SectionStats.from_dict(s) for s in d["columns"]),
            quadrants=tuple(SectionStats.from_dict(s) for s in d["quadrants"]),
            zero_diff_axis=d["zero_diff_axis"],
            mid_mean_axis=d["mid_mean_axis"],
        )


def build_dam(points) -> DamModel:
    """Rows split at diff = 0, columns at mean = 50. Top-10% papers get unfilled markers."""
    points = _require_points(points)
    dpts = []
    for p in points:
        mean, diff = to_dam(p.paper_percentile, p.journal_percentile)
        dpts.append(DamPoint(p.id, mean, diff, p.top10))
    dpts.sort(key=lambda d: (d.id, d.mean, d.diff))
    coords = [(d.mean, d.diff) for d in dpts]
    rows, cols, quads, _ = _section_stats(coords, WORLD_AVERAGE, 0.0)
    return DamModel(
        points=tuple(dpts),
        median_diff=median(d.diff for d in dpts),
        median_mean=median(d.mean for d in dpts),
        rows=rows,
        columns=cols,
        quadrants=quads,
    )
