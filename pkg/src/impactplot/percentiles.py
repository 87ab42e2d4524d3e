"""Field- and time-normalized percentiles.

Paper percentiles use the Hazen formula ``(i - 0.5) / n * 100`` on the focal
paper's ascending citation rank within its (category, year) reference cell.
Tied counts share the mid-rank, so equal citations always map to equal
percentiles. A paper in several categories gets the arithmetic mean of its
per-category values.

Journal percentiles are rank-normalized impact factors
``(k - r_j + 1) / k * 100`` with ``r_j`` the journal's descending rank among
``k`` journals of the category, averaged over categories the same way.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Mapping

from impactplot.errors import PercentileError
from impactplot.records import COMPUTE, PublicationRecord, ReferenceCell, RecordSet

TOP10_THRESHOLD = 90.0


@dataclass(frozen=True)
class PercentilePoint:
    """One paper as every plot sees it. ``top10`` is derived, never passed in."""

    id: str
    year: int
    paper_percentile: float
    journal_percentile: float
    top10: bool = field(init=False)

    def __post_init__(self):
        for name in ("paper_percentile", "journal_percentile"):
            value = float(getattr(self, name))
            if not (0.0 <= value <= 100.0):
                raise PercentileError(f"{name} {value} outside [0, 100]", self.id)
            object.__setattr__(self, name, value)
        object.__setattr__(self, "top10", self.paper_percentile >= TOP10_THRESHOLD)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "year": self.year,
            "paper_percentile": self.paper_percentile,
            "journal_percentile": self.journal_percentile,
            "top10": self.top10,
        }


def hazen_percentile(rank: float, n: int) -> float:
    """``(rank - 0.5) / n * 100``; ``rank`` may be a mid-rank such as 1.5."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not (0.5 <= rank <= n):
        raise ValueError(f"rank must lie in [0.5, {n}], got {rank!r}")
    # Multiply first: one rounding step, so e.g. rank n of n is exactly 100 - 50/n.
    return (rank - 0.5) * 100.0 / n


def cell_percentile(cell: ReferenceCell, citations: int) -> float:
    """Hazen percentile of ``citations`` inside ``cell``, using mid-ranks for ties.

    The focal paper must be part of its own cell.
    """
    counts = cell.citation_counts
    below = bisect_left(counts, citations)
    ties = bisect_right(counts, citations) - below
    if ties == 0:
        raise ValueError(
            f"citation count {citations} does not occur in cell {cell.category}/{cell.year}"
        )
    # Positions below+1 .. below+ties are tied; their average rank is the mid-rank.
    mid_rank = below + (ties + 1) / 2
    return hazen_percentile(mid_rank, len(counts))


def paper_percentile(record: PublicationRecord, cells: Mapping[tuple[str, int], ReferenceCell]) -> float:
    if record.citations is None or not record.categories:
        raise PercentileError("needs citations and categories", record.id)
    values = []
    for category in record.categories:
        cell = cells.get((category, record.year))
        if cell is None:
            raise PercentileError(
                f"no reference cell for category {category!r}, year {record.year}", record.id
            )
        try:
            values.append(cell_percentile(cell, record.citations))
        except ValueError as exc:
            raise PercentileError(str(exc), record.id) from None
    return sum(values) / len(values)


def rn_journal_percentile(r_j: int, k: int) -> float:
    """Rank-normalized impact factor; the top journal (``r_j == 1``) scores 100."""
    for name, v in (("r_j", r_j), ("k", k)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    if r_j > k:
        raise ValueError(f"rank {r_j} exceeds category size {k}")
    # Single rounding keeps the endpoints exact: 100 at r_j = 1, 100/k at r_j = k.
    return (k - r_j + 1) * 100.0 / k


def journal_percentile(record: PublicationRecord) -> float:
    if not record.journal_ranks:
        raise PercentileError("no journal rank entries", record.id)
    values = [rn_journal_percentile(r_j, k) for r_j, k in record.journal_ranks.values()]
    return sum(values) / len(values)


def resolve_points(records: RecordSet, cells: Mapping[tuple[str, int], ReferenceCell] | None = None):
    """One :class:`PercentilePoint` per record, in record order."""
    if records.mode == COMPUTE and cells is None:
        raise PercentileError("compute-mode records need a reference corpus")
    points = []
    for rec in records:
        if records.mode == COMPUTE:
            try:
                p = paper_percentile(rec, cells)
                j = journal_percentile(rec)
            except PercentileError:
                raise
            except ValueError as exc:
                raise PercentileError(str(exc), rec.id) from None
        else:
            p, j = rec.paper_percentile, rec.journal_percentile
        points.append(PercentilePoint(rec.id, rec.year, p, j))
    return points
