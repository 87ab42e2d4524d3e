"""Summary numbers for one researcher: output, highly-cited papers, and the
age-normalized highly-cited count (used instead of the h index)."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction


def round_half_away(value) -> int:
    """Round to the nearest integer, halves away from zero.

    Works on ``Fraction`` as well as floats, so exact ratios never suffer
    binary rounding noise at the .5 boundary.
    """
    value = Fraction(value)
    magnitude = abs(value)
    rounded = int(magnitude + Fraction(1, 2))
    return rounded if value >= 0 else -rounded


def percent(count: int, total: int) -> int:
    """``round(100 * count / total)`` computed exactly; 0 when ``total`` is 0."""
    if total == 0:
        return 0
    return round_half_away(Fraction(100 * count, total))


def career_years(first_year: int, last_year: int) -> int:
    """Inclusive publication span. 2004..2013 is 10 years."""
    if first_year > last_year:
        raise ValueError(f"first year {first_year} is after last year {last_year}")
    return last_year - first_year + 1


@dataclass(frozen=True)
class ResearcherMetrics:
    n_papers: int
    n_highly_cited: int
    proportion_highly_cited: float
    proportion_highly_cited_pct: int
    first_year: int
    last_year: int
    career_years: int
    age_normalized_highly_cited: float
    age_normalized_highly_cited_display: int

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ResearcherMetrics":
        return cls(**data)


def summarize(points) -> ResearcherMetrics:
    """Table of counts for a researcher's points (any iterable of PercentilePoint)."""
    points = list(points)
    if not points:
        raise ValueError("cannot summarize an empty publication set")
    n = len(points)
    hc = sum(1 for p in points if p.top10)
    first = min(p.year for p in points)
    last = max(p.year for p in points)
    years = career_years(first, last)
    return ResearcherMetrics(
        n_papers=n,
        n_highly_cited=hc,
        proportion_highly_cited=hc / n,
        proportion_highly_cited_pct=percent(hc, n),
        first_year=first,
        last_year=last,
        career_years=years,
        age_normalized_highly_cited=hc / years,
        age_normalized_highly_cited_display=round_half_away(Fraction(hc, years)),
    )
