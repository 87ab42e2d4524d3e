"""Reproducible synthetic researchers.

Real per-paper data for evaluated researchers is rarely publishable, so these
generators build publication sets with prescribed headline counts (number of
papers, career span, number of highly-cited papers, number of papers in
above-median journals). Each comes in both input modes: precomputed points,
and raw compute-mode records plus a matching reference corpus.

Every paper gets its own category so the corpus can be tuned per paper: the
cell for ``(C<i>, year)`` holds 100 papers cited 0..99 times, and the focal
paper's count ``c`` yields a Hazen percentile of exactly ``c + 0.5``. The
journal sits at rank ``r`` of 100, i.e. journal percentile ``101 - r``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from impactplot.percentiles import PercentilePoint
from impactplot.records import PublicationRecord, RecordSet, ReferenceCell

CELL_SIZE = 100


@dataclass(frozen=True)
class SyntheticResearcher:
    records: RecordSet
    corpus: dict
    points: list

    def precomputed_records(self) -> RecordSet:
        return RecordSet(
            tuple(
                PublicationRecord(
                    id=p.id,
                    year=p.year,
                    paper_percentile=p.paper_percentile,
                    journal_percentile=p.journal_percentile,
                )
                for p in self.points
            )
        )


def make_researcher(
    n_papers: int,
    first_year: int,
    last_year: int,
    n_highly_cited: int,
    n_high_journal: int | None = None,
    seed: int = 0,
) -> SyntheticResearcher:
    """Build a researcher with exact headline counts.

    ``n_highly_cited`` papers land at paper percentile >= 90 and the rest below;
    ``n_high_journal`` papers (default: about 70%) publish in journals at
    percentile >= 50. Both first and last year are guaranteed to occur.
    """
    span = last_year - first_year + 1
    if n_papers < 1 or span < 1:
        raise ValueError("need at least one paper and first_year <= last_year")
    if n_papers < min(span, 2):
        raise ValueError("too few papers to cover both the first and last year")
    if not 0 <= n_highly_cited <= n_papers:
        raise ValueError("n_highly_cited must lie in [0, n_papers]")
    if n_high_journal is None:
        n_high_journal = round(0.7 * n_papers)
    if not 0 <= n_high_journal <= n_papers:
        raise ValueError("n_high_journal must lie in [0, n_papers]")

    rng = random.Random(seed)
    years = [first_year + (i % span) for i in range(n_papers)]
    if n_papers < span:
        years[-1] = last_year
    years.sort()

    order = list(range(n_papers))
    rng.shuffle(order)
    highly = set(order[:n_highly_cited])
    rng.shuffle(order)
    high_journal = set(order[:n_high_journal])

    records, cells, points = [], {}, []
    width = len(str(n_papers))
    for i, year in enumerate(years):
        pid = f"p{i + 1:0{width}d}"
        category = f"C{i + 1:0{width}d}"
        # Count c gives percentile c + 0.5: top-10% papers need c >= 90.
        citations = rng.randint(90, 99) if i in highly else rng.randint(0, 89)
        # Rank r of 100 gives journal percentile 101 - r: >= 50 needs r <= 51.
        rank = rng.randint(1, 51) if i in high_journal else rng.randint(52, 100)
        records.append(
            PublicationRecord(
                id=pid,
                year=year,
                citations=citations,
                categories=(category,),
                journal_ranks={category: (rank, CELL_SIZE)},
            )
        )
        cells[(category, year)] = ReferenceCell(category, year, tuple(range(CELL_SIZE)))
        points.append(PercentilePoint(pid, year, citations + 0.5, float(CELL_SIZE - rank + 1)))
    return SyntheticResearcher(RecordSet(tuple(records)), cells, points)


def researcher_one(seed: int = 1) -> SyntheticResearcher:
    """99 papers, 2004-2013, 29 highly cited, 89 in above-median journals."""
    return make_researcher(99, 2004, 2013, 29, n_high_journal=89, seed=seed)


def researcher_two(seed: int = 2) -> SyntheticResearcher:
    """427 papers, 1997-2013, 254 highly cited."""
    return make_researcher(427, 1997, 2013, 254, n_high_journal=400, seed=seed)
