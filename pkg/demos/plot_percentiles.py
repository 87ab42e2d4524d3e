"""
Paper and journal percentiles
=============================

How a citation count becomes a field- and time-normalized percentile, and
how a journal rank becomes a journal percentile.
"""

from impactplot import (
    PublicationRecord,
    ReferenceCell,
    cell_percentile,
    hazen_percentile,
    journal_percentile,
    paper_percentile,
    rn_journal_percentile,
)

# The Hazen formula on a rank i among n papers, ranked from least cited.
# The most cited of ten papers sits at 95: 95% of the set is cited less.
print("top of ten:", hazen_percentile(10, 10))
print("only paper in its cell:", hazen_percentile(1, 1))

# A reference cell is every paper of one subject category and year.
# Equal citation counts share their mid-rank, so they get equal percentiles.
cell = ReferenceCell("CHEM", 2010, (0, 1, 1, 3, 8, 8, 8, 20))
for c in sorted(set(cell.citation_counts)):
    print(f"{c:>3} citations -> {cell_percentile(cell, c):6.2f}")

# A paper listed in two categories averages its two cell percentiles.
cells = {
    ("CHEM", 2010): cell,
    ("PHYS", 2010): ReferenceCell("PHYS", 2010, (2, 3, 8, 40)),
}
paper = PublicationRecord(
    id="doi:10.1000/demo",
    year=2010,
    citations=8,
    categories=("CHEM", "PHYS"),
    journal_ranks={"CHEM": (12, 150), "PHYS": (30, 80)},
)
print("paper percentile:", paper_percentile(paper, cells))

# Journals: rank-normalized impact factor, rank 1 scores 100.
print("rank 12 of 150:", rn_journal_percentile(12, 150))
print("journal percentile (averaged over categories):", journal_percentile(paper))
