"""
Summary metrics for a researcher
================================

Counts of papers and highly-cited papers, and the age-normalized number of
highly-cited papers, for two synthetic careers.
"""

from impactplot import resolve_points, summarize
from impactplot.synthetic import researcher_one, researcher_two

# Synthetic careers come with raw citations, journal ranks and a reference
# corpus, so percentiles are computed rather than read from a file.
for label, researcher in (("Researcher 1", researcher_one()), ("Researcher 2", researcher_two())):
    points = resolve_points(researcher.records, researcher.corpus)
    m = summarize(points)
    print(label)
    print(f"  papers                         {m.n_papers}")
    print(f"  highly-cited papers            {m.n_highly_cited}")
    print(f"  proportion highly cited        {m.proportion_highly_cited_pct}%")
    print(
        f"  age-normalized highly cited    {m.age_normalized_highly_cited_display}"
        f"  ({m.n_highly_cited} / {m.career_years} years = {m.age_normalized_highly_cited:.2f})"
    )
