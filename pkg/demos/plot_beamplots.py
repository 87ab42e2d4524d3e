"""
Beamplots
=========

One beam per publication year. Grey rhombi are single papers, red triangles
the year medians, the dashed red line the career median, and the grey line
the reference value 50.
"""

from pathlib import Path

from impactplot import build_beamplot, render_beamplot
from impactplot.synthetic import researcher_one

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

points = researcher_one().points

# The same construction works for paper and for journal percentiles.
for kind in ("paper", "journal"):
    model = build_beamplot(points, kind)
    print(kind, "career median:", model.overall_median)
    for year, group in model.year_groups.items():
        print(f"  {year}: {len(group.values):2d} papers, median {group.median:5.1f}")
    target = out / f"beamplot_{kind}.svg"
    target.write_bytes(render_beamplot(model, title=f"{kind.title()} percentiles by year"))
    print("wrote", target)
