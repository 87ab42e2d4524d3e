"""
Paper impact against journal impact
===================================

A scatter of paper percentile against journal percentile, then the same data
as a difference-against-mean plot. Both carry row, column and quadrant counts.
"""

import json
from pathlib import Path

from impactplot import build_dam, build_scatter, from_dam, render_dam, render_scatter
from impactplot.synthetic import researcher_one

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

points = researcher_one().points

# Scatter: x is the paper percentile, y the journal percentile. Points below
# the diagonal were cited more than their journal's standing suggests.
scatter = build_scatter(points)
for s in scatter.rows + scatter.columns + scatter.quadrants:
    print(f"n_{s.label} = {s.count}; {s.percent}%")
print("quadrant medians:", scatter.quadrant_medians)
(out / "scatter.svg").write_bytes(render_scatter(scatter))

# DAM: x is the mean of both percentiles, y is paper minus journal.
dam = build_dam(points)
print("median difference:", dam.median_diff, " median mean:", dam.median_mean)

# The original values are recoverable from any DAM point.
first = dam.points[0]
print(first.id, "->", from_dam(first.mean, first.diff))

# Top-10% papers are drawn as unfilled circles.
print("unfilled markers:", sum(p.unfilled for p in dam.points))
(out / "damplot.svg").write_bytes(render_dam(dam))
(out / "damplot.json").write_text(json.dumps(dam.to_dict(), indent=2))
print("wrote", sorted(p.name for p in out.iterdir()))
