"""Standalone SVG 1.1 renderings of the plot models.

Output is byte-deterministic: attributes are written in a fixed order and all
coordinates use two decimals. Every drawn element carries a ``class`` so the
documents can be inspected after parsing:

``point``            one per data point (``rhombus`` or ``circle``; ``top10`` marks unfilled ones)
``year-median``      beamplot year medians (triangles)
``overall-median``   beamplot career median (dashed line)
``dataset-median``   scatter/DAM dashed median lines
``quadrant-median``  scatter per-quadrant median (squares)
``section-label``    ``n_r1 = 89; 90%`` style counts
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from xml.sax.saxutils import escape, quoteattr

from impactplot.plots import BeamplotModel, DamModel, ScatterModel, SectionStats


@dataclass(frozen=True)
class StyleConfig:
    width: float = 640.0
    height: float = 480.0
    margin_left: float = 70.0
    margin_right: float = 130.0
    margin_top: float = 60.0
    margin_bottom: float = 55.0
    point_color: str = "#808080"
    accent_color: str = "#D62728"
    reference_color: str = "#808080"
    marker_color: str = "#000000"
    unfilled_color: str = "#FFFFFF"
    marker_size: float = 4.0
    median_marker_size: float = 6.0
    line_width: float = 1.0
    font_family: str = "Helvetica, Arial, sans-serif"
    font_size: float = 11.0
    dash_pattern: str = "6,4"

    def __post_init__(self):
        for name in ("width", "height", "marker_size", "median_marker_size", "line_width", "font_size"):
            if getattr(self, name) <= 0:
                raise ValueError(f"style {name} must be positive")
        for name in ("margin_left", "margin_right", "margin_top", "margin_bottom"):
            if getattr(self, name) < 0:
                raise ValueError(f"style {name} must be nonnegative")
        if self.margin_left + self.margin_right >= self.width:
            raise ValueError("horizontal margins leave no room for the plot")
        if self.margin_top + self.margin_bottom >= self.height:
            raise ValueError("vertical margins leave no room for the plot")

    @classmethod
    def from_dict(cls, overrides: dict) -> "StyleConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown style key(s): {', '.join(sorted(unknown))}")
        return cls(**{**asdict(cls()), **overrides})

    @classmethod
    def from_json(cls, text: str) -> "StyleConfig":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("style file must hold a JSON object")
        return cls.from_dict(data)


class Frame:
    """Affine map from data coordinates to canvas pixels (y grows downward)."""

    def __init__(self, style: StyleConfig, x_range, y_range):
        self.left = style.margin_left
        self.top = style.margin_top
        self.right = style.width - style.margin_right
        self.bottom = style.height - style.margin_bottom
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range

    def x(self, value: float) -> float:
        return self.left + (value - self.x0) / (self.x1 - self.x0) * (self.right - self.left)

    def y(self, value: float) -> float:
        return self.top + (self.y1 - value) / (self.y1 - self.y0) * (self.bottom - self.top)

    def __call__(self, x, y):
        return self.x(x), self.y(y)


def _num(v: float) -> str:
    out = f"{v:.2f}"
    return "0.00" if out == "-0.00" else out


class _Doc:
    def __init__(self, style: StyleConfig):
        self.style = style
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_num(style.width)}" height="{_num(style.height)}" '
            f'viewBox="0 0 {_num(style.width)} {_num(style.height)}">',
        ]
        self.parts.append(
            f'<rect class="background" x="0.00" y="0.00" width="{_num(style.width)}" '
            f'height="{_num(style.height)}" fill="#FFFFFF" stroke="none"/>'
        )

    def add(self, tag, attrs, text=None):
        rendered = []
        for key, value in attrs:
            if isinstance(value, float):
                value = _num(value)
            rendered.append(f"{key}={quoteattr(str(value))}")
        head = f"<{tag} {' '.join(rendered)}"
        if text is None:
            self.parts.append(head + "/>")
        else:
            self.parts.append(f"{head}>{escape(text)}</{tag}>")

    def line(self, cls, x1, y1, x2, y2, color, dashed=False, width=None):
        attrs = [
            ("class", cls),
            ("x1", x1),
            ("y1", y1),
            ("x2", x2),
            ("y2", y2),
            ("stroke", color),
            ("stroke-width", float(width or self.style.line_width)),
        ]
        if dashed:
            attrs.append(("stroke-dasharray", self.style.dash_pattern))
        self.add("line", attrs)

    def text(self, cls, x, y, content, anchor="middle", size=None, rotate=None):
        attrs = [
            ("class", cls),
            ("x", x),
            ("y", y),
            ("font-family", self.style.font_family),
            ("font-size", float(size or self.style.font_size)),
            ("text-anchor", anchor),
        ]
        if rotate is not None:
            attrs.append(("transform", f"rotate({_num(rotate)} {_num(x)} {_num(y)})"))
        self.add("text", attrs, content)

    def polygon(self, cls, pts, fill, stroke):
        coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
        self.add("polygon", [("class", cls), ("points", coords), ("fill", fill), ("stroke", stroke)])

    def finish(self) -> bytes:
        return ("\n".join(self.parts + ["</svg>"]) + "\n").encode("utf-8")


def _frame_box(doc, frame):
    s = doc.style
    doc.add(
        "rect",
        [
            ("class", "frame"),
            ("x", frame.left),
            ("y", frame.top),
            ("width", frame.right - frame.left),
            ("height", frame.bottom - frame.top),
            ("fill", "none"),
            ("stroke", "#000000"),
            ("stroke-width", float(s.line_width)),
        ],
    )


def _x_ticks(doc, frame, ticks, label):
    fs = doc.style.font_size
    for t in ticks:
        px = frame.x(t)
        doc.line("tick", px, frame.bottom, px, frame.bottom + 4, "#000000")
        doc.text("tick-label", px, frame.bottom + 6 + fs, f"{t:g}")
    doc.text("axis-title", (frame.left + frame.right) / 2, frame.bottom + 12 + 2 * fs, label)


def _y_ticks(doc, frame, ticks, label, fmt="{:g}"):
    fs = doc.style.font_size
    for t in ticks:
        py = frame.y(t)
        doc.line("tick", frame.left - 4, py, frame.left, py, "#000000")
        doc.text("tick-label", frame.left - 6, py + fs / 3, fmt.format(t), anchor="end")
    cx = frame.left - 30 - fs
    cy = (frame.top + frame.bottom) / 2
    doc.text("axis-title", cx, cy, label, rotate=-90.0)


def _title(doc, title):
    if title:
        doc.text("title", doc.style.width / 2, doc.style.margin_top / 2, title, size=doc.style.font_size + 2)


def section_label(stats: SectionStats) -> str:
    return f"n_{stats.label} = {stats.count}; {stats.percent}%"


def _section_labels(doc, frame, model, row_centers, col_centers, quadrant_corners):
    fs = doc.style.font_size
    for stats, centre in zip(model.rows, row_centers):
        doc.text("section-label", frame.right + 8, frame.y(centre) + fs / 3, section_label(stats), anchor="start")
    for stats, centre in zip(model.columns, col_centers):
        doc.text("section-label", frame.x(centre), frame.top - 8, section_label(stats))
    for stats in model.quadrants:
        x, y, anchor = quadrant_corners[stats.label]
        doc.text("section-label", x, y, section_label(stats), anchor=anchor)


def _quadrant_corners(frame, fs):
    pad = 4
    return {
        "q1": (frame.right - pad, frame.top + pad + fs, "end"),
        "q2": (frame.left + pad, frame.top + pad + fs, "start"),
        "q3": (frame.left + pad, frame.bottom - pad, "start"),
        "q4": (frame.right - pad, frame.bottom - pad, "end"),
    }


def _circle(doc, cx, cy, top10):
    s = doc.style
    doc.add(
        "circle",
        [
            ("class", "point circle top10" if top10 else "point circle"),
            ("cx", cx),
            ("cy", cy),
            ("r", float(s.marker_size)),
            ("fill", s.unfilled_color if top10 else s.marker_color),
            ("stroke", s.marker_color),
        ],
    )


# ---------------------------------------------------------------- renderers


def render_beamplot(model: BeamplotModel, style: StyleConfig | None = None, title: str | None = None) -> bytes:
    """Years run top to bottom; grey rhombi are values, red triangles year medians."""
    style = style or StyleConfig()
    years = list(model.year_groups)
    first, last = min(years), max(years)
    span = list(range(first, last + 1))
    # Years are laid out as bands; the y "data" coordinate is the band index.
    frame = Frame(style, (0.0, 100.0), (len(span) - 0.5, -0.5))
    doc = _Doc(style)
    _title(doc, title)
    _frame_box(doc, frame)

    def band(year):
        # Frame.y maps y1 (= -0.5) to the top, so index 0 is the top band.
        return frame.y(float(year - first))

    kind = "Paper" if model.metric_kind == "paper" else "Journal"
    _x_ticks(doc, frame, range(0, 101, 10), f"{kind} percentile")
    fs = style.font_size
    for year in span:
        py = band(year)
        doc.text("tick-label", frame.left - 6, py + fs / 3, str(year), anchor="end")
    doc.text("axis-title", frame.left - 50, (frame.top + frame.bottom) / 2, "Publication year", rotate=-90.0)

    ref = frame.x(model.reference_value)
    doc.line("reference-line", ref, frame.top, ref, frame.bottom, style.reference_color)
    for year, group in model.year_groups.items():
        doc.line("beam", frame.left, band(year), frame.right, band(year), "#C8C8C8")

    r = style.marker_size
    for year, group in model.year_groups.items():
        py = band(year)
        for value in group.values:
            px = frame.x(value)
            doc.polygon(
                "point rhombus",
                [(px, py - r), (px + r, py), (px, py + r), (px - r, py)],
                style.point_color,
                style.point_color,
            )
    m = style.median_marker_size
    for year, group in model.year_groups.items():
        px, py = frame.x(group.median), band(year)
        doc.polygon(
            "year-median triangle",
            [(px, py - m), (px + m * 0.866, py + m / 2), (px - m * 0.866, py + m / 2)],
            style.accent_color,
            style.accent_color,
        )
    om = frame.x(model.overall_median)
    doc.line("overall-median", om, frame.top, om, frame.bottom, style.accent_color, dashed=True)
    return doc.finish()


def render_scatter(model: ScatterModel, style: StyleConfig | None = None, title: str | None = None) -> bytes:
    """Paper percentile on x, journal percentile on y."""
    style = style or StyleConfig()
    frame = Frame(style, (0.0, 100.0), (0.0, 100.0))
    doc = _Doc(style)
    _title(doc, title)
    _frame_box(doc, frame)
    ticks = range(0, 101, 10)
    _x_ticks(doc, frame, ticks, "Paper percentile")
    _y_ticks(doc, frame, ticks, "Journal percentile")

    red = style.accent_color
    doc.line("bisecting-line", frame.x(0), frame.y(0), frame.x(100), frame.y(100), red)
    doc.line("world-line", frame.x(model.world_x), frame.top, frame.x(model.world_x), frame.bottom, red)
    doc.line("world-line", frame.left, frame.y(model.world_y), frame.right, frame.y(model.world_y), red)
    doc.line("dataset-median", frame.x(model.median_x), frame.top, frame.x(model.median_x), frame.bottom, red, dashed=True)
    doc.line("dataset-median", frame.left, frame.y(model.median_y), frame.right, frame.y(model.median_y), red, dashed=True)

    for p in model.points:
        _circle(doc, frame.x(p.x), frame.y(p.y), p.top10)

    m = style.median_marker_size
    for q in ("q1", "q2", "q3", "q4"):
        if q not in model.quadrant_medians:
            continue
        mx, my = model.quadrant_medians[q]
        doc.add(
            "rect",
            [
                ("class", "quadrant-median square"),
                ("x", frame.x(mx) - m / 2),
                ("y", frame.y(my) - m / 2),
                ("width", float(m)),
                ("height", float(m)),
                ("fill", red),
                ("stroke", red),
            ],
        )
    _section_labels(doc, frame, model, (75.0, 25.0), (75.0, 25.0), _quadrant_corners(frame, style.font_size))
    return doc.finish()


def render_dam(model: DamModel, style: StyleConfig | None = None, title: str | None = None) -> bytes:
    """Mean of both percentiles on x (0-100), paper minus journal on y (-100-100)."""
    style = style or StyleConfig()
    frame = Frame(style, (0.0, 100.0), (-100.0, 100.0))
    doc = _Doc(style)
    _title(doc, title)
    _frame_box(doc, frame)
    _x_ticks(doc, frame, range(0, 101, 10), "Mean of paper and journal percentile")
    _y_ticks(doc, frame, range(-100, 101, 20), "Paper minus journal percentile")

    # Reachable region: |diff| <= 2 * min(mean, 100 - mean).
    doc.polygon(
        "feasible-region",
        [frame(0, 0), frame(50, 100), frame(100, 0), frame(50, -100)],
        "none",
        "#D9D9D9",
    )
    ref = style.reference_color
    doc.line("reference-line", frame.left, frame.y(model.zero_diff_axis), frame.right, frame.y(model.zero_diff_axis), ref)
    doc.line("reference-line", frame.x(model.mid_mean_axis), frame.top, frame.x(model.mid_mean_axis), frame.bottom, ref)
    red = style.accent_color
    doc.line("dataset-median", frame.left, frame.y(model.median_diff), frame.right, frame.y(model.median_diff), red, dashed=True)
    doc.line("dataset-median", frame.x(model.median_mean), frame.top, frame.x(model.median_mean), frame.bottom, red, dashed=True)

    for p in model.points:
        _circle(doc, frame.x(p.mean), frame.y(p.diff), p.unfilled)

    _section_labels(doc, frame, model, (50.0, -50.0), (75.0, 25.0), _quadrant_corners(frame, style.font_size))
    return doc.finish()
