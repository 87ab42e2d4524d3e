import pytest

from impactplot.percentiles import PercentilePoint
from impactplot.plots import build_beamplot, build_dam, build_scatter
from impactplot.svg import Frame, StyleConfig, render_beamplot, render_dam, render_scatter
from svgtools import SVG_NS, parse, polygon_center, texts, with_class


def by_year(spec):
    out = []
    for year, values in spec.items():
        for v in values:
            out.append(PercentilePoint(f"{year}-{len(out)}", year, v, 100 - v))
    return out


def test_root_is_svg_1_1():
    root = parse(render_beamplot(build_beamplot(by_year({2010: [30]}))))
    assert root.tag == f"{SVG_NS}svg"
    assert root.get("version") == "1.1"


def test_beamplot_single_value():
    style = StyleConfig()
    root = parse(render_beamplot(build_beamplot(by_year({2010: [30]})), style))
    (rhombus,) = with_class(root, "rhombus")
    (triangle,) = with_class(root, "year-median")
    rx, ry = polygon_center(rhombus)
    # Triangle vertices are not centred on the median; compare the apex x and the vertical band.
    apex = tuple(map(float, triangle.get("points").split()[0].split(",")))
    assert apex[0] == pytest.approx(rx, abs=0.01)
    assert abs(apex[1] + style.median_marker_size - ry) < 0.01


def test_beamplot_marker_counts():
    # Counted from the model: 3 values across 2 years.
    root = parse(render_beamplot(build_beamplot(by_year({2010: [40, 60], 2011: [80]}))))
    assert len(with_class(root, "rhombus")) == 3
    assert len(with_class(root, "point")) == 3
    assert len(with_class(root, "year-median")) == 2
    assert len(with_class(root, "overall-median")) == 1


def test_beamplot_years_top_to_bottom():
    root = parse(render_beamplot(build_beamplot(by_year({2010: [40], 2012: [60]}))))
    centres = sorted(polygon_center(el) for el in with_class(root, "rhombus"))
    # x ascending is 40 then 60, i.e. 2010 then 2012; the earlier year sits higher.
    assert centres[0][1] < centres[1][1]


def test_beamplot_coordinates_affine():
    style = StyleConfig()
    model = build_beamplot(by_year({2010: [0, 25, 100]}))
    root = parse(render_beamplot(model, style))
    frame = Frame(style, (0.0, 100.0), (0.5, -0.5))
    xs = sorted(polygon_center(el)[0] for el in with_class(root, "rhombus"))
    assert xs == pytest.approx([frame.x(0), frame.x(25), frame.x(100)], abs=0.5)


def test_scatter_label_and_squares(r1):
    root = parse(render_scatter(build_scatter(r1.points)))
    assert "n_r1 = 89; 90%" in texts(root)
    assert len(with_class(root, "circle")) == 99
    assert len(with_class(root, "top10")) == 29


def test_scatter_four_squares():
    pts = [PercentilePoint(f"p{i}", 2010, p, j) for i, (p, j) in enumerate([(75, 75), (25, 75), (25, 25), (75, 25)])]
    root = parse(render_scatter(build_scatter(pts)))
    assert len(with_class(root, "quadrant-median")) == 4
    assert len(texts(root)) == 8


def test_scatter_point_coordinates():
    style = StyleConfig()
    root = parse(render_scatter(build_scatter([PercentilePoint("a", 2010, 20.0, 70.0)]), style))
    (c,) = with_class(root, "point")
    frame = Frame(style, (0, 100), (0, 100))
    assert float(c.get("cx")) == pytest.approx(frame.x(20), abs=0.5)
    assert float(c.get("cy")) == pytest.approx(frame.y(70), abs=0.5)


def test_dam_unfilled_circle_position():
    style = StyleConfig()
    root = parse(render_dam(build_dam([PercentilePoint("a", 2010, 90.0, 70.0)]), style))
    (c,) = with_class(root, "point")
    assert "top10" in c.get("class").split()
    assert c.get("fill") == style.unfilled_color
    frame = Frame(style, (0, 100), (-100, 100))
    assert float(c.get("cx")) == pytest.approx(frame.x(80), abs=0.5)
    assert float(c.get("cy")) == pytest.approx(frame.y(20), abs=0.5)


def test_dam_filled_circle():
    style = StyleConfig()
    root = parse(render_dam(build_dam([PercentilePoint("a", 2010, 89.9, 70.0)]), style))
    (c,) = with_class(root, "point")
    assert c.get("fill") == style.marker_color


def test_dam_symmetric_pair_median_on_zero_axis():
    pts = [PercentilePoint("a", 2010, 90.0, 70.0), PercentilePoint("b", 2010, 70.0, 90.0)]
    root = parse(render_dam(build_dam(pts)))
    horizontal = [el for el in with_class(root, "dataset-median") if el.get("y1") == el.get("y2")]
    zero = [el for el in with_class(root, "reference-line") if el.get("y1") == el.get("y2")]
    assert horizontal[0].get("y1") == zero[0].get("y1")


@pytest.mark.parametrize("render, build", [
    (render_beamplot, build_beamplot), (render_scatter, build_scatter), (render_dam, build_dam)
])
def test_determinism(render, build, r1):
    model = build(r1.points)
    style = StyleConfig(width=800, height=600)
    assert render(model, style) == render(model, style)
    assert render(model) == render(build(list(reversed(r1.points))))


def test_title_and_escaping():
    out = render_scatter(build_scatter([PercentilePoint("a", 2010, 1.0, 2.0)]), title="A & B <x>")
    root = parse(out)
    assert texts(root, "title") == ["A & B <x>"]


def test_style_validation():
    with pytest.raises(ValueError):
        StyleConfig(width=0)
    with pytest.raises(ValueError):
        StyleConfig(width=100, margin_left=60, margin_right=60)
    with pytest.raises(ValueError):
        StyleConfig.from_dict({"colour": "red"})
    assert StyleConfig.from_json('{"accent_color": "#FF0000"}').accent_color == "#FF0000"


def test_style_colors_are_used():
    style = StyleConfig(accent_color="#123456")
    out = render_beamplot(build_beamplot(by_year({2010: [40]})), style)
    assert b'fill="#123456"' in out
