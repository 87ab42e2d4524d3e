import xml.etree.ElementTree as ET

SVG_NS = "{http://www.w3.org/2000/svg}"


def parse(svg_bytes):
    return ET.fromstring(svg_bytes)


def with_class(root, name):
    return [el for el in root.iter() if name in el.get("class", "").split()]


def texts(root, name="section-label"):
    return [el.text for el in with_class(root, name)]


def polygon_center(el):
    pts = [tuple(map(float, p.split(","))) for p in el.get("points").split()]
    return sum(x for x, _ in pts) / len(pts), sum(y for _, y in pts) / len(pts)
