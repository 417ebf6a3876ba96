"""Minimal deterministic SVG 1.1 rendering of a PlotSpec."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .specs import PlotSpec
from ..timestamps import parse_timestamp

SVG_NS = "http://www.w3.org/2000/svg"
MARGIN = {"left": 64, "right": 20, "top": 40, "bottom": 56}
PALETTE = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3", "#8c8c8c")


def fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def tick_label(x: float) -> str:
    return format(round(x, 10), "g")


def nice_ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    if hi <= lo:
        lo, hi = lo - 0.5, hi + 0.5
    raw = (hi - lo) / target
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.floor(lo / step)
    stop = math.ceil(hi / step)
    return [i * step for i in range(start, stop + 1)]


class _Canvas:
    def __init__(self, spec: PlotSpec):
        self.spec = spec
        self.root = ET.Element("svg", {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(spec.width),
            "height": str(spec.height),
            "viewBox": f"0 0 {spec.width} {spec.height}",
        })
        self.x0 = MARGIN["left"]
        self.x1 = max(self.x0 + 1, spec.width - MARGIN["right"])
        self.y0 = max(MARGIN["top"] + 1, spec.height - MARGIN["bottom"])  # baseline (pixel y of lowest value)
        self.y1 = MARGIN["top"]
        ET.SubElement(self.root, "rect", {"x": "0", "y": "0", "width": str(spec.width),
                                          "height": str(spec.height), "fill": "white"})
        self.text(spec.width / 2, MARGIN["top"] / 2 + 4, spec.title, size=14, cls="title")
        self.text((self.x0 + self.x1) / 2, spec.height - 8, spec.x_label, cls="x-label")
        lab = self.text(14, (self.y0 + self.y1) / 2, spec.y_label, cls="y-label")
        lab.set("transform", f"rotate(-90 14 {fmt((self.y0 + self.y1) / 2)})")

    def el(self, tag: str, **attrs) -> ET.Element:
        return ET.SubElement(self.root, tag, {k.rstrip("_").replace("_", "-"): str(v) for k, v in attrs.items()})

    def text(self, x: float, y: float, s: str, size: int = 10, anchor: str = "middle", cls: str = "") -> ET.Element:
        t = self.el("text", x=fmt(x), y=fmt(y), font_size=size, text_anchor=anchor, font_family="sans-serif")
        if cls:
            t.set("class", cls)
        t.text = str(s)
        return t

    def line(self, x1, y1, x2, y2, cls: str = "", stroke: str = "black") -> ET.Element:
        ln = self.el("line", x1=fmt(x1), y1=fmt(y1), x2=fmt(x2), y2=fmt(y2), stroke=stroke)
        if cls:
            ln.set("class", cls)
        return ln

    def rect(self, x, y, w, h, fill: str, cls: str) -> ET.Element:
        return self.el("rect", x=fmt(x), y=fmt(y), width=fmt(w), height=fmt(h), fill=fill, class_=cls)

    def y_axis(self, lo: float, hi: float) -> tuple[float, float]:
        ticks = nice_ticks(lo, hi)
        lo, hi = ticks[0], ticks[-1]
        self.ylo, self.yhi = lo, hi
        self.line(self.x0, self.y0, self.x0, self.y1, cls="axis")
        for t in ticks:
            py = self.py(t)
            self.line(self.x0 - 4, py, self.x0, py, cls="tick")
            self.text(self.x0 - 6, py + 3, tick_label(t), anchor="end", cls="tick-label")
        return lo, hi

    def x_axis(self) -> None:
        self.line(self.x0, self.y0, self.x1, self.y0, cls="axis")

    def py(self, v: float) -> float:
        return self.y0 - (v - self.ylo) / (self.yhi - self.ylo) * (self.y0 - self.y1)

    def tostring(self) -> str:
        ET.indent(self.root)
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(self.root, encoding="unicode") + "\n"


def _bars(c: _Canvas, labels, heights) -> None:
    c.y_axis(0.0, max(heights, default=0.0) or 1.0)
    c.x_axis()
    n = max(len(labels), 1)
    slot = (c.x1 - c.x0) / n
    for i, (lab, h) in enumerate(zip(labels, heights)):
        x = c.x0 + i * slot + slot * 0.1
        top = c.py(h)
        c.rect(x, top, slot * 0.8, c.y0 - top, PALETTE[0], "bar")
        cx = c.x0 + (i + 0.5) * slot
        c.line(cx, c.y0, cx, c.y0 + 4, cls="tick")
        c.text(cx, c.y0 + 16, lab, size=9, cls="tick-label")


def _grouped(c: _Canvas, s: dict) -> None:
    heights = s["heights"]
    c.y_axis(0.0, max((h for row in heights for h in row), default=0) or 1.0)
    c.x_axis()
    k = max(len(s["keys"]), 1)
    slot = (c.x1 - c.x0) / max(len(s["groups"]), 1)
    for i, (g, row) in enumerate(zip(s["groups"], heights)):
        bw = slot * 0.8 / k
        for j, h in enumerate(row):
            x = c.x0 + i * slot + slot * 0.1 + j * bw
            top = c.py(h)
            c.rect(x, top, bw, c.y0 - top, PALETTE[j % len(PALETTE)], "bar")
        c.text(c.x0 + (i + 0.5) * slot, c.y0 + 16, g, size=9, cls="tick-label")
    for j, key in enumerate(s["keys"]):
        y = c.y1 + 4 + 12 * j
        c.rect(c.x1 - 60, y, 8, 8, PALETTE[j % len(PALETTE)], "legend")
        c.text(c.x1 - 48, y + 8, key, size=9, anchor="start", cls="legend-label")


def _histogram(c: _Canvas, s: dict) -> None:
    edges, counts = s["edges"], s["counts"]
    c.y_axis(0.0, max(counts) or 1.0)
    c.x_axis()
    lo, hi = edges[0], edges[-1]

    def px(v):
        return c.x0 + (v - lo) / (hi - lo) * (c.x1 - c.x0)

    for a, b, n in zip(edges, edges[1:], counts):
        top = c.py(n)
        c.rect(px(a), top, px(b) - px(a), c.y0 - top, PALETTE[0], "bar")
    for e in edges:
        c.line(px(e), c.y0, px(e), c.y0 + 4, cls="tick")
        c.text(px(e), c.y0 + 16, tick_label(e), size=9, cls="tick-label")


def _box(c: _Canvas, s: dict) -> None:
    vals = [s["whisker_low"], s["whisker_high"], s["q25"], s["q75"], *s["outliers"]]
    c.y_axis(min(vals), max(vals))
    cx = (c.x0 + c.x1) / 2
    half = (c.x1 - c.x0) / 6
    top, bottom = c.py(s["q75"]), c.py(s["q25"])
    c.line(cx, c.py(s["whisker_low"]), cx, bottom, cls="whisker")
    c.line(cx, top, cx, c.py(s["whisker_high"]), cls="whisker")
    for w in ("whisker_low", "whisker_high"):
        c.line(cx - half / 2, c.py(s[w]), cx + half / 2, c.py(s[w]), cls="whisker-cap")
    c.rect(cx - half, top, 2 * half, bottom - top, PALETTE[0], "box")
    c.line(cx - half, c.py(s["q50"]), cx + half, c.py(s["q50"]), cls="median", stroke="white")
    for o in s["outliers"]:
        c.el("circle", cx=fmt(cx), cy=fmt(c.py(o)), r=3, fill="none", stroke="black", class_="outlier")


def _line(c: _Canvas, s: dict) -> None:
    days = [parse_timestamp(x).days_from_epoch for x in s["x"]]
    ys = s["y"]
    c.y_axis(min(ys), max(ys))
    c.x_axis()
    d0, d1 = days[0], days[-1]
    span = (d1 - d0) or 1

    def px(d):
        return c.x0 + (d - d0) / span * (c.x1 - c.x0) if d1 > d0 else (c.x0 + c.x1) / 2

    pts = " ".join(f"{fmt(px(d))},{fmt(c.py(y))}" for d, y in zip(days, ys))
    c.el("polyline", points=pts, fill="none", stroke=PALETTE[0], class_="series")
    for d, y in zip(days, ys):
        c.el("circle", cx=fmt(px(d)), cy=fmt(c.py(y)), r=2, fill=PALETTE[0], class_="point")
    for i in sorted({0, len(days) - 1}):
        c.text(px(days[i]), c.y0 + 16, s["x"][i][:10], size=9, cls="tick-label")


def _heatmap(c: _Canvas, s: dict) -> None:
    cells = s["cells"]
    peak = max((v for row in cells for v in row), default=0) or 1
    nr, nc = len(s["rows"]), len(s["cols"])
    cw, ch = (c.x1 - c.x0) / nc, (c.y0 - c.y1) / nr
    for i, row in enumerate(cells):
        for j, v in enumerate(row):
            shade = int(round(255 - 200 * v / peak))
            x, y = c.x0 + j * cw, c.y1 + i * ch
            c.rect(x, y, cw, ch, f"rgb({shade},{shade},255)", "cell")
            c.text(x + cw / 2, y + ch / 2 + 4, str(v), size=12, cls="cell-label")
    for j, lab in enumerate(s["cols"]):
        c.text(c.x0 + (j + 0.5) * cw, c.y0 + 16, lab, cls="tick-label")
    for i, lab in enumerate(s["rows"]):
        c.text(c.x0 - 6, c.y1 + (i + 0.5) * ch + 3, lab, anchor="end", cls="tick-label")


def render_svg(spec: PlotSpec) -> str:
    c = _Canvas(spec)
    s = spec.series
    if spec.kind == "count_bar":
        _bars(c, s["labels"], s["heights"])
    elif spec.kind == "grouped_bar":
        _grouped(c, s)
    elif spec.kind == "histogram":
        _histogram(c, s)
    elif spec.kind == "box":
        _box(c, s)
    elif spec.kind == "line":
        _line(c, s)
    else:
        _heatmap(c, s)
    return c.tostring()
