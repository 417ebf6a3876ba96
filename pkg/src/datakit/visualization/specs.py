"""Renderer-independent chart descriptions.

Every number a chart shows is computed here, so charts can be tested without
producing an image. ``fig_size`` is in abstract units of 100 px.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import EmptyColumn, UnknownColumn, WrongDType
from ..feature_engineering import class_label
from ..frame import Column, DType, Frame
from ..structdata import classify_features, quantile
from ..timeseries import TimeBucketSeries

PX_PER_UNIT = 100
MAX_BAR_CLASSES = 30
MAX_TARGET_CLASSES = 10
KINDS = ("count_bar", "grouped_bar", "histogram", "box", "line", "heatmap")


@dataclass(frozen=True)
class PlotSpec:
    kind: str
    title: str
    width: int
    height: int
    x_label: str
    y_label: str
    series: dict = field(default_factory=dict)
    column: str = ""  # used for output file names only

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown plot kind {self.kind!r}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")
        if self.kind == "histogram":
            e = self.series["edges"]
            if any(b <= a for a, b in zip(e, e[1:])):
                raise ValueError("histogram edges must be strictly increasing")
        if self.kind == "count_bar" and any(h < 0 for h in self.series["heights"]):
            raise ValueError("bar heights must be >= 0")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "title": self.title,
            "width": self.width,
            "height": self.height,
            "x_label": self.x_label,
            "y_label": self.y_label,
            "series": self.series,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def fig_px(fig_size: tuple[float, float]) -> tuple[int, int]:
    w, h = fig_size
    return int(round(w * PX_PER_UNIT)), int(round(h * PX_PER_UNIT))


def _class_counts(values) -> list[tuple[str, int]]:
    counts = Counter(class_label(v) for v in values if v is not None)
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


def _is_categorical(c: Column) -> bool:
    return c.dtype in (DType.CATEGORICAL, DType.BOOL)


def _n_classes(c: Column) -> int:
    return len(set(c.non_null()))


# -- categorical ---------------------------------------------------------------


def countplot_spec(frame: Frame, cat_cols: Sequence[str] | None = None,
                   fig_size: tuple[float, float] = (5, 5)) -> list[PlotSpec]:
    """One bar chart of class sizes per categorical column, largest class first."""
    if cat_cols is None:
        cat_cols = [n for n in classify_features(frame).categorical
                    if 0 < _n_classes(frame[n]) <= MAX_BAR_CLASSES]
    w, h = fig_px(fig_size)
    specs = []
    for name in cat_cols:
        c = frame[name]
        if not _is_categorical(c):
            raise WrongDType(name, c.dtype, "Categorical")
        bars = _class_counts(c.values)
        specs.append(PlotSpec(
            "count_bar", name, w, h, name, "count",
            {"labels": [b[0] for b in bars], "heights": [b[1] for b in bars]},
            column=name,
        ))
    return specs


def _target_classes(c: Column) -> list:
    return sorted(set(c.non_null()), key=lambda v: (0, v, "") if isinstance(v, (int, float)) else (1, 0, str(v)))


def catbox_spec(frame: Frame, target: str, fig_size: tuple[float, float] = (5, 5)) -> list[PlotSpec]:
    """Per categorical feature, class counts split by the classes of ``target``."""
    t = frame[target]
    if not (_is_categorical(t) or (t.dtype is DType.INT and _n_classes(t) <= MAX_TARGET_CLASSES)):
        raise WrongDType(target, t.dtype, f"Categorical or Int with <= {MAX_TARGET_CLASSES} classes")
    keys = [class_label(v) for v in _target_classes(t)]
    tlabels = [None if v is None else class_label(v) for v in t.values]
    w, h = fig_px(fig_size)
    specs = []
    for name in classify_features(frame).categorical:
        if name == target:
            continue
        c = frame[name]
        if not 0 < _n_classes(c) <= MAX_BAR_CLASSES:
            continue
        pairs = Counter(
            (class_label(v), tl) for v, tl in zip(c.values, tlabels) if v is not None and tl is not None
        )
        groups = [g for g, _ in _class_counts(v for v, tl in zip(c.values, tlabels) if tl is not None)]
        heights = [[pairs.get((g, k), 0) for k in keys] for g in groups]
        specs.append(PlotSpec(
            "grouped_bar", f"{name} by {target}", w, h, name, "count",
            {"groups": groups, "keys": keys, "heights": heights},
            column=name,
        ))
    return specs


# -- numeric -------------------------------------------------------------------


def histogram_bins(values: Sequence[float], bins: int) -> tuple[list[float], list[int]]:
    """Equal-width bins over [min, max]; the last bin is closed on the right.

    A constant sample gets a single unit-wide bin centred on the value.
    """
    if bins < 1:
        raise ValueError("bins must be >= 1")
    xs = [float(v) for v in values]
    if not xs:
        raise EmptyColumn()
    lo, hi = min(xs), max(xs)
    if lo == hi:
        return [lo - 0.5, lo + 0.5], [len(xs)]
    width = (hi - lo) / bins
    edges = [lo + i * width for i in range(bins)] + [hi]
    counts = [0] * bins
    for x in xs:
        counts[min(bisect_right(edges, x) - 1, bins - 1)] += 1
    return edges, counts


def histogram_spec(frame: Frame, num_cols: Sequence[str] | None = None, bins: int = 5,
                   fig_size: tuple[float, float] = (5, 5)) -> list[PlotSpec]:
    explicit = num_cols is not None
    if num_cols is None:
        num_cols = classify_features(frame).numerical
    w, h = fig_px(fig_size)
    specs = []
    for name in num_cols:
        c = frame[name]
        if not c.dtype.is_numeric:
            raise WrongDType(name, c.dtype, "Int or Float")
        vals = c.non_null()
        if not vals:
            if explicit:
                raise EmptyColumn(name)
            continue
        edges, counts = histogram_bins(vals, bins)
        specs.append(PlotSpec("histogram", name, w, h, name, "count",
                              {"edges": edges, "counts": counts}, column=name))
    return specs


@dataclass(frozen=True)
class BoxStats:
    q25: float
    q50: float
    q75: float
    whisker_low: float
    whisker_high: float
    outliers: list[float]

    def to_dict(self) -> dict:
        return {
            "q25": self.q25,
            "q50": self.q50,
            "q75": self.q75,
            "whisker_low": self.whisker_low,
            "whisker_high": self.whisker_high,
            "outliers": list(self.outliers),
        }


def box_stats(values: Sequence[float]) -> BoxStats:
    xs = sorted(float(v) for v in values)
    if not xs:
        raise EmptyColumn()
    q25, q50, q75 = (quantile(xs, p) for p in (0.25, 0.5, 0.75))
    iqr = q75 - q25
    lo_fence, hi_fence = q25 - 1.5 * iqr, q75 + 1.5 * iqr
    inside = [x for x in xs if lo_fence <= x <= hi_fence]
    return BoxStats(
        q25, q50, q75,
        whisker_low=inside[0],
        whisker_high=inside[-1],
        outliers=[x for x in xs if x < lo_fence or x > hi_fence],
    )


def boxplot_spec(column: Column, fig_size: tuple[float, float] = (5, 5)) -> PlotSpec:
    if not column.dtype.is_numeric:
        raise WrongDType(column.name, column.dtype, "Int or Float")
    vals = column.non_null()
    if not vals:
        raise EmptyColumn(column.name)
    w, h = fig_px(fig_size)
    return PlotSpec("box", column.name, w, h, column.name, "value",
                    box_stats(vals).to_dict(), column=column.name)


def timeplot_spec(series: Sequence[TimeBucketSeries], fig_size: tuple[float, float] = (10, 4)) -> list[PlotSpec]:
    if not series:
        raise ValueError("timeplot needs at least one series")
    w, h = fig_px(fig_size)
    return [
        PlotSpec("line", f"{s.feature} over time", w, h, "date", s.feature,
                 {"x": [b.isoformat() for b in s.buckets], "y": list(s.values)}, column=s.feature)
        for s in series
    ]


# -- model outputs -------------------------------------------------------------


def importance_spec(report, fig_size: tuple[float, float] = (6, 5)) -> PlotSpec:
    """Bar chart of permutation importances; negative drops are drawn as zero-height bars."""
    w, h = fig_px(fig_size)
    return PlotSpec(
        "count_bar", f"permutation importance ({report.metric})", w, h, "feature", "importance",
        {
            "labels": [e.name for e in report.entries],
            "heights": [max(0.0, e.importance) for e in report.entries],
            "values": [e.importance for e in report.entries],
        },
        column="importance",
    )


def confusion_spec(report, fig_size: tuple[float, float] = (4, 4)) -> PlotSpec:
    w, h = fig_px(fig_size)
    return PlotSpec(
        "heatmap", "confusion matrix", w, h, "predicted", "actual",
        {"rows": ["negative", "positive"], "cols": ["negative", "positive"],
         "cells": [list(r) for r in report.confusion]},
        column="confusion",
    )


def require_columns(frame: Frame, names: Sequence[str]) -> None:
    for n in names:
        if n not in frame:
            raise UnknownColumn(n)

