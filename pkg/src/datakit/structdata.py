"""Dataset profiling: summary statistics, feature classes, missing/unique reports, describe."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from .errors import EmptyColumn, WrongDType
from .frame import Column, DType, Frame, row_indices
from .timestamps import Timestamp, try_parse_timestamp

DATE_SAMPLE = 1000


@dataclass(frozen=True)
class StatSummary:
    count: int
    mean: float | None
    std: float | None
    min: float | None
    q25: float | None
    q50: float | None
    q75: float | None
    max: float | None

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("count", "mean", "std", "min", "q25", "q50", "q75", "max")}


def quantile(sorted_values, p: float) -> float:
    """Linear interpolation at fractional rank ``p * (n - 1)`` of a sorted sample."""
    n = len(sorted_values)
    if n == 0:
        raise EmptyColumn()
    pos = p * (n - 1)
    lo = math.floor(pos)
    if lo >= n - 1:
        return float(sorted_values[-1])
    frac = pos - lo
    a = float(sorted_values[lo])
    b = float(sorted_values[lo + 1])
    return a + frac * (b - a) if frac else a


def summary_stats(column: Column) -> StatSummary:
    if not column.dtype.is_numeric:
        raise WrongDType(column.name, column.dtype, "Int or Float")
    vals = sorted(float(v) for v in column.values if v is not None)
    n = len(vals)
    if n == 0:
        raise EmptyColumn(column.name)
    # fsum is exactly rounded, so row order cannot change the result
    mean = math.fsum(vals) / n
    std = math.sqrt(math.fsum((v - mean) ** 2 for v in vals) / (n - 1)) if n >= 2 else None
    return StatSummary(
        count=n,
        mean=mean,
        std=std,
        min=vals[0],
        q25=quantile(vals, 0.25),
        q50=quantile(vals, 0.5),
        q75=quantile(vals, 0.75),
        max=vals[-1],
    )


def _empty_summary() -> StatSummary:
    return StatSummary(0, None, None, None, None, None, None, None)


@dataclass(frozen=True)
class FeatureClasses:
    numerical: list[str]
    categorical: list[str]
    datetime: list[str]
    date_candidates: list[str]

    def to_dict(self) -> dict:
        return {
            "numerical": list(self.numerical),
            "categorical": list(self.categorical),
            "datetime": list(self.datetime),
            "date_candidates": list(self.date_candidates),
        }


def looks_like_dates(column: Column, sample: int = DATE_SAMPLE) -> bool:
    if column.dtype is not DType.CATEGORICAL:
        return False
    vals = []
    for v in column.values:
        if v is not None:
            vals.append(v)
            if len(vals) >= sample:
                break
    if not vals:
        return False
    ok = sum(try_parse_timestamp(v) is not None for v in vals)
    return 20 * ok >= 19 * len(vals)


def classify_features(frame: Frame) -> FeatureClasses:
    num, cat, dt, cand = [], [], [], []
    for c in frame.columns:
        if c.dtype.is_numeric:
            num.append(c.name)
        elif c.dtype is DType.DATETIME:
            dt.append(c.name)
        else:
            cat.append(c.name)
            if looks_like_dates(c):
                cand.append(c.name)
    return FeatureClasses(num, cat, dt, cand)


def get_num_feats(frame: Frame) -> list[str]:
    return classify_features(frame).numerical


def get_cat_feats(frame: Frame) -> list[str]:
    return classify_features(frame).categorical


@dataclass(frozen=True)
class UniqueReport:
    rows: list[tuple[str, int]]

    def to_list(self) -> list[dict]:
        return [{"feature": f, "unique_count": k} for f, k in self.rows]


@dataclass(frozen=True)
class MissingReport:
    rows: list[tuple[str, int, float]]

    def to_list(self) -> list[dict]:
        return [{"feature": f, "missing_count": k, "missing_percent": p} for f, k, p in self.rows]

    def counts(self) -> dict[str, int]:
        return {f: k for f, k, _ in self.rows}


def unique_counts(frame: Frame) -> UniqueReport:
    cats = classify_features(frame).categorical
    return UniqueReport([(n, len(set(frame[n].non_null()))) for n in cats])


def missing_report(frame: Frame) -> MissingReport:
    n = frame.n_rows
    rows = []
    for c in frame.columns:
        k = c.null_count
        rows.append((c.name, k, 100.0 * k / n if n else 0.0))
    return MissingReport(rows)


@dataclass(frozen=True)
class RowSample:
    """A slice of the frame together with the original row positions."""

    index: list[int]
    frame: Frame

    def to_dict(self) -> dict:
        return {
            "index": list(self.index),
            "columns": self.frame.names,
            "data": [[cell_to_json(v) for v in row] for row in self.frame.rows()],
        }


@dataclass(frozen=True)
class DescribeReport:
    head: RowSample
    tail: RowSample
    random: RowSample
    shape: tuple[int, int]
    dtypes: dict[str, DType]
    classes: FeatureClasses
    numeric_stats: dict[str, StatSummary]
    unique: UniqueReport
    missing: MissingReport
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "head": self.head.to_dict(),
            "tail": self.tail.to_dict(),
            "random": self.random.to_dict(),
            "shape": list(self.shape),
            "dtypes": {k: str(v) for k, v in self.dtypes.items()},
            "classes": self.classes.to_dict(),
            "numeric_stats": {k: s.to_dict() for k, s in self.numeric_stats.items()},
            "unique": self.unique.to_list(),
            "missing": self.missing.to_list(),
            "notes": list(self.notes),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_markdown(self) -> str:
        return describe_markdown(self)


def cell_to_json(v: Any) -> Any:
    if isinstance(v, Timestamp):
        return v.isoformat()
    return v


def date_note(name: str) -> str:
    return f"Column {name!r} holds timestamp-like text; convert it with feature_engineering.to_date"


def describe(frame: Frame, seed: int = 0, k: int = 5) -> DescribeReport:
    def sample(mode: str) -> RowSample:
        idx = row_indices(frame.n_rows, mode, k, seed)
        return RowSample(idx, frame.take(idx))

    classes = classify_features(frame)
    stats = {}
    for name in classes.numerical:
        col = frame[name]
        stats[name] = summary_stats(col) if col.null_count < len(col) else _empty_summary()
    return DescribeReport(
        head=sample("head"),
        tail=sample("tail"),
        random=sample("sample"),
        shape=frame.shape,
        dtypes=frame.dtypes,
        classes=classes,
        numeric_stats=stats,
        unique=UniqueReport([(n, len(set(frame[n].non_null()))) for n in classes.categorical]),
        missing=missing_report(frame),
        notes=[date_note(n) for n in classes.date_candidates],
    )


# -- markdown ------------------------------------------------------------------


def _md_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(cell_to_json(v)).replace("|", "\\|")


def _md_table(header: list[str], rows: list[list]) -> str:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(_md_cell(v) for v in r) + " |" for r in rows]
    return "\n".join(out)


def _md_sample(s: RowSample) -> str:
    rows = [[i, *row] for i, row in zip(s.index, s.frame.rows())]
    return _md_table(["", *s.frame.names], rows)


def describe_markdown(rep: DescribeReport) -> str:
    stat_keys = [("count", "count"), ("mean", "mean"), ("std", "std"), ("min", "min"),
                 ("25%", "q25"), ("50%", "q50"), ("75%", "q75"), ("max", "max")]
    parts = [
        "## First rows", _md_sample(rep.head),
        "## Last rows", _md_sample(rep.tail),
        "## Random rows", _md_sample(rep.random),
        "## Shape", f"{rep.shape[0]} rows x {rep.shape[1]} columns",
    ]
    if rep.notes:
        parts += ["## Notes", "\n".join(f"- {n}" for n in rep.notes)]
    parts += [
        "## Numerical features", ", ".join(rep.classes.numerical) or "(none)",
        "## Categorical features", ", ".join(rep.classes.categorical) or "(none)",
        "## Date features", ", ".join(rep.classes.datetime) or "(none)",
    ]
    if rep.numeric_stats:
        names = list(rep.numeric_stats)
        rows = [[label, *(getattr(rep.numeric_stats[n], key) for n in names)] for label, key in stat_keys]
        parts += ["## Summary statistics", _md_table(["", *names], rows)]
    parts += [
        "## Data types", _md_table(["column", "dtype"], [[k, str(v)] for k, v in rep.dtypes.items()]),
        "## Missing values", _md_table(["feature", "missing_count", "missing_percent"],
                                       [list(r) for r in rep.missing.rows]),
        "## Unique classes", _md_table(["feature", "unique_count"], [list(r) for r in rep.unique.rows]),
    ]
    return "\n\n".join(parts) + "\n"
