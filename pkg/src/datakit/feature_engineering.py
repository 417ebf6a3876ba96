"""Cleaning and preparation: redundant columns, filling, date conversion, encoding."""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import TooManyClasses, WrongDType
from .frame import Column, DType, Frame
from .timestamps import try_parse_timestamp

log = logging.getLogger(__name__)

MAX_ONE_HOT_CLASSES = 1000


def drop_redundant(frame: Frame) -> tuple[Frame, list[str]]:
    """Drop every column with at most one distinct non-null value."""
    dropped = [c.name for c in frame.columns if len(set(c.non_null())) <= 1]
    kept = tuple(c for c in frame.columns if c.name not in dropped)
    return Frame(kept, frame.n_rows), dropped


def format_dropped(dropped: Sequence[str]) -> str:
    return f"Dropped {list(dropped)!r}"


@dataclass(frozen=True)
class FillStrategy:
    numeric: str = "mean"
    categorical: str = "mode"

    def __post_init__(self) -> None:
        if self.numeric not in ("mean", "median"):
            raise ValueError(f"numeric fill must be mean or median, got {self.numeric!r}")
        if self.categorical != "mode":
            raise ValueError(f"categorical fill must be mode, got {self.categorical!r}")


def _round_half_away(x: float) -> int:
    return int(math.floor(abs(x) + 0.5)) * (1 if x >= 0 else -1)


def mode(values: Sequence):
    """Most frequent value; ties go to the smallest class."""
    counts = Counter(values)
    best = max(counts.values())
    return min(v for v, k in counts.items() if k == best)


def fill_value(column: Column, strategy: FillStrategy = FillStrategy()):
    vals = column.non_null()
    if not vals:
        return None
    if column.dtype.is_numeric:
        xs = sorted(float(v) for v in vals)
        if strategy.numeric == "mean":
            v = math.fsum(xs) / len(xs)
        else:
            mid = len(xs) // 2
            v = xs[mid] if len(xs) % 2 else (xs[mid - 1] + xs[mid]) / 2
        return _round_half_away(v) if column.dtype is DType.INT else v
    if column.dtype is DType.DATETIME:
        return None
    return mode(vals)


def fill_missing(frame: Frame, strategy: FillStrategy = FillStrategy()) -> Frame:
    """Replace nulls by mean/median (numeric) or mode (categorical and Bool).

    DateTime columns are left alone, as are columns with no non-null value
    (those are logged as a warning).
    """
    out = frame
    for c in frame.columns:
        if c.null_count == 0 or c.dtype is DType.DATETIME:
            continue
        v = fill_value(c, strategy)
        if v is None:
            log.warning("cannot fill %r: no non-null values", c.name)
            continue
        out = out.with_column(Column(c.name, c.dtype, tuple(v if x is None else x for x in c.values)))
    return out


def to_date(frame: Frame, cols: Sequence[str]) -> Frame:
    out = frame
    for name in cols:
        c = frame[name]
        if c.dtype is DType.DATETIME:
            continue
        if c.dtype is not DType.CATEGORICAL:
            raise WrongDType(name, c.dtype, "Categorical")
        vals = tuple(None if v is None else try_parse_timestamp(v) for v in c.values)
        out = out.with_column(Column(name, DType.DATETIME, vals))
    return out


# -- encoding ------------------------------------------------------------------


def class_label(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _check_encodable(c: Column) -> None:
    if c.dtype not in (DType.CATEGORICAL, DType.BOOL):
        raise WrongDType(c.name, c.dtype, "Categorical")


def fit_classes(column: Column) -> list[str]:
    """Class labels in lexicographic order; this order defines the encoding."""
    _check_encodable(column)
    return sorted({class_label(v) for v in column.non_null()})


def label_encode(column: Column, classes: Sequence[str], unknown: int | None = None) -> Column:
    """Map classes to 0..k-1 by position in ``classes``; nulls stay null.

    Labels missing from ``classes`` become ``unknown`` (null by default).
    """
    lookup = {c: i for i, c in enumerate(classes)}
    vals = tuple(None if v is None else lookup.get(class_label(v), unknown) for v in column.values)
    return Column(column.name, DType.INT, vals)


def label_decode(column: Column, classes: Sequence[str]) -> Column:
    vals = tuple(None if v is None else classes[v] for v in column.values)
    return Column(column.name, DType.CATEGORICAL, vals)


def one_hot(column: Column, classes: Sequence[str]) -> list[Column]:
    labels = [None if v is None else class_label(v) for v in column.values]
    return [
        Column(f"{column.name}_{cls}", DType.INT, tuple(int(lab == cls) for lab in labels))
        for cls in classes
    ]


def encode_categorical(frame: Frame, cols: Sequence[str], method: str = "label") -> Frame:
    if method not in ("label", "one_hot"):
        raise ValueError(f"unknown encoding {method!r}")
    out = frame
    for name in cols:
        c = frame[name]
        classes = fit_classes(c)
        if method == "label":
            out = out.with_column(label_encode(c, classes))
        else:
            if len(classes) > MAX_ONE_HOT_CLASSES:
                raise TooManyClasses(name, len(classes))
            out = out.replace_column(name, one_hot(c, classes))
    return out
