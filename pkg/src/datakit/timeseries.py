"""Calendar feature extraction and daily aggregation of numeric columns."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .errors import WrongDType
from .feature_engineering import to_date
from .frame import Column, DType, Frame
from .timestamps import SECONDS_PER_DAY, Timestamp, day_of_week, days_from_civil

DATE_PART_SUFFIXES = ("dow", "doy", "dom", "hr", "min", "is_wkd", "yr", "qtr", "mth")


@dataclass(frozen=True)
class DateParts:
    dow: str
    doy: int
    dom: int
    hr: int
    min: int
    is_wkd: int
    yr: int
    qtr: int
    mth: int

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, s) for s in DATE_PART_SUFFIXES)


def date_parts(ts: Timestamp) -> DateParts:
    y, m, d, hh, mm, _ = ts.civil
    dow = day_of_week(ts)
    return DateParts(
        dow=dow,
        doy=days_from_civil(y, m, d) - days_from_civil(y, 1, 1) + 1,
        dom=d,
        hr=hh,
        min=mm,
        is_wkd=int(dow in ("Saturday", "Sunday")),
        yr=y,
        qtr=(m + 2) // 3,
        mth=m,
    )


def _as_datetime(frame: Frame, name: str) -> Column:
    c = frame[name]
    if c.dtype is DType.DATETIME:
        return c
    if c.dtype is not DType.CATEGORICAL:
        raise WrongDType(name, c.dtype, "DateTime")
    conv = to_date(frame, [name])[name]
    if conv.null_count != c.null_count:
        raise WrongDType(name, c.dtype, "DateTime (some values are not timestamps)")
    return conv


def extract_dates(frame: Frame, date_cols: Sequence[str], keep: bool = False) -> Frame:
    """Append ``<col>_dow`` .. ``<col>_mth`` for each date column, dropping the source unless ``keep``."""
    out = frame
    for name in date_cols:
        col = _as_datetime(frame, name)
        parts = [None if v is None else date_parts(v).as_tuple() for v in col.values]
        new = []
        for i, suffix in enumerate(DATE_PART_SUFFIXES):
            dtype = DType.CATEGORICAL if suffix == "dow" else DType.INT
            new.append(Column(f"{name}_{suffix}", dtype, tuple(None if p is None else p[i] for p in parts)))
        cols = [c for c in out.columns if keep or c.name != name]
        out = Frame(tuple(cols) + tuple(new), frame.n_rows)
    return out


@dataclass(frozen=True)
class TimeBucketSeries:
    feature: str
    buckets: list[Timestamp]
    values: list[float]

    def to_dict(self) -> dict:
        return {
            "feature": self.feature,
            "buckets": [b.isoformat() for b in self.buckets],
            "values": list(self.values),
        }


def timebucket_series(frame: Frame, num_cols: Sequence[str], time_col: str) -> list[TimeBucketSeries]:
    """Daily (UTC) mean of each numeric column; days without data are simply absent."""
    tcol = frame[time_col]
    if tcol.dtype is not DType.DATETIME:
        raise WrongDType(time_col, tcol.dtype, "DateTime")
    days = [None if t is None else t.epoch_s // SECONDS_PER_DAY for t in tcol.values]
    out = []
    for name in num_cols:
        c = frame[name]
        if not c.dtype.is_numeric:
            raise WrongDType(name, c.dtype, "Int or Float")
        groups: dict[int, list[float]] = defaultdict(list)
        for day, v in zip(days, c.values):
            if day is not None and v is not None:
                groups[day].append(float(v))
        keys = sorted(groups)
        out.append(TimeBucketSeries(
            name,
            [Timestamp(k * SECONDS_PER_DAY) for k in keys],
            [math.fsum(groups[k]) / len(groups[k]) for k in keys],
        ))
    return out

