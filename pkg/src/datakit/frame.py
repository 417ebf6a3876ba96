"""Immutable columnar frames.

A cell is ``None`` when null; otherwise it holds a value from its column's
domain: ``int`` for Int, finite ``float`` for Float, ``bool`` for Bool,
``str`` for Categorical and :class:`~datakit.timestamps.Timestamp` for DateTime.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .errors import DuplicateColumn, SchemaError, UnknownColumn
from .rng import SplitMix64, permutation
from .timestamps import Timestamp

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class DType(enum.Enum):
    INT = "Int"
    FLOAT = "Float"
    BOOL = "Bool"
    CATEGORICAL = "Categorical"
    DATETIME = "DateTime"

    @property
    def is_numeric(self) -> bool:
        return self in (DType.INT, DType.FLOAT)

    def __str__(self) -> str:
        return self.value


def _coerce(dtype: DType, v: Any) -> Any:
    if v is None:
        return None
    if dtype is DType.INT:
        if isinstance(v, bool) or not isinstance(v, int):
            if isinstance(v, float) and v.is_integer():
                v = int(v)
            else:
                raise SchemaError(f"value {v!r} is not an Int")
        if not INT64_MIN <= v <= INT64_MAX:
            raise SchemaError(f"value {v!r} overflows Int")
        return v
    if dtype is DType.FLOAT:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise SchemaError(f"value {v!r} is not a Float")
        v = float(v)
        return v if math.isfinite(v) else None
    if dtype is DType.BOOL:
        if not isinstance(v, bool):
            raise SchemaError(f"value {v!r} is not a Bool")
        return v
    if dtype is DType.DATETIME:
        if not isinstance(v, Timestamp):
            raise SchemaError(f"value {v!r} is not a Timestamp")
        return v
    if not isinstance(v, str):
        raise SchemaError(f"value {v!r} is not a str")
    return v


@dataclass(frozen=True)
class Column:
    name: str
    dtype: DType
    values: tuple

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaError("column name must be non-empty")
        object.__setattr__(self, "values", tuple(_coerce(self.dtype, v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def null_mask(self) -> tuple[bool, ...]:
        return tuple(v is None for v in self.values)

    @property
    def null_count(self) -> int:
        return sum(v is None for v in self.values)

    def non_null(self) -> list:
        return [v for v in self.values if v is not None]

    def take(self, indices: Sequence[int]) -> "Column":
        vals = self.values
        return Column(self.name, self.dtype, tuple(vals[i] for i in indices))

    def rename(self, name: str) -> "Column":
        return Column(name, self.dtype, self.values)


@dataclass(frozen=True)
class Frame:
    columns: tuple[Column, ...]
    n_rows: int = field(default=-1)

    def __post_init__(self) -> None:
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        n = self.n_rows
        if n < 0:
            n = len(cols[0]) if cols else 0
            object.__setattr__(self, "n_rows", n)
        seen = set()
        for c in cols:
            if c.name in seen:
                raise DuplicateColumn(c.name)
            seen.add(c.name)
            if len(c) != n:
                raise SchemaError(f"column {c.name!r} has {len(c)} rows, frame has {n}")

    @classmethod
    def from_dict(cls, data: Mapping[str, Iterable], dtypes: Mapping[str, DType] | None = None) -> "Frame":
        """Build a frame from ``{name: values}``; dtypes are guessed from Python types if absent."""
        dtypes = dict(dtypes or {})
        cols = []
        for name, values in data.items():
            values = tuple(values)
            dtype = dtypes.get(name) or _guess_dtype(values)
            cols.append(Column(name, dtype, values))
        return cls(tuple(cols))

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, len(self.columns)

    @property
    def dtypes(self) -> dict[str, DType]:
        return {c.name: c.dtype for c in self.columns}

    def __contains__(self, name: object) -> bool:
        return any(c.name == name for c in self.columns)

    def __getitem__(self, name: str) -> Column:
        for c in self.columns:
            if c.name == name:
                return c
        raise UnknownColumn(name)

    def __iter__(self) -> Iterator[Column]:
        return iter(self.columns)

    def index_of(self, name: str) -> int:
        for i, c in enumerate(self.columns):
            if c.name == name:
                return i
        raise UnknownColumn(name)

    def rows(self) -> Iterator[tuple]:
        return zip(*(c.values for c in self.columns)) if self.columns else iter(())

    def take(self, indices: Sequence[int]) -> "Frame":
        indices = list(indices)
        return Frame(tuple(c.take(indices) for c in self.columns), len(indices))

    def with_column(self, col: Column, *, at: int | None = None) -> "Frame":
        """Replace a same-named column in place, or insert/append it."""
        cols = list(self.columns)
        for i, c in enumerate(cols):
            if c.name == col.name:
                cols[i] = col
                return Frame(tuple(cols), self.n_rows)
        cols.insert(len(cols) if at is None else at, col)
        return Frame(tuple(cols), self.n_rows)

    def replace_column(self, name: str, new: Sequence[Column]) -> "Frame":
        """Swap column ``name`` for zero or more columns at the same position."""
        i = self.index_of(name)
        cols = list(self.columns)
        cols[i:i + 1] = list(new)
        return Frame(tuple(cols), self.n_rows)

    def select(self, names: Sequence[str]) -> "Frame":
        return Frame(tuple(self[n] for n in names), self.n_rows)


def _guess_dtype(values: Sequence) -> DType:
    present = [v for v in values if v is not None]
    if not present:
        return DType.CATEGORICAL
    if all(isinstance(v, bool) for v in present):
        return DType.BOOL
    if all(isinstance(v, int) and not isinstance(v, bool) for v in present):
        return DType.INT
    if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in present):
        return DType.FLOAT
    if all(isinstance(v, Timestamp) for v in present):
        return DType.DATETIME
    return DType.CATEGORICAL


def drop_columns(frame: Frame, names: Iterable[str]) -> Frame:
    names = set(names)
    present = set(frame.names)
    for n in sorted(names):
        if n not in present:
            raise UnknownColumn(n)
    return Frame(tuple(c for c in frame.columns if c.name not in names), frame.n_rows)


def row_indices(n_rows: int, mode: str, k: int, seed: int = 0) -> list[int]:
    if k < 0:
        raise ValueError("k must be >= 0")
    k = min(k, n_rows)
    if mode == "head":
        return list(range(k))
    if mode == "tail":
        return list(range(n_rows - k, n_rows))
    if mode == "sample":
        return sorted(permutation(n_rows, SplitMix64(seed))[:k])
    raise ValueError(f"unknown slice mode {mode!r}")


def slice_rows(frame: Frame, mode: str, k: int, seed: int = 0) -> Frame:
    """First/last ``k`` rows, or ``k`` distinct seeded random rows kept in original order."""
    return frame.take(row_indices(frame.n_rows, mode, k, seed))
