"""RFC 4180 CSV reading/writing with per-column type inference."""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Sequence

from .errors import DuplicateColumn, EmptyInput, MalformedCsv, RaggedRow, Utf8Error
from .frame import INT64_MAX, INT64_MIN, Column, DType, Frame
from .timestamps import try_parse_timestamp

DEFAULT_NULL_TOKENS = ("", "NA", "NaN", "null", "NULL")
INFERENCE_THRESHOLD = (19, 20)  # a variant wins when >= 95% of sampled values parse

_WS = " \t\r\n\f\v"
_INT_RE = re.compile(r"[+-]?\d+")
_FLOAT_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_BOOL_WORDS = {"true": True, "True": True, "false": False, "False": False}
_BOOL_DIGITS = {"0": False, "1": True}


@dataclass(frozen=True)
class CsvOptions:
    delimiter: str = ","
    has_header: bool = True
    null_tokens: tuple[str, ...] = DEFAULT_NULL_TOKENS
    inference_sample: int = 1000
    # off: timestamp-looking columns stay Categorical (see describe's date notes)
    infer_datetime: bool = True

    def __post_init__(self) -> None:
        if len(self.delimiter) != 1 or len(self.delimiter.encode("utf-8")) != 1:
            raise ValueError("delimiter must be a single byte")
        if not self.null_tokens:
            raise ValueError("at least one null token is required")
        object.__setattr__(self, "null_tokens", tuple(self.null_tokens))


# -- cell parsers ------------------------------------------------------------
# Each returns the parsed value or None; _OVERFLOW flags syntactically valid
# numbers that do not fit the target domain.

_OVERFLOW = object()


def _parse_int(s: str):
    s = s.strip(_WS)
    if not _INT_RE.fullmatch(s):
        return None
    v = int(s)
    return v if INT64_MIN <= v <= INT64_MAX else _OVERFLOW


def _parse_float(s: str):
    s = s.strip(_WS)
    if not _FLOAT_RE.fullmatch(s):
        return None
    v = float(s)
    return v if v not in (float("inf"), float("-inf")) else _OVERFLOW


def _parse_bool(s: str):
    s = s.strip(_WS)
    if s in _BOOL_WORDS:
        return _BOOL_WORDS[s]
    return _BOOL_DIGITS.get(s)


def _parse_datetime(s: str):
    return try_parse_timestamp(s)


def _passes(n_ok: int, n: int) -> bool:
    num, den = INFERENCE_THRESHOLD
    return n > 0 and den * n_ok >= num * n


def infer_dtype(raw: Sequence[str], *, infer_datetime: bool = True) -> DType:
    """Pick the first of Int, Float, Bool, DateTime that parses >= 95% of ``raw``.

    Bool additionally needs at least one literal ``true``/``false`` so that
    purely 0/1 columns are never Bool. Categorical is the fallback.
    """
    n = len(raw)
    if n == 0:
        return DType.CATEGORICAL
    ints = sum(isinstance(_parse_int(s), int) for s in raw)
    if _passes(ints, n):
        return DType.INT
    floats = sum(isinstance(_parse_float(s), float) for s in raw)
    if _passes(floats, n):
        return DType.FLOAT
    words = sum(s.strip(_WS) in _BOOL_WORDS for s in raw)
    bools = sum(_parse_bool(s) is not None for s in raw)
    if words > 0 and _passes(bools, n):
        return DType.BOOL
    if infer_datetime and _passes(sum(_parse_datetime(s) is not None for s in raw), n):
        return DType.DATETIME
    return DType.CATEGORICAL


def _convert(raw: Sequence[str | None], dtype: DType) -> tuple[DType, list]:
    """Convert a raw column, demoting Int -> Float -> Categorical on overflow."""
    if dtype is DType.CATEGORICAL:
        return dtype, list(raw)
    parser = {
        DType.INT: _parse_int,
        DType.FLOAT: _parse_float,
        DType.BOOL: _parse_bool,
        DType.DATETIME: _parse_datetime,
    }[dtype]
    out = []
    for s in raw:
        v = None if s is None else parser(s)
        if v is _OVERFLOW:
            demoted = DType.FLOAT if dtype is DType.INT else DType.CATEGORICAL
            return _convert(raw, demoted)
        out.append(v)
    return dtype, out


# -- reading -------------------------------------------------------------------


def _decode(source: bytes | str | BinaryIO) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, str):
        text = source
    else:
        try:
            text = bytes(source).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise Utf8Error(exc.start) from None
    return text[1:] if text.startswith("\ufeff") else text


def parse_csv(source: bytes | str | BinaryIO, options: CsvOptions = CsvOptions()) -> Frame:
    text = _decode(source)
    reader = csv.reader(io.StringIO(text, newline=""), delimiter=options.delimiter, strict=True)
    records: list[list[str]] = []
    lines: list[int] = []
    try:
        for rec in reader:
            records.append(rec)
            lines.append(reader.line_num)
    except csv.Error as exc:
        raise MalformedCsv(f"MalformedCsv: line {reader.line_num + 1}: {exc}") from None

    if not records:
        raise EmptyInput()
    if options.has_header:
        header = records[0]
        body, body_lines = records[1:], lines[1:]
        if header == []:
            raise EmptyInput("EmptyInput: header row is blank")
    else:
        width = len(records[0]) or 1
        header = [f"col_{i}" for i in range(width)]
        body, body_lines = records, lines
    width = len(header)
    seen = set()
    for name in header:
        if not name:
            raise MalformedCsv("MalformedCsv: empty column name in header")
        if name in seen:
            raise DuplicateColumn(name)
        seen.add(name)

    nulls = set(options.null_tokens)
    cells: list[list[str | None]] = [[] for _ in range(width)]
    for rec, line in zip(body, body_lines):
        if rec == [] and width == 1:
            rec = [""]
        if len(rec) != width:
            raise RaggedRow(line, width, len(rec))
        for j, s in enumerate(rec):
            cells[j].append(None if s.strip(_WS) in nulls else s)

    columns = []
    for name, raw in zip(header, cells):
        sample = []
        for s in raw:
            if s is not None:
                sample.append(s)
                if len(sample) >= options.inference_sample:
                    break
        dtype = infer_dtype(sample, infer_datetime=options.infer_datetime)
        dtype, values = _convert(raw, dtype)
        columns.append(Column(name, dtype, tuple(values)))
    return Frame(tuple(columns), len(body))


def read_csv(path, options: CsvOptions = CsvOptions()) -> Frame:
    with open(path, "rb") as fh:
        return parse_csv(fh.read(), options)


# -- writing -------------------------------------------------------------------


def format_cell(v, dtype: DType) -> str:
    if dtype is DType.FLOAT:
        return repr(float(v))
    if dtype is DType.BOOL:
        return "true" if v else "false"
    if dtype is DType.DATETIME:
        return v.isoformat()
    return str(v)


def _quote(s: str, delim: str) -> str:
    if delim in s or '"' in s or "\n" in s or "\r" in s:
        return '"' + s.replace('"', '""') + '"'
    return s


def _join(fields: Iterable[str], delim: str) -> str:
    return delim.join(_quote(f, delim) for f in fields) + "\n"


def write_csv(frame: Frame, options: CsvOptions = CsvOptions()) -> bytes:
    """Serialise ``frame``; nulls become the first null token."""
    d = options.delimiter
    null = options.null_tokens[0]
    parts = []
    if options.has_header:
        parts.append(_join(frame.names, d))
    dtypes = [c.dtype for c in frame.columns]
    for row in frame.rows():
        parts.append(_join((null if v is None else format_cell(v, t) for v, t in zip(row, dtypes)), d))
    return "".join(parts).encode("utf-8")


__all__ = ["CsvOptions", "parse_csv", "read_csv", "write_csv", "infer_dtype"]
