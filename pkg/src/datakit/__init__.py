"""Tabular profiling, cleaning, charting and small built-in classifiers."""

from . import feature_engineering, model, structdata, timeseries, visualization
from .csvio import CsvOptions, infer_dtype, parse_csv, read_csv, write_csv
from .frame import Column, DType, Frame, drop_columns, slice_rows
from .timestamps import Timestamp, day_of_week, parse_timestamp

__version__ = "0.1.0"

__all__ = [
    "Column", "CsvOptions", "DType", "Frame", "Timestamp", "day_of_week", "drop_columns",
    "feature_engineering", "infer_dtype", "model", "parse_csv", "parse_timestamp", "read_csv",
    "slice_rows", "structdata", "timeseries", "visualization", "write_csv",
]
