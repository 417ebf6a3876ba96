"""Exception hierarchy.

Three families map onto CLI exit codes: ingest problems (3), schema problems
such as unknown columns or dtype mismatches (4) and model-file problems (5).
Everything else derives from ``DataError``.
"""

from __future__ import annotations


class DatakitError(Exception):
    """Base class for every error raised by this package."""


# -- ingest -------------------------------------------------------------------


class IngestError(DatakitError):
    pass


class RaggedRow(IngestError):
    def __init__(self, line: int, expected: int | None = None, got: int | None = None):
        self.line = line
        detail = "" if expected is None else f" (expected {expected} fields, got {got})"
        super().__init__(f"RaggedRow: line {line}{detail}")


class Utf8Error(IngestError):
    def __init__(self, offset: int):
        self.offset = offset
        super().__init__(f"Utf8Error: invalid UTF-8 at byte offset {offset}")


class EmptyInput(IngestError):
    def __init__(self, msg: str = "EmptyInput: no header row"):
        super().__init__(msg)


class MalformedCsv(IngestError):
    pass


# -- schema -------------------------------------------------------------------


class SchemaError(DatakitError):
    pass


class UnknownColumn(SchemaError, KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"UnknownColumn: {name!r}")

    def __str__(self) -> str:
        return self.args[0]


class DuplicateColumn(SchemaError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"DuplicateColumn: {name!r}")


class WrongDType(SchemaError):
    def __init__(self, name: str, dtype: object, wanted: str = ""):
        self.name = name
        self.dtype = dtype
        suffix = f", expected {wanted}" if wanted else ""
        super().__init__(f"WrongDType: column {name!r} has dtype {dtype}{suffix}")


class ShapeMismatch(SchemaError):
    pass


class NullInFeatures(SchemaError):
    pass


# -- data / values ------------------------------------------------------------


class DataError(DatakitError, ValueError):
    pass


class ParseError(DataError):
    def __init__(self, text: str):
        self.text = text
        super().__init__(f"ParseError: {text!r} is not a recognised timestamp")


class RangeError(DataError):
    pass


class EmptyColumn(DataError):
    def __init__(self, name: str = ""):
        self.name = name
        super().__init__(f"EmptyColumn: {name!r} has no non-null values")


class TooManyClasses(DataError):
    def __init__(self, name: str, k: int):
        self.name = name
        self.k = k
        super().__init__(f"TooManyClasses: {name!r} has {k} classes")


class SingleClass(DataError):
    pass


class LengthMismatch(DataError):
    pass


class NonBinaryLabel(DataError):
    pass


# -- model files --------------------------------------------------------------


class ModelFileError(DatakitError):
    pass


class SchemaVersionMismatch(ModelFileError):
    pass


class MalformedModelFile(ModelFileError):
    pass
