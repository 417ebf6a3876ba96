"""UTC timestamps with proleptic-Gregorian civil conversion.

Only fixed offsets are understood; there is no timezone database.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, RangeError

SECONDS_PER_DAY = 86400

DAY_NAMES = ("Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday")

_ISO_T = re.compile(
    r"(\d{4})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(?:\.(\d+))?(Z|[+-]\d{2}:\d{2})?"
)
_ISO_SPACE = re.compile(r"(\d{4})-(\d{2})-(\d{2}) (\d{2}):(\d{2}):(\d{2})")
_DATE_ONLY = re.compile(r"(\d{4})-(\d{2})-(\d{2})")


def is_leap(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def days_in_month(year: int, month: int) -> int:
    if month == 2:
        return 29 if is_leap(year) else 28
    return 30 if month in (4, 6, 9, 11) else 31


def days_from_civil(year: int, month: int, day: int) -> int:
    """Days since 1970-01-01 for a proleptic Gregorian date (H. Hinnant's algorithm)."""
    y = year - 1 if month <= 2 else year
    era = y // 400
    yoe = y - era * 400
    mp = (month + 9) % 12
    doy = (153 * mp + 2) // 5 + day - 1
    doe = yoe * 365 + yoe // 4 - yoe // 100 + doy
    return era * 146097 + doe - 719468


def civil_from_days(days: int) -> tuple[int, int, int]:
    z = days + 719468
    era = z // 146097
    doe = z - era * 146097
    yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
    doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
    mp = (5 * doy + 2) // 153
    day = doy - (153 * mp + 2) // 5 + 1
    month = mp + 3 if mp < 10 else mp - 9
    year = yoe + era * 400 + (1 if month <= 2 else 0)
    return year, month, day


@dataclass(frozen=True, order=True)
class Timestamp:
    """Seconds since the Unix epoch (UTC) plus a microsecond remainder."""

    epoch_s: int
    micros: int = 0

    @classmethod
    def from_civil(cls, year: int, month: int, day: int, hour: int = 0, minute: int = 0,
                   second: int = 0, micros: int = 0) -> "Timestamp":
        _check_civil(year, month, day, hour, minute, second)
        days = days_from_civil(year, month, day)
        return cls(days * SECONDS_PER_DAY + hour * 3600 + minute * 60 + second, micros)

    @property
    def days_from_epoch(self) -> int:
        return self.epoch_s // SECONDS_PER_DAY

    @property
    def civil(self) -> tuple[int, int, int, int, int, int]:
        days, secs = divmod(self.epoch_s, SECONDS_PER_DAY)
        y, m, d = civil_from_days(days)
        hh, rem = divmod(secs, 3600)
        mm, ss = divmod(rem, 60)
        return y, m, d, hh, mm, ss

    @property
    def year(self) -> int:
        return self.civil[0]

    @property
    def month(self) -> int:
        return self.civil[1]

    @property
    def day(self) -> int:
        return self.civil[2]

    @property
    def hour(self) -> int:
        return (self.epoch_s % SECONDS_PER_DAY) // 3600

    @property
    def minute(self) -> int:
        return (self.epoch_s % 3600) // 60

    @property
    def second(self) -> int:
        return self.epoch_s % 60

    def isoformat(self) -> str:
        y, m, d, hh, mm, ss = self.civil
        frac = f".{self.micros:06d}" if self.micros else ""
        return f"{y:04d}-{m:02d}-{d:02d}T{hh:02d}:{mm:02d}:{ss:02d}{frac}Z"

    def __str__(self) -> str:
        return self.isoformat()


def _check_civil(year: int, month: int, day: int, hour: int, minute: int, second: int) -> None:
    if not 1 <= month <= 12:
        raise RangeError(f"RangeError: month {month} out of range")
    if not 1 <= day <= days_in_month(year, month):
        raise RangeError(f"RangeError: day {day} out of range for {year:04d}-{month:02d}")
    if not (0 <= hour <= 23 and 0 <= minute <= 59 and 0 <= second <= 59):
        raise RangeError(f"RangeError: time {hour:02d}:{minute:02d}:{second:02d} out of range")


def parse_timestamp(text: str) -> Timestamp:
    """Parse ``YYYY-MM-DDTHH:MM:SS[.fff][Z|+HH:MM]``, ``YYYY-MM-DD HH:MM:SS`` or ``YYYY-MM-DD``.

    Offsets are folded into UTC, naive inputs are taken as UTC, and a bare date
    means midnight.
    """
    s = text.strip(" \t\r\n\f\v")
    offset = 0
    micros = 0
    if m := _ISO_T.fullmatch(s):
        y, mo, d, hh, mi, ss = (int(g) for g in m.groups()[:6])
        if m.group(7):
            micros = int(m.group(7)[:6].ljust(6, "0"))
        tz = m.group(8)
        if tz and tz != "Z":
            oh, om = int(tz[1:3]), int(tz[4:6])
            if oh > 23 or om > 59:
                raise RangeError(f"RangeError: offset {tz} out of range")
            offset = (oh * 3600 + om * 60) * (1 if tz[0] == "+" else -1)
    elif m := _ISO_SPACE.fullmatch(s):
        y, mo, d, hh, mi, ss = (int(g) for g in m.groups())
    elif m := _DATE_ONLY.fullmatch(s):
        y, mo, d = (int(g) for g in m.groups())
        hh = mi = ss = 0
    else:
        raise ParseError(text)
    ts = Timestamp.from_civil(y, mo, d, hh, mi, ss, micros)
    return Timestamp(ts.epoch_s - offset, micros) if offset else ts


def try_parse_timestamp(text: str) -> Timestamp | None:
    try:
        return parse_timestamp(text)
    except (ParseError, RangeError):
        return None


def day_of_week(ts: Timestamp) -> str:
    # epoch day 0 was a Thursday, names[3]
    return DAY_NAMES[(ts.days_from_epoch + 3) % 7]
