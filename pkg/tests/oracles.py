"""Independent oracles used by the test suite.

Everything in this module is deliberately written without importing the
package under test, so each oracle stays an independent check of the
same contract: a literal brute-force reading of the trigger boundary
rule, a standalone proleptic-Gregorian calendar converter, and grammar
regexes for the canonical link and RFC 5870 geo URI forms.
"""

from __future__ import annotations

import re

OPENING = set("([{\"'")
CLOSING = set(".,!?;:)]}\"'")


def oracle_scan(text: str) -> list[tuple[int, int, bool]]:
    """Apply the boundary rule literally at every index.

    Returns (start, end, escaped) triples in UTF-8 byte offsets.
    """
    found = []
    for i in range(len(text) - 1):
        if text[i] != "!" or text[i + 1] != "@":
            continue
        if i > 0 and text[i - 1] == "\\":
            start, escaped = i - 1, True
        else:
            start, escaped = i, False
        before_ok = start == 0 or _boundary(text[start - 1], OPENING)
        after_ok = i + 2 == len(text) or _boundary(text[i + 2], CLOSING)
        if before_ok and after_ok:
            found.append((start, i + 2, escaped))
    return [
        (_byte_index(text, s), _byte_index(text, e), esc) for s, e, esc in found
    ]


def _boundary(ch: str, punctuation: set[str]) -> bool:
    return ch.isspace() or ch in punctuation


def _byte_index(text: str, codepoint_index: int) -> int:
    return len(text[:codepoint_index].encode("utf-8", "surrogatepass"))


# --- calendar conversion (Gregorian <-> days), no datetime involved ---

def civil_from_days(days: int) -> tuple[int, int, int]:
    """Days since 1970-01-01 to (year, month, day), proleptic Gregorian."""
    z = days + 719468
    era = (z if z >= 0 else z - 146096) // 146097
    doe = z - era * 146097
    yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
    year = yoe + era * 400
    doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
    mp = (5 * doy + 2) // 153
    day = doy - (153 * mp + 2) // 5 + 1
    month = mp + 3 if mp < 10 else mp - 9
    return year + (1 if month <= 2 else 0), month, day


def days_from_civil(year: int, month: int, day: int) -> int:
    """(year, month, day) to days since 1970-01-01, proleptic Gregorian."""
    year -= month <= 2
    era = (year if year >= 0 else year - 399) // 400
    yoe = year - era * 400
    doy = (153 * (month + (-3 if month > 2 else 9)) + 2) // 5 + day - 1
    doe = yoe * 365 + yoe // 4 - yoe // 100 + doy
    return era * 146097 + doe - 719468


def epoch_to_fields(epoch: int) -> tuple[int, int, int, int, int, int]:
    days, rem = divmod(epoch, 86400)
    year, month, day = civil_from_days(days)
    hour, rem = divmod(rem, 3600)
    minute, second = divmod(rem, 60)
    return year, month, day, hour, minute, second


def fields_to_epoch(
    year: int, month: int, day: int, hour: int, minute: int, second: int
) -> int:
    return (
        days_from_civil(year, month, day) * 86400
        + hour * 3600
        + minute * 60
        + second
    )


def oracle_format_epoch(epoch: int) -> str:
    """Canonical basic form of an epoch second, via the calendar oracle."""
    y, mo, d, h, mi, s = epoch_to_fields(epoch)
    return f"{y:04d}{mo:02d}{d:02d}T{h:02d}{mi:02d}{s:02d}Z"


def is_gregorian_leap(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


MAX_EPOCH = fields_to_epoch(9999, 12, 31, 23, 59, 59)


# --- wire grammar validators ---

CANONICAL_LINK_RE = re.compile(
    r"^https://[^/]+"
    r"/-?[0-9]{1,2}\.[0-9]{5}"
    r"/-?[0-9]{1,3}\.[0-9]{5}"
    r"(?:/[0-9]{8}T[0-9]{6}Z)?$"
)

# RFC 5870 basic form: geo:<num>,<num> with num = [-]digits[.digits]
GEO_URI_RE = re.compile(
    r"^geo:-?[0-9]+(?:\.[0-9]+)?,-?[0-9]+(?:\.[0-9]+)?$"
)


def check_geo_uri(uri: str) -> tuple[float, float]:
    """Validate RFC 5870 basic syntax plus the trimming rules; return values."""
    assert GEO_URI_RE.match(uri), f"not a basic geo URI: {uri!r}"
    lat_s, lon_s = uri[len("geo:"):].split(",")
    for part in (lat_s, lon_s):
        if "." in part:
            fraction = part.split(".")[1]
            assert fraction, f"bare decimal point: {part!r}"
            assert not fraction.endswith("0"), f"trailing zero not trimmed: {part!r}"
            assert len(fraction) <= 6, f"more than 6 fraction digits: {part!r}"
        assert part != "-0", "negative zero must render as 0"
    return float(lat_s), float(lon_s)
