"""Timestamp codec: canonical basic ISO 8601 plus liberal parsing.

Canonical form is ``YYYYMMDDTHHMMSSZ`` (no separators, uppercase, UTC).
Parsing also accepts the extended form ``YYYY-MM-DDTHH:MM:SS`` followed
by ``Z`` or a numeric ``±hh:mm`` offset, with colons optionally
percent-encoded as ``%3A``; offset forms are normalized to UTC. A zone
designator is mandatory.
"""

from __future__ import annotations

import re
from datetime import datetime, timedelta, timezone

from .errors import BadTimestamp
from .types import PingTimestamp

_BASIC_RE = re.compile(
    r"^([0-9]{4})([0-9]{2})([0-9]{2})T([0-9]{2})([0-9]{2})([0-9]{2})Z$"
)
_EXTENDED_RE = re.compile(
    r"^([0-9]{4})-([0-9]{2})-([0-9]{2})"
    r"T([0-9]{2}):([0-9]{2}):([0-9]{2})"
    r"(Z|[+-][0-9]{2}:[0-9]{2})$"
)


def parse_timestamp(value: str) -> PingTimestamp:
    """Parse a timestamp string, raising BadTimestamp on any defect."""
    text = value.replace("%3A", ":").replace("%3a", ":")
    match = _BASIC_RE.match(text)
    offset = timedelta(0)
    if match is None:
        match = _EXTENDED_RE.match(text)
        if match is None:
            raise BadTimestamp(f"unrecognized timestamp syntax: {value!r}")
        offset = _parse_offset(match.group(7))
    fields = [int(g) for g in match.groups()[:6]]
    try:
        local = datetime(*fields)
    except ValueError as exc:
        raise BadTimestamp(f"impossible date-time: {value!r}") from exc
    try:
        instant = local - offset
    except OverflowError as exc:
        raise BadTimestamp(f"instant outside supported years: {value!r}") from exc
    return PingTimestamp(instant.replace(tzinfo=timezone.utc))


def _parse_offset(designator: str) -> timedelta:
    if designator == "Z":
        return timedelta(0)
    sign = 1 if designator[0] == "+" else -1
    hours = int(designator[1:3])
    minutes = int(designator[4:6])
    # RFC 3339 numeric offsets: hour 00-23, minute 00-59.
    if hours > 23 or minutes > 59:
        raise BadTimestamp(f"offset out of range: {designator!r}")
    return sign * timedelta(hours=hours, minutes=minutes)


def format_timestamp(timestamp: PingTimestamp) -> str:
    """Render the canonical basic form ``YYYYMMDDTHHMMSSZ``."""
    t = timestamp.instant
    return (
        f"{t.year:04d}{t.month:02d}{t.day:02d}"
        f"T{t.hour:02d}{t.minute:02d}{t.second:02d}Z"
    )


def format_timestamp_extended(timestamp: PingTimestamp) -> str:
    """Render the extended form used in JSON bodies, e.g. ``2025-11-01T12:00:00Z``."""
    t = timestamp.instant
    return (
        f"{t.year:04d}-{t.month:02d}-{t.day:02d}"
        f"T{t.hour:02d}:{t.minute:02d}:{t.second:02d}Z"
    )
