"""Domain types for the spatial-mention protocol."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone

from .errors import BadTimestamp, InvalidCoordinate

DEFAULT_BASE_HOST = "pingmark.me"

LATITUDE_RANGE = (-90.0, 90.0)
LONGITUDE_RANGE = (-180.0, 180.0)

MIN_YEAR = 1970
MAX_YEAR = 9999

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


@dataclass(frozen=True, slots=True)
class GeoCoordinate:
    """A validated WGS84 point in decimal degrees.

    Construction rejects non-finite values and values outside
    [-90, 90] latitude / [-180, 180] longitude.
    """

    latitude: float
    longitude: float

    def __post_init__(self) -> None:
        lat = float(self.latitude)
        lon = float(self.longitude)
        if not (math.isfinite(lat) and math.isfinite(lon)):
            raise InvalidCoordinate("coordinates must be finite numbers")
        if not LATITUDE_RANGE[0] <= lat <= LATITUDE_RANGE[1]:
            raise InvalidCoordinate(f"latitude {lat} outside [-90, 90]")
        if not LONGITUDE_RANGE[0] <= lon <= LONGITUDE_RANGE[1]:
            raise InvalidCoordinate(f"longitude {lon} outside [-180, 180]")
        object.__setattr__(self, "latitude", lat)
        object.__setattr__(self, "longitude", lon)


@dataclass(frozen=True, slots=True)
class PingTimestamp:
    """An instant in UTC with second precision.

    Any aware datetime is accepted and normalized: converted to UTC and
    truncated to whole seconds. The normalized year must fall in
    [1970, 9999] so the instant survives a trip through its canonical
    ``YYYYMMDDTHHMMSSZ`` string form.
    """

    instant: datetime

    def __post_init__(self) -> None:
        if self.instant.tzinfo is None:
            raise ValueError("instant must be timezone-aware")
        normalized = self.instant.astimezone(timezone.utc).replace(microsecond=0)
        if not MIN_YEAR <= normalized.year <= MAX_YEAR:
            raise BadTimestamp(f"year {normalized.year} outside [1970, 9999]")
        object.__setattr__(self, "instant", normalized)

    @classmethod
    def now(cls) -> "PingTimestamp":
        return cls(datetime.now(timezone.utc))

    @classmethod
    def from_epoch(cls, seconds: int) -> "PingTimestamp":
        return cls(_EPOCH + timedelta(seconds=seconds))

    @property
    def epoch(self) -> int:
        """Whole seconds since 1970-01-01T00:00:00Z."""
        delta = self.instant - _EPOCH
        return delta.days * 86400 + delta.seconds


@dataclass(frozen=True, slots=True)
class PingmarkLink:
    """The decoded form of a resolver URL."""

    coordinate: GeoCoordinate
    timestamp: PingTimestamp | None = None
    base_host: str = DEFAULT_BASE_HOST

    def __post_init__(self) -> None:
        if not self.base_host:
            raise ValueError("base_host must be a non-empty hostname")


@dataclass(frozen=True, slots=True)
class TriggerSpan:
    """A located trigger occurrence; offsets are UTF-8 byte positions.

    Unescaped spans cover the two trigger bytes; escaped spans also
    include the leading backslash (three bytes).
    """

    start: int
    end: int
    escaped: bool


@dataclass(frozen=True, slots=True)
class ExpansionResult:
    """Expanded text plus the links inserted, in textual order."""

    text: str
    links: tuple[PingmarkLink, ...] = field(default_factory=tuple)
