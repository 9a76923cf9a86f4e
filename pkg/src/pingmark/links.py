"""Resolver-link codec and geo URI export.

Canonical rendering: ``https://<host>/<lat>/<lon>[/<ts>]`` with
coordinates as signed fixed-point decimals carrying exactly 5 fraction
digits (ties rounded away from zero). Parsing is deliberately more
liberal: integer coordinates and 1-7 fraction digits are accepted, as
are scheme-relative and path-only forms.

The validation order below is part of the wire contract and must not be
reordered (syntax before range before timestamp); the conformance
vectors pin it for other implementations.
"""

from __future__ import annotations

import re
from decimal import ROUND_HALF_UP, Decimal

from .errors import MalformedLink, OutOfRange
from .timestamps import format_timestamp, parse_timestamp
from .types import DEFAULT_BASE_HOST, GeoCoordinate, PingmarkLink, PingTimestamp

_SCHEME_RE = re.compile(r"^([A-Za-z][A-Za-z0-9+.\-]*)://")
_COORD_RE = re.compile(r"^-?[0-9]{1,3}(?:\.[0-9]{1,7})?$")

_LINK_QUANTUM = Decimal("0.00001")
_GEO_QUANTUM = Decimal("0.000001")


def format_coordinate(value: float) -> str:
    """Fixed-point rendering with exactly 5 fraction digits.

    Rounds the shortest decimal representation of the float, ties away
    from zero; a zero result never carries a minus sign.
    """
    quantized = Decimal(repr(value)).quantize(_LINK_QUANTUM, rounding=ROUND_HALF_UP)
    if quantized.is_zero():
        quantized = quantized.copy_abs()
    return format(quantized, "f")


def format_geo_number(value: float) -> str:
    """Rendering for geo URIs and map links: at most 6 fraction digits,
    trailing zeros trimmed, no bare trailing decimal point."""
    quantized = Decimal(repr(value)).quantize(_GEO_QUANTUM, rounding=ROUND_HALF_UP)
    text = format(quantized, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


def format_link(link: PingmarkLink) -> str:
    """Render the canonical https resolver URL for a link."""
    parts = [
        f"https://{link.base_host}",
        format_coordinate(link.coordinate.latitude),
        format_coordinate(link.coordinate.longitude),
    ]
    if link.timestamp is not None:
        parts.append(format_timestamp(link.timestamp))
    return "/".join(parts)


def to_geo_uri(link: PingmarkLink) -> str:
    """RFC 5870 basic form ``geo:<lat>,<lon>``; the timestamp is dropped."""
    lat = format_geo_number(link.coordinate.latitude)
    lon = format_geo_number(link.coordinate.longitude)
    return f"geo:{lat},{lon}"


def parse_link(url: str, base_host: str = DEFAULT_BASE_HOST) -> PingmarkLink:
    """Decode a resolver URL, a scheme-relative form, or a bare path.

    Raises MalformedLink on syntax defects, OutOfRange for numeric but
    invalid coordinates, BadTimestamp for an unparseable third segment.
    """
    host, path = _split_url(url)
    segments = _split_path(path)

    for segment in segments[:2]:
        if _COORD_RE.match(segment) is None:
            raise MalformedLink(f"coordinate segment {segment!r} is not numeric")
    latitude = float(segments[0])
    longitude = float(segments[1])
    # Collapse -0.0 so equal instants compare equal across JSON encoders.
    if latitude == 0.0:
        latitude = 0.0
    if longitude == 0.0:
        longitude = 0.0

    if not -90.0 <= latitude <= 90.0:
        raise OutOfRange(f"latitude {latitude} outside [-90, 90]")
    if not -180.0 <= longitude <= 180.0:
        raise OutOfRange(f"longitude {longitude} outside [-180, 180]")

    timestamp: PingTimestamp | None = None
    if len(segments) == 3:
        timestamp = parse_timestamp(segments[2])

    coordinate = GeoCoordinate(latitude, longitude)
    return PingmarkLink(coordinate, timestamp, host if host is not None else base_host)


def _split_url(url: str) -> tuple[str | None, str]:
    """Split into (host, path); host is None for path-only inputs."""
    if "?" in url or "#" in url:
        raise MalformedLink("query strings and fragments are not allowed")
    match = _SCHEME_RE.match(url)
    if match is not None:
        if match.group(1).lower() != "https":
            raise MalformedLink(f"scheme must be https, got {match.group(1)!r}")
        return _split_authority(url[match.end():])
    if url.startswith("//"):
        return _split_authority(url[2:])
    return None, url


def _split_authority(rest: str) -> tuple[str, str]:
    slash = rest.find("/")
    if slash < 0:
        host, path = rest, ""
    else:
        host, path = rest[:slash], rest[slash:]
    if not host:
        raise MalformedLink("missing host")
    return host, path


def _split_path(path: str) -> list[str]:
    if path.startswith("/"):
        path = path[1:]
    if path.endswith("/"):
        path = path[:-1]
    segments = path.split("/")
    if len(segments) not in (2, 3):
        raise MalformedLink(f"expected 2 or 3 path segments, got {len(segments)}")
    return segments
