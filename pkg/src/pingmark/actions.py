"""Action links and the canonical resolver response body."""

from __future__ import annotations

import json

from .links import format_geo_number, to_geo_uri
from .timestamps import format_timestamp_extended
from .types import GeoCoordinate, PingmarkLink

MAP_ZOOM = 16

_OSM_BASE = "https://www.openstreetmap.org"


def build_action_links(coordinate: GeoCoordinate) -> dict[str, str]:
    """Quick-access link set for a point: geo URI, map view, directions."""
    lat = format_geo_number(coordinate.latitude)
    lon = format_geo_number(coordinate.longitude)
    return {
        "geo": to_geo_uri(PingmarkLink(coordinate)),
        "osm": f"{_OSM_BASE}/?mlat={lat}&mlon={lon}#map={MAP_ZOOM}/{lat}/{lon}",
        "directions": f"{_OSM_BASE}/directions?to={lat}%2C{lon}",
    }


def resolve_response(link: PingmarkLink) -> dict:
    """The resolver's canonical answer for a decoded link.

    Keys and their order are part of the JSON wire contract.
    """
    timestamp = None
    if link.timestamp is not None:
        timestamp = format_timestamp_extended(link.timestamp)
    return {
        "latitude": link.coordinate.latitude,
        "longitude": link.coordinate.longitude,
        "timestamp": timestamp,
        "links": build_action_links(link.coordinate),
    }


def resolve_response_json(link: PingmarkLink) -> str:
    """Compact JSON rendering; deterministic for identical links."""
    return json.dumps(resolve_response(link), ensure_ascii=False, separators=(",", ":"))
