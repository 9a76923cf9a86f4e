"""Reference implementation of the spatial-mention protocol (PPS v0.1).

The textual layer lives here: trigger scanning, expansion, the resolver
link codec, the timestamp codec, and geo URI export. The HTTP resolver
is in :mod:`pingmark.service`, the CLI in :mod:`pingmark.cli`, and the
shared conformance vectors in :mod:`pingmark.vectors`.
"""

from .actions import build_action_links, resolve_response, resolve_response_json
from .errors import (
    BadTimestamp,
    InvalidCoordinate,
    MalformedLink,
    OutOfRange,
    PingmarkError,
)
from .links import format_link, parse_link, to_geo_uri
from .scanner import expand, scan
from .timestamps import format_timestamp, format_timestamp_extended, parse_timestamp
from .types import (
    DEFAULT_BASE_HOST,
    ExpansionResult,
    GeoCoordinate,
    PingmarkLink,
    PingTimestamp,
    TriggerSpan,
)
from .vectors import (
    VECTOR_VERSION,
    VectorCaseResult,
    build_vectors,
    check_vectors,
    emit_vectors_json,
)

__version__ = "0.1.0"

__all__ = [
    "BadTimestamp",
    "DEFAULT_BASE_HOST",
    "ExpansionResult",
    "GeoCoordinate",
    "InvalidCoordinate",
    "MalformedLink",
    "OutOfRange",
    "PingmarkError",
    "PingmarkLink",
    "PingTimestamp",
    "TriggerSpan",
    "VECTOR_VERSION",
    "VectorCaseResult",
    "build_action_links",
    "build_vectors",
    "check_vectors",
    "emit_vectors_json",
    "expand",
    "format_link",
    "format_timestamp",
    "format_timestamp_extended",
    "parse_link",
    "parse_timestamp",
    "resolve_response",
    "resolve_response_json",
    "scan",
    "to_geo_uri",
    "__version__",
]
