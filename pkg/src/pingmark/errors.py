"""Exception hierarchy for the textual protocol layer.

Each error carries a stable ``code`` string used by the conformance
vector file and by HTTP/CLI error mapping.
"""

from __future__ import annotations


class PingmarkError(ValueError):
    """Base class for all protocol-level errors."""

    code = "error"


class InvalidCoordinate(PingmarkError):
    """Latitude/longitude outside valid ranges, or not a finite number."""

    code = "invalid_coordinate"


class MalformedLink(PingmarkError):
    """A link that fails the URL grammar (syntax, not semantics)."""

    code = "malformed"


class OutOfRange(PingmarkError):
    """A link whose coordinates are numeric but outside WGS84 ranges."""

    code = "out_of_range"


class BadTimestamp(PingmarkError):
    """A timestamp that fails syntax, calendar, or range validation."""

    code = "bad_timestamp"
