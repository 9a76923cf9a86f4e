"""Trigger scanning and text expansion.

The two-character token ``!@`` is a trigger only when it stands alone:
the character before it must be start-of-text, whitespace, or opening
punctuation, and the character after it end-of-text, whitespace, or
closing/sentence punctuation. ``\\!@`` is the escaped (literal) form;
its span includes the backslash and the boundary rule applies around
the whole three-character sequence. Occurrences failing the boundary
rule are not reported at all, so ``user!@example.com`` never triggers.
"""

from __future__ import annotations

from .links import format_link
from .types import (
    DEFAULT_BASE_HOST,
    ExpansionResult,
    GeoCoordinate,
    PingmarkLink,
    PingTimestamp,
    TriggerSpan,
)

TRIGGER = "!@"
ESCAPE = "\\"

OPENING_PUNCTUATION = frozenset("([{\"'")
CLOSING_PUNCTUATION = frozenset(".,!?;:)]}\"'")


def _opens(ch: str) -> bool:
    return ch.isspace() or ch in OPENING_PUNCTUATION


def _closes(ch: str) -> bool:
    return ch.isspace() or ch in CLOSING_PUNCTUATION


def _scan_codepoints(text: str) -> list[tuple[int, int, bool]]:
    """Scan in codepoint space; returns (start, end, escaped) triples."""
    spans: list[tuple[int, int, bool]] = []
    pos = 0
    while True:
        hit = text.find(TRIGGER, pos)
        if hit < 0:
            return spans
        if hit > 0 and text[hit - 1] == ESCAPE:
            start, escaped = hit - 1, True
        else:
            start, escaped = hit, False
        end = hit + 2
        left_ok = start == 0 or _opens(text[start - 1])
        right_ok = end == len(text) or _closes(text[end])
        if left_ok and right_ok:
            spans.append((start, end, escaped))
        pos = end


def _utf8_len(text: str) -> int:
    # surrogatepass keeps the scanner total even on lone surrogates
    return len(text.encode("utf-8", "surrogatepass"))


def scan(text: str) -> list[TriggerSpan]:
    """Locate every standalone trigger; offsets are UTF-8 byte positions.

    Never raises; degenerate input yields an empty list. Spans are
    strictly ordered and non-overlapping.
    """
    spans = []
    byte_pos = 0
    cp_pos = 0
    for start, end, escaped in _scan_codepoints(text):
        byte_pos += _utf8_len(text[cp_pos:start])
        byte_start = byte_pos
        byte_pos += _utf8_len(text[start:end])
        spans.append(TriggerSpan(byte_start, byte_pos, escaped))
        cp_pos = end
    return spans


def expand(
    text: str,
    coordinate: GeoCoordinate,
    timestamp: PingTimestamp | None = None,
    base_host: str = DEFAULT_BASE_HOST,
) -> ExpansionResult:
    """Replace every unescaped trigger with the rendered resolver link.

    Escaped triggers are left byte-for-byte untouched, backslash
    included; all replacements in one call share the same link.
    """
    spans = _scan_codepoints(text)
    replace = [(start, end) for start, end, escaped in spans if not escaped]
    if not replace:
        return ExpansionResult(text, ())

    link = PingmarkLink(coordinate, timestamp, base_host)
    url = format_link(link)
    pieces: list[str] = []
    cursor = 0
    for start, end in replace:
        pieces.append(text[cursor:start])
        pieces.append(url)
        cursor = end
    pieces.append(text[cursor:])
    return ExpansionResult("".join(pieces), tuple(link for _ in replace))
