"""Shared test-vector corpus pinning the grammar across implementations.

The emitted file is plain JSON so non-Python consumers (the browser map
page, future SDKs) can replay the same cases without extra tooling. Top
level keys are exactly ``scan_cases``, ``link_cases``, ``timestamp_cases``
and ``version``; see :func:`check_vectors` for the per-case schema.

Expected values are produced by replaying the inputs through the core
codecs, so a freshly emitted file always passes its own check. Drift
protection comes from the committed copy of the file: regression tests
compare it byte for byte against a fresh emission.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .actions import resolve_response
from .errors import PingmarkError
from .links import parse_link
from .scanner import scan
from .timestamps import format_timestamp, parse_timestamp

VECTOR_VERSION = "pps-0.1"

_TOP_LEVEL_KEYS = frozenset({"scan_cases", "link_cases", "timestamp_cases", "version"})
_LINK_ERROR_CODES = frozenset({"malformed", "out_of_range", "bad_timestamp"})

# Scanner corpus: the canonical messaging sentence, boundary punctuation,
# escapes, email adjacency negatives, and multi-byte neighbourhoods.
_SCAN_INPUTS = (
    "We're waiting at the south entrance !@.",
    "!@",
    "!@ leading",
    "trailing !@",
    "a !@ b",
    "user!@example.com",
    "Email me at john.doe!@corp.example.",
    "\\!@",
    "keep \\!@ literal",
    "\\!@ and !@.",
    "!@!@",
    "!@ !@",
    "!@.",
    "(!@)",
    "[!@]",
    "{!@}",
    '"!@"',
    "'!@'",
    "x!@",
    "!@x",
    "!@@",
    "#!@",
    "a.!@",
    "x\\!@",
    "(\\!@)",
    "\\!@x",
    "日本 !@ 東京",
    "café !@ café",
    " !@ ",
    "　!@　",
    "😀 !@ 😀",
    "tab\t!@\nnewline",
    "",
    "no trigger here",
    "! @",
)

# Link corpus: canonical forms, inclusive boundaries, liberal parse
# variants, then every rejection class in validation order.
_LINK_INPUTS = (
    "https://pingmark.me/0.00000/0.00000",
    "https://pingmark.me/90.00000/180.00000",
    "https://pingmark.me/-90.00000/-180.00000",
    "https://pingmark.me/43.07570/25.61720",
    "https://pingmark.me/43.07570/25.61720/20251101T120000Z",
    "https://pingmark.me/-33.85680/151.21530/20240229T235959Z",
    "https://pingmark.me/43/25",
    "https://pingmark.me/43.0757001/25.6172999",
    "https://pingmark.me/0.00000/0.00000/",
    "//pingmark.me/1.50000/2.50000",
    "/1.00000/2.00000",
    "HTTPS://pingmark.me/5.00000/6.00000",
    "https://localhost:8080/1.00000/2.00000",
    "https://pingmark.me/-0.00000/0.00000",
    "https://pingmark.me/0/0/2025-11-01T12%3A00%3A00Z",
    "https://pingmark.me/0/0/2025-11-01T14:00:00+02:00",
    "https://pingmark.me/abc/12",
    "https://pingmark.me/0.00000",
    "https://pingmark.me/0/0/0/0",
    "https://pingmark.me",
    "https://pingmark.me/",
    "http://pingmark.me/0/0",
    "ftp://pingmark.me/0/0",
    "https:///0.00000/0.00000",
    "https://pingmark.me/0.123456789/0",
    "https://pingmark.me/+43.0/0",
    "https://pingmark.me/43./25",
    "https://pingmark.me/.5/0",
    "https://pingmark.me/1e2/0",
    "https://pingmark.me/0.00000/0.00000?x=1",
    "https://pingmark.me/0.00000/0.00000#frag",
    "https://pingmark.me/0/0?",
    "https://pingmark.me/٤٢/0",
    "",
    "https://pingmark.me/ 0/0",
    "https://pingmark.me/91.0/0.0",
    "https://pingmark.me/-90.00001/0",
    "https://pingmark.me/0/180.00001",
    "https://pingmark.me/0/-181",
    "https://pingmark.me/91/0/badts",
    "https://pingmark.me/0/0/garbage",
    "https://pingmark.me/0/0/20230229T000000Z",
    "https://pingmark.me/0/0//",
    "https://pingmark.me/0/0/2025-11-01T12:00:00",
)

# Timestamp corpus: both spellings, offsets, percent-encoded colons,
# leap days, range edges, then every rejection class.
_TIMESTAMP_INPUTS = (
    "20251101T120000Z",
    "19700101T000000Z",
    "99991231T235959Z",
    "20240229T235959Z",
    "20000229T000000Z",
    "2025-11-01T12:00:00Z",
    "2025-11-01T14:00:00+02:00",
    "2025-11-01T06:30:00-05:30",
    "2025-11-01T01:00:00+05:00",
    "2025-10-31T15:00:00+15:00",
    "2025-11-01T12%3A00%3A00Z",
    "2025-11-01T12%3a00%3a00Z",
    "1970-01-01T03:00:00+03:00",
    "2025-11-01T23:59:59-00:01",
    "20230229T000000Z",
    "20250431T000000Z",
    "20251301T000000Z",
    "20251100T000000Z",
    "20251101T240000Z",
    "20251101T126000Z",
    "20251101T120060Z",
    "19691231T235959Z",
    "00010101T000000Z",
    "2025-11-01T12:00:00",
    "2025-11-01 12:00:00Z",
    "2025-11-01t12:00:00Z",
    "2025-11-01T12:00:00z",
    "2025-11-01T12:00:00+24:00",
    "2025-11-01T12:00:00+02:60",
    "2025-11-01T12:00:00+0200",
    "2025-11-01T12:00:00.000Z",
    "1969-12-31T23:59:59Z",
    "9999-12-31T23:59:59-01:00",
    "",
    "garbage",
    "20251101T120000",
)


@dataclass(frozen=True, slots=True)
class VectorCaseResult:
    """Outcome of replaying one vector case through the core."""

    section: str
    index: int
    input: str
    ok: bool
    detail: str = ""


def build_vectors() -> dict:
    """Construct the vector corpus with expectations from the live core."""
    return {
        "version": VECTOR_VERSION,
        "scan_cases": [_scan_case(text) for text in _SCAN_INPUTS],
        "link_cases": [_link_case(url) for url in _LINK_INPUTS],
        "timestamp_cases": [_timestamp_case(raw) for raw in _TIMESTAMP_INPUTS],
    }


def emit_vectors_json() -> str:
    """Serialize the corpus deterministically: sorted keys, 2-space
    indent, UTF-8 text, trailing newline."""
    payload = json.dumps(build_vectors(), ensure_ascii=False, indent=2, sort_keys=True)
    return payload + "\n"


def check_vectors(data: object) -> list[VectorCaseResult]:
    """Replay every case in a decoded vector file against the core.

    Raises ValueError when the file shape is wrong (bad keys, wrong
    version, non-list sections, malformed cases); shape defects are not
    case failures because they mean the file cannot be interpreted.
    """
    _validate_shape(data)
    assert isinstance(data, dict)
    results: list[VectorCaseResult] = []
    for index, case in enumerate(data["scan_cases"]):
        results.append(_replay_scan(index, case))
    for index, case in enumerate(data["link_cases"]):
        results.append(_replay_link(index, case))
    for index, case in enumerate(data["timestamp_cases"]):
        results.append(_replay_timestamp(index, case))
    return results


def _scan_case(text: str) -> dict:
    spans = [
        {"start": span.start, "end": span.end, "escaped": span.escaped}
        for span in scan(text)
    ]
    return {"input": text, "spans": spans}


def _link_case(url: str) -> dict:
    try:
        link = parse_link(url)
    except PingmarkError as exc:
        return {"input": url, "expect": {"error": exc.code}}
    return {"input": url, "expect": resolve_response(link)}


def _timestamp_case(raw: str) -> dict:
    try:
        parsed = parse_timestamp(raw)
    except PingmarkError as exc:
        return {"input": raw, "expect": {"error": exc.code}}
    return {"input": raw, "expect": format_timestamp(parsed)}


def _replay_scan(index: int, case: dict) -> VectorCaseResult:
    actual = [
        {"start": span.start, "end": span.end, "escaped": span.escaped}
        for span in scan(case["input"])
    ]
    return _compare("scan", index, case["input"], case["spans"], actual)


def _replay_link(index: int, case: dict) -> VectorCaseResult:
    try:
        link = parse_link(case["input"])
    except PingmarkError as exc:
        actual: object = {"error": exc.code}
    else:
        actual = resolve_response(link)
    return _compare("link", index, case["input"], case["expect"], actual)


def _replay_timestamp(index: int, case: dict) -> VectorCaseResult:
    try:
        parsed = parse_timestamp(case["input"])
    except PingmarkError as exc:
        actual: object = {"error": exc.code}
    else:
        actual = format_timestamp(parsed)
    return _compare("timestamp", index, case["input"], case["expect"], actual)


def _compare(
    section: str, index: int, text: str, expect: object, actual: object
) -> VectorCaseResult:
    if expect == actual:
        return VectorCaseResult(section, index, text, True)
    detail = f"expected {expect!r}, got {actual!r}"
    return VectorCaseResult(section, index, text, False, detail)


def _validate_shape(data: object) -> None:
    if not isinstance(data, dict):
        raise ValueError("vector file must be a JSON object")
    if set(data) != _TOP_LEVEL_KEYS:
        raise ValueError(
            "top-level keys must be exactly scan_cases, link_cases, "
            "timestamp_cases, version"
        )
    if data["version"] != VECTOR_VERSION:
        raise ValueError(f"unsupported vector version {data['version']!r}")
    for name in ("scan_cases", "link_cases", "timestamp_cases"):
        if not isinstance(data[name], list):
            raise ValueError(f"{name} must be a list")
    for case in data["scan_cases"]:
        _validate_scan_case(case)
    for case in data["link_cases"]:
        _validate_link_case(case)
    for case in data["timestamp_cases"]:
        _validate_timestamp_case(case)


def _validate_scan_case(case: object) -> None:
    _require_keys(case, ("input", "spans"), "scan case")
    assert isinstance(case, dict)
    if not isinstance(case["input"], str):
        raise ValueError("scan case input must be a string")
    if not isinstance(case["spans"], list):
        raise ValueError("scan case spans must be a list")
    for span in case["spans"]:
        _require_keys(span, ("start", "end", "escaped"), "span")
        assert isinstance(span, dict)
        for key in ("start", "end"):
            if not isinstance(span[key], int) or isinstance(span[key], bool):
                raise ValueError(f"span {key} must be an integer")
        if not isinstance(span["escaped"], bool):
            raise ValueError("span escaped flag must be a boolean")


def _validate_link_case(case: object) -> None:
    _require_keys(case, ("input", "expect"), "link case")
    assert isinstance(case, dict)
    if not isinstance(case["input"], str):
        raise ValueError("link case input must be a string")
    expect = case["expect"]
    if not isinstance(expect, dict):
        raise ValueError("link case expect must be an object")
    if set(expect) == {"error"}:
        if expect["error"] not in _LINK_ERROR_CODES:
            raise ValueError(f"unknown link error code {expect['error']!r}")
        return
    if set(expect) != {"latitude", "longitude", "timestamp", "links"}:
        raise ValueError(
            "link case expect must be an error object or a full parsed object"
        )


def _validate_timestamp_case(case: object) -> None:
    _require_keys(case, ("input", "expect"), "timestamp case")
    assert isinstance(case, dict)
    if not isinstance(case["input"], str):
        raise ValueError("timestamp case input must be a string")
    expect = case["expect"]
    if isinstance(expect, str):
        return
    if isinstance(expect, dict) and set(expect) == {"error"}:
        if expect["error"] != "bad_timestamp":
            raise ValueError(f"unknown timestamp error code {expect['error']!r}")
        return
    raise ValueError("timestamp case expect must be a string or an error object")


def _require_keys(value: object, keys: tuple[str, ...], label: str) -> None:
    if not isinstance(value, dict) or set(value) != set(keys):
        joined = ", ".join(keys)
        raise ValueError(f"each {label} must be an object with keys {joined}")
