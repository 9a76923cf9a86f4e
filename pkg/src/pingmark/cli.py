"""Command-line client: expand triggers, build and inspect links.

Exit codes form the scripting contract:

* 0 success;
* 1 usage errors (unknown flags or subcommands, missing arguments);
* 2 validation errors (missing or invalid coordinates, bad timestamp
  flags, failing conformance cases);
* 3 parse errors (a link that does not decode, an unreadable or
  malformed vector file).

Coordinates come from ``--lat``/``--lon`` or the ``PINGMARK_LAT``/
``PINGMARK_LON`` environment, flags winning; there is no hardware
geolocation in a pipe-oriented client. Text output is written verbatim
so byte offsets survive round trips; JSON output is newline-terminated
UTF-8.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .actions import resolve_response, resolve_response_json
from .errors import InvalidCoordinate, PingmarkError
from .links import format_link, parse_link
from .scanner import expand, scan
from .timestamps import parse_timestamp
from .types import DEFAULT_BASE_HOST, GeoCoordinate, PingmarkLink, PingTimestamp
from .vectors import check_vectors, emit_vectors_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_PARSE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this contract wants 1."""

    def error(self, message: str) -> "argparse.NoReturn":  # type: ignore[name-defined]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BrokenPipeError:
        return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="pingmark",
        description="Expand !@ location triggers and work with resolver links.",
    )
    subcommands = parser.add_subparsers(dest="command", required=True)

    cmd = subcommands.add_parser("expand", help="replace triggers in stdin text")
    _add_provider_flags(cmd)
    group = cmd.add_mutually_exclusive_group()
    group.add_argument("--timestamp", help="stamp links with this instant")
    group.add_argument("--now", action="store_true",
                       help="stamp links with the current UTC second")
    group.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp (default)")
    cmd.add_argument("--format", choices=("text", "json"), default="text")
    cmd.set_defaults(handler=_cmd_expand)

    cmd = subcommands.add_parser("make", help="print one canonical link")
    _add_provider_flags(cmd)
    group = cmd.add_mutually_exclusive_group()
    group.add_argument("--timestamp", help="append this instant to the link")
    group.add_argument("--now", action="store_true",
                       help="append the current UTC second")
    cmd.set_defaults(handler=_cmd_make)

    cmd = subcommands.add_parser("parse", help="decode and describe a link")
    cmd.add_argument("url")
    cmd.add_argument("--base-url", default=None,
                     help="host assumed for path-only links")
    cmd.add_argument("--format", choices=("json", "text"), default="json")
    cmd.set_defaults(handler=_cmd_parse)

    cmd = subcommands.add_parser("scan", help="list trigger spans in stdin text")
    cmd.add_argument("--format", choices=("json",), default="json")
    cmd.set_defaults(handler=_cmd_scan)

    cmd = subcommands.add_parser("vectors", help="emit or check grammar vectors")
    actions = cmd.add_subparsers(dest="action", required=True)
    emit = actions.add_parser("emit", help="write the vector file to stdout")
    emit.set_defaults(handler=_cmd_vectors_emit)
    check = actions.add_parser("check", help="replay a vector file")
    check.add_argument("file")
    check.set_defaults(handler=_cmd_vectors_check)

    return parser


def _add_provider_flags(cmd: argparse.ArgumentParser) -> None:
    # Plain strings, not type=float: a malformed number is a validation
    # problem (exit 2), not a usage problem (exit 1).
    cmd.add_argument("--lat", help="latitude in decimal degrees (env PINGMARK_LAT)")
    cmd.add_argument("--lon", help="longitude in decimal degrees (env PINGMARK_LON)")
    cmd.add_argument("--base-url", default=None,
                     help="resolver base, e.g. https://pingmark.me "
                          "(env PINGMARK_BASE_URL)")


def _cmd_expand(args: argparse.Namespace) -> int:
    text = sys.stdin.read()
    needs_provider = any(not span.escaped for span in scan(text))
    if not needs_provider:
        return _emit_expansion(args, text, [])

    try:
        coordinate = _require_coordinate(args)
        timestamp = _optional_timestamp(args)
        base_host = _base_host(args)
    except _ValidationFailure as failure:
        return _fail(EXIT_VALIDATION, str(failure))

    result = expand(text, coordinate, timestamp, base_host=base_host)
    return _emit_expansion(args, result.text, [format_link(link) for link in result.links])


def _emit_expansion(args: argparse.Namespace, text: str, links: list[str]) -> int:
    if args.format == "json":
        payload = json.dumps(
            {"text": text, "links": links}, ensure_ascii=False, separators=(",", ":")
        )
        sys.stdout.write(payload + "\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_make(args: argparse.Namespace) -> int:
    try:
        coordinate = _require_coordinate(args)
        timestamp = _optional_timestamp(args)
        base_host = _base_host(args)
    except _ValidationFailure as failure:
        return _fail(EXIT_VALIDATION, str(failure))
    print(format_link(PingmarkLink(coordinate, timestamp, base_host)))
    return EXIT_OK


def _cmd_parse(args: argparse.Namespace) -> int:
    try:
        base_host = _base_host(args)
    except _ValidationFailure as failure:
        return _fail(EXIT_VALIDATION, str(failure))
    try:
        link = parse_link(args.url, base_host=base_host)
    except PingmarkError as exc:
        return _fail(EXIT_PARSE, f"{exc.code}: {exc}")

    if args.format == "json":
        print(resolve_response_json(link))
        return EXIT_OK
    payload = resolve_response(link)
    timestamp = payload["timestamp"] if payload["timestamp"] else "none"
    print(f"latitude:   {payload['latitude']}")
    print(f"longitude:  {payload['longitude']}")
    print(f"timestamp:  {timestamp}")
    print(f"geo:        {payload['links']['geo']}")
    print(f"osm:        {payload['links']['osm']}")
    print(f"directions: {payload['links']['directions']}")
    return EXIT_OK


def _cmd_scan(args: argparse.Namespace) -> int:
    text = sys.stdin.read()
    spans = [
        {"start": span.start, "end": span.end, "escaped": span.escaped}
        for span in scan(text)
    ]
    print(json.dumps(spans, separators=(",", ":")))
    return EXIT_OK


def _cmd_vectors_emit(args: argparse.Namespace) -> int:
    sys.stdout.write(emit_vectors_json())
    return EXIT_OK


def _cmd_vectors_check(args: argparse.Namespace) -> int:
    try:
        with open(args.file, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(EXIT_PARSE, f"cannot read vector file: {exc}")
    try:
        results = check_vectors(data)
    except ValueError as exc:
        return _fail(EXIT_PARSE, f"malformed vector file: {exc}")

    failures = 0
    for result in results:
        label = f"{result.section}[{result.index}]"
        if result.ok:
            print(f"ok   {label}")
        else:
            failures += 1
            print(f"FAIL {label} {result.input!r}: {result.detail}")
    print(f"{len(results)} cases, {failures} failures")
    return EXIT_OK if failures == 0 else EXIT_VALIDATION


class _ValidationFailure(Exception):
    pass


def _require_coordinate(args: argparse.Namespace) -> GeoCoordinate:
    lat = args.lat if args.lat is not None else os.environ.get("PINGMARK_LAT")
    lon = args.lon if args.lon is not None else os.environ.get("PINGMARK_LON")
    if lat is None or lon is None:
        raise _ValidationFailure(
            "coordinates required: pass --lat/--lon or set PINGMARK_LAT/PINGMARK_LON"
        )
    try:
        coordinate = GeoCoordinate(float(lat), float(lon))
    except (ValueError, InvalidCoordinate) as exc:
        raise _ValidationFailure(f"invalid coordinates: {exc}") from exc
    return coordinate


def _optional_timestamp(args: argparse.Namespace) -> PingTimestamp | None:
    if getattr(args, "now", False):
        return PingTimestamp.now()
    raw = getattr(args, "timestamp", None)
    if raw is None:
        return None
    try:
        return parse_timestamp(raw)
    except PingmarkError as exc:
        raise _ValidationFailure(f"invalid timestamp: {exc}") from exc


def _base_host(args: argparse.Namespace) -> str:
    raw = args.base_url if args.base_url is not None else os.environ.get(
        "PINGMARK_BASE_URL"
    )
    if raw is None:
        return DEFAULT_BASE_HOST
    host = raw.strip()
    for prefix in ("https://", "http://"):
        if host.lower().startswith(prefix):
            host = host[len(prefix):]
            break
    host = host.rstrip("/")
    if not host:
        raise _ValidationFailure(f"invalid base URL: {raw!r}")
    return host


def _fail(code: int, message: str) -> int:
    print(f"pingmark: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
