"""HTTP resolver: answers compliant links with a map page or JSON.

Privacy contract, enforced here rather than by deployment config:

* no Set-Cookie header is ever emitted;
* access logs carry method, status and latency only, never the path,
  because request paths contain coordinates;
* nothing is written to disk while serving;
* every response carries an explicit Cache-Control header, ``no-store``
  when the configured TTL is 0 and ``public, max-age=<ttl>`` otherwise
  (the TTL is capped at 300 seconds; ``/health`` is always no-store).

Built directly on :mod:`http.server` because the privacy contract needs
exact control over logging and headers; a framework's default access
log would leak coordinates. Requests are handled shared-nothing from an
immutable config, so the threading server needs no extra locking.
"""

from __future__ import annotations

import argparse
import json
import logging
import mimetypes
import os
import sys
import time
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .actions import resolve_response_json
from .errors import BadTimestamp, MalformedLink, OutOfRange
from .links import parse_link
from .types import DEFAULT_BASE_HOST

MAX_CACHE_TTL = 300

_LOGGER = logging.getLogger("pingmark.service")

_HEALTH_BODY = b'{"status":"ok"}'

_PLACEHOLDER_HTML = b"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Pingmark</title>
</head>
<body>
<h1>Pingmark</h1>
<p>This resolver renders locations client-side from the URL path.
The map bundle is not installed on this server; the coordinates are
visible in the address bar and available as JSON via content
negotiation (Accept: application/json).</p>
</body>
</html>
"""


@dataclass(frozen=True, slots=True)
class ResolverConfig:
    """Immutable service configuration shared by all request threads."""

    bind_address: str = "127.0.0.1:8000"
    base_host: str = DEFAULT_BASE_HOST
    cache_ttl_seconds: int = 0
    static_dir: Path | None = None

    def __post_init__(self) -> None:
        if not self.base_host:
            raise ValueError("base_host must be non-empty")
        ttl = self.cache_ttl_seconds
        if not isinstance(ttl, int) or isinstance(ttl, bool):
            raise ValueError("cache_ttl_seconds must be an integer")
        if not 0 <= ttl <= MAX_CACHE_TTL:
            raise ValueError(f"cache_ttl_seconds must be in [0, {MAX_CACHE_TTL}]")
        if self.static_dir is not None:
            object.__setattr__(self, "static_dir", Path(self.static_dir))

    @property
    def cache_control(self) -> str:
        if self.cache_ttl_seconds == 0:
            return "no-store"
        return f"public, max-age={self.cache_ttl_seconds}"


class ResolverServer(ThreadingHTTPServer):
    """Threading HTTP server carrying the immutable ResolverConfig."""

    daemon_threads = True

    def __init__(self, config: ResolverConfig):
        self.config = config
        super().__init__(_split_bind(config.bind_address), ResolverRequestHandler)


class ResolverRequestHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server: ResolverServer

    # -- request dispatch ------------------------------------------------

    def do_GET(self) -> None:
        self._dispatch(include_body=True)

    def do_HEAD(self) -> None:
        self._dispatch(include_body=False)

    def __getattr__(self, name: str):
        # Any other method (POST, PUT, BREW, ...) resolves here and is
        # answered with 405 instead of the default 501.
        if name.startswith("do_"):
            return self._method_not_allowed
        raise AttributeError(name)

    def _method_not_allowed(self) -> None:
        self._started = time.monotonic()
        self._send_json_error(405, "method_not_allowed", include_body=True)

    def _dispatch(self, include_body: bool) -> None:
        self._started = time.monotonic()
        try:
            self._route(include_body)
        except Exception:
            # Deliberately detail-free: an exception repr could echo the
            # request path and the path carries coordinates.
            self._send_json_error(500, "internal_error", include_body)

    def _route(self, include_body: bool) -> None:
        path = self.path
        if path == "/health":
            self._send(200, "application/json", _HEALTH_BODY, include_body,
                       cache_control="no-store")
            return
        if path.startswith("/assets/"):
            self._serve_asset(path[len("/assets/"):], include_body)
            return
        if _route_segment_count(path) in (2, 3):
            self._serve_resolve(path, include_body)
            return
        self._send_json_error(404, "not_found", include_body)

    # -- route handlers --------------------------------------------------

    def _serve_resolve(self, path: str, include_body: bool) -> None:
        try:
            link = parse_link(path, base_host=self.server.config.base_host)
        except MalformedLink as exc:
            self._send_json_error(400, exc.code, include_body)
            return
        except (OutOfRange, BadTimestamp) as exc:
            self._send_json_error(422, exc.code, include_body)
            return
        if self._prefers_json():
            body = resolve_response_json(link).encode("utf-8")
            self._send(200, "application/json", body, include_body)
        else:
            self._send(200, "text/html; charset=utf-8", self._map_page(),
                       include_body)

    def _serve_asset(self, name: str, include_body: bool) -> None:
        root = self.server.config.static_dir
        if root is None or not name:
            self._send_json_error(404, "not_found", include_body)
            return
        root = root.resolve()
        candidate = (root / name).resolve()
        # Containment check defeats .. traversal; symlinks resolve first.
        if not candidate.is_relative_to(root) or not candidate.is_file():
            self._send_json_error(404, "not_found", include_body)
            return
        content_type = mimetypes.guess_type(candidate.name)[0]
        body = candidate.read_bytes()
        self._send(200, content_type or "application/octet-stream", body,
                   include_body)

    def _map_page(self) -> bytes:
        root = self.server.config.static_dir
        if root is not None:
            index = root / "index.html"
            if index.is_file():
                return index.read_bytes()
        return _PLACEHOLDER_HTML

    # -- content negotiation ----------------------------------------------

    def _prefers_json(self) -> bool:
        """True only when the Accept header ranks JSON strictly above
        HTML; ties and absent headers fall back to the human-facing page."""
        accept = self.headers.get("Accept")
        if not accept:
            return False
        q_json = 0.0
        q_html = 0.0
        for clause in accept.split(","):
            media, quality = _parse_accept_clause(clause)
            if media in ("application/json", "application/*"):
                q_json = max(q_json, quality)
            elif media in ("text/html", "text/*"):
                q_html = max(q_html, quality)
            elif media == "*/*":
                q_json = max(q_json, quality)
                q_html = max(q_html, quality)
        return q_json > q_html

    # -- response plumbing -------------------------------------------------

    def _send(
        self,
        status: int,
        content_type: str,
        body: bytes,
        include_body: bool,
        cache_control: str | None = None,
        allow: str | None = None,
    ) -> None:
        self.send_response_only(status)
        self.send_header("Date", self.date_time_string())
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header(
            "Cache-Control",
            cache_control if cache_control is not None
            else self.server.config.cache_control,
        )
        if allow is not None:
            self.send_header("Allow", allow)
        self.end_headers()
        if include_body:
            self.wfile.write(body)
        self._log_access(status)

    def _send_json_error(self, status: int, code: str, include_body: bool) -> None:
        body = json.dumps({"error": code}, separators=(",", ":")).encode("utf-8")
        allow = "GET, HEAD" if status == 405 else None
        self._send(status, "application/json", body, include_body, allow=allow)

    # -- privacy-preserving logging -----------------------------------------

    def _log_access(self, status: int) -> None:
        started = getattr(self, "_started", None)
        elapsed_ms = 0.0 if started is None else (time.monotonic() - started) * 1000
        _LOGGER.info("%s %d %.2fms", self.command, status, elapsed_ms)

    def log_message(self, format: str, *args: object) -> None:
        # The default implementation prints the request line, which
        # contains coordinates. Nothing routes through here.
        pass

    def log_request(self, code: object = "-", size: object = "-") -> None:
        pass

    def log_error(self, format: str, *args: object) -> None:
        pass


def _parse_accept_clause(clause: str) -> tuple[str, float]:
    parts = clause.split(";")
    media = parts[0].strip().lower()
    quality = 1.0
    for param in parts[1:]:
        key, _, value = param.partition("=")
        if key.strip().lower() == "q":
            try:
                quality = float(value.strip())
            except ValueError:
                quality = 0.0
            break
    return media, max(0.0, min(quality, 1.0))


def _route_segment_count(path: str) -> int:
    """Count path segments the same way the link parser does (one
    leading and one trailing slash stripped) so routing and parsing
    cannot disagree about what is a coordinate path."""
    if path.startswith("/"):
        path = path[1:]
    if path.endswith("/"):
        path = path[:-1]
    return len(path.split("/"))


def _split_bind(bind_address: str) -> tuple[str, int]:
    host, sep, port = bind_address.rpartition(":")
    if not sep or not port.isdigit():
        raise ValueError(f"bind address {bind_address!r} is not host:port")
    return host, int(port)


def create_server(config: ResolverConfig) -> ResolverServer:
    """Bind a server for the given config; port 0 picks an ephemeral port."""
    return ResolverServer(config)


def build_config(argv: list[str] | None = None) -> ResolverConfig:
    """Parse flags (falling back to PINGMARK_* env vars) into a config.

    Exits with a usage error when a value is unusable, so both binaries
    fail fast before any socket is bound.
    """
    parser = argparse.ArgumentParser(
        prog="pingmark-resolver",
        description="Serve map pages and JSON for location links.",
    )
    parser.add_argument(
        "--bind",
        default=os.environ.get("PINGMARK_BIND", "127.0.0.1:8000"),
        help="host:port to listen on (env PINGMARK_BIND)",
    )
    parser.add_argument(
        "--base-host",
        default=os.environ.get("PINGMARK_BASE_HOST", DEFAULT_BASE_HOST),
        help="hostname reported in parsed links (env PINGMARK_BASE_HOST)",
    )
    parser.add_argument(
        "--cache-ttl",
        type=int,
        # A string default is run through type=, so a garbage env value
        # exits with a clean usage error instead of a traceback.
        default=os.environ.get("PINGMARK_CACHE_TTL", "0"),
        help=f"Cache-Control max-age, 0-{MAX_CACHE_TTL}; 0 means no-store "
             "(env PINGMARK_CACHE_TTL)",
    )
    parser.add_argument(
        "--static-dir",
        default=os.environ.get("PINGMARK_STATIC_DIR"),
        help="directory with the map page bundle (env PINGMARK_STATIC_DIR)",
    )
    args = parser.parse_args(argv)

    try:
        config = ResolverConfig(
            bind_address=args.bind,
            base_host=args.base_host,
            cache_ttl_seconds=args.cache_ttl,
            static_dir=Path(args.static_dir) if args.static_dir else None,
        )
        _split_bind(config.bind_address)
    except ValueError as exc:
        parser.error(str(exc))
    return config


def main(argv: list[str] | None = None) -> int:
    config = build_config(argv)
    try:
        server = create_server(config)
    except OSError as exc:
        print(f"pingmark-resolver: cannot bind {config.bind_address}: {exc}",
              file=sys.stderr)
        return 2

    logging.basicConfig(level=logging.INFO, format="%(name)s %(message)s")
    host, port = server.server_address[:2]
    _LOGGER.info("listening on %s:%d", host, port)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
