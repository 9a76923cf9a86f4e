// Link and timestamp codecs for the map page.
//
// This module re-implements the resolver's wire grammar so the page can
// decode its own URL without a round trip: same coordinate syntax, same
// validation order (syntax before range before timestamp), same decimal
// rounding, same action-link templates. The shared conformance vectors
// pin the two implementations together; see tests/grammar.test.ts.

export type ErrorCode = "malformed" | "out_of_range" | "bad_timestamp";

export interface Instant {
  epoch: number;
  year: number;
  month: number;
  day: number;
  hour: number;
  minute: number;
  second: number;
}

export interface ParsedLink {
  latitude: number;
  longitude: number;
  timestamp: Instant | null;
  host: string;
}

export interface ActionLinks {
  geo: string;
  osm: string;
  directions: string;
}

export interface ResolvePayload {
  latitude: number;
  longitude: number;
  timestamp: string | null;
  links: ActionLinks;
}

export type ParseResult<T> =
  | { ok: true; value: T }
  | { ok: false; code: ErrorCode; message: string };

export const DEFAULT_BASE_HOST = "pingmark.me";
export const MAP_ZOOM = 16;

// Last representable second of year 9999 UTC; the codec's upper bound.
const MAX_EPOCH = 253402300799;
const MIN_EPOCH = 0;

const OSM_BASE = "https://www.openstreetmap.org";

const SCHEME_RE = /^([A-Za-z][A-Za-z0-9+.\-]*):\/\//;
const COORD_RE = /^-?[0-9]{1,3}(?:\.[0-9]{1,7})?$/;
const BASIC_RE = /^([0-9]{4})([0-9]{2})([0-9]{2})T([0-9]{2})([0-9]{2})([0-9]{2})Z$/;
const EXTENDED_RE =
  /^([0-9]{4})-([0-9]{2})-([0-9]{2})T([0-9]{2}):([0-9]{2}):([0-9]{2})(Z|[+-][0-9]{2}:[0-9]{2})$/;

function failure<T>(code: ErrorCode, message: string): ParseResult<T> {
  return { ok: false, code, message };
}

// --- timestamps -----------------------------------------------------------

export function parseTimestamp(value: string): ParseResult<Instant> {
  const text = value.replaceAll("%3A", ":").replaceAll("%3a", ":");
  let match = BASIC_RE.exec(text);
  let offsetSeconds = 0;
  if (match === null) {
    match = EXTENDED_RE.exec(text);
    if (match === null) {
      return failure("bad_timestamp", `unrecognized timestamp syntax: ${JSON.stringify(value)}`);
    }
    const offset = parseOffset(match[7] as string);
    if (offset === null) {
      return failure("bad_timestamp", `offset out of range: ${JSON.stringify(match[7])}`);
    }
    offsetSeconds = offset;
  }
  const year = Number(match[1]);
  const month = Number(match[2]);
  const day = Number(match[3]);
  const hour = Number(match[4]);
  const minute = Number(match[5]);
  const second = Number(match[6]);
  if (!isValidCivil(year, month, day, hour, minute, second)) {
    return failure("bad_timestamp", `impossible date-time: ${JSON.stringify(value)}`);
  }
  const epoch =
    daysFromCivil(year, month, day) * 86400 +
    hour * 3600 +
    minute * 60 +
    second -
    offsetSeconds;
  if (epoch < MIN_EPOCH || epoch > MAX_EPOCH) {
    return failure("bad_timestamp", `instant outside supported years: ${JSON.stringify(value)}`);
  }
  return { ok: true, value: instantFromEpoch(epoch) };
}

function parseOffset(designator: string): number | null {
  if (designator === "Z") {
    return 0;
  }
  const sign = designator[0] === "+" ? 1 : -1;
  const hours = Number(designator.slice(1, 3));
  const minutes = Number(designator.slice(4, 6));
  // RFC 3339 numeric offsets: hour 00-23, minute 00-59.
  if (hours > 23 || minutes > 59) {
    return null;
  }
  return sign * (hours * 3600 + minutes * 60);
}

function isValidCivil(
  year: number,
  month: number,
  day: number,
  hour: number,
  minute: number,
  second: number,
): boolean {
  if (year < 1 || month < 1 || month > 12) {
    return false;
  }
  if (day < 1 || day > daysInMonth(year, month)) {
    return false;
  }
  return hour <= 23 && minute <= 59 && second <= 59;
}

function isLeapYear(year: number): boolean {
  return year % 4 === 0 && (year % 100 !== 0 || year % 400 === 0);
}

const MONTH_LENGTHS = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31];

function daysInMonth(year: number, month: number): number {
  if (month === 2 && isLeapYear(year)) {
    return 29;
  }
  return MONTH_LENGTHS[month - 1] as number;
}

// Proleptic-Gregorian day arithmetic (Howard Hinnant's algorithms).
function daysFromCivil(year: number, month: number, day: number): number {
  const y = month <= 2 ? year - 1 : year;
  const era = Math.floor(y / 400);
  const yoe = y - era * 400;
  const doy = Math.trunc((153 * (month + (month > 2 ? -3 : 9)) + 2) / 5) + day - 1;
  const doe = yoe * 365 + Math.trunc(yoe / 4) - Math.trunc(yoe / 100) + doy;
  return era * 146097 + doe - 719468;
}

function civilFromDays(days: number): { year: number; month: number; day: number } {
  const z = days + 719468;
  const era = Math.floor(z / 146097);
  const doe = z - era * 146097;
  const yoe = Math.trunc(
    (doe - Math.trunc(doe / 1460) + Math.trunc(doe / 36524) - Math.trunc(doe / 146096)) / 365,
  );
  const doy = doe - (365 * yoe + Math.trunc(yoe / 4) - Math.trunc(yoe / 100));
  const mp = Math.trunc((5 * doy + 2) / 153);
  const day = doy - Math.trunc((153 * mp + 2) / 5) + 1;
  const month = mp < 10 ? mp + 3 : mp - 9;
  const year = yoe + era * 400 + (month <= 2 ? 1 : 0);
  return { year, month, day };
}

export function instantFromEpoch(epoch: number): Instant {
  const days = Math.floor(epoch / 86400);
  const rest = epoch - days * 86400;
  const { year, month, day } = civilFromDays(days);
  return {
    epoch,
    year,
    month,
    day,
    hour: Math.trunc(rest / 3600),
    minute: Math.trunc(rest / 60) % 60,
    second: rest % 60,
  };
}

function pad(value: number, width: number): string {
  return String(value).padStart(width, "0");
}

export function formatTimestampBasic(instant: Instant): string {
  return (
    `${pad(instant.year, 4)}${pad(instant.month, 2)}${pad(instant.day, 2)}` +
    `T${pad(instant.hour, 2)}${pad(instant.minute, 2)}${pad(instant.second, 2)}Z`
  );
}

export function formatTimestampExtended(instant: Instant): string {
  return (
    `${pad(instant.year, 4)}-${pad(instant.month, 2)}-${pad(instant.day, 2)}` +
    `T${pad(instant.hour, 2)}:${pad(instant.minute, 2)}:${pad(instant.second, 2)}Z`
  );
}

// Caption form used on the page, e.g. "2025-11-01 12:00 UTC".
export function formatTimestampCaption(instant: Instant): string {
  return (
    `${pad(instant.year, 4)}-${pad(instant.month, 2)}-${pad(instant.day, 2)}` +
    ` ${pad(instant.hour, 2)}:${pad(instant.minute, 2)} UTC`
  );
}

// --- decimal rendering ----------------------------------------------------

// String(number) is the shortest decimal that round-trips, the same digit
// sequence the server side rounds from, so rounding the rendered string
// keeps the two implementations bit-for-bit aligned.
function toPlainDecimal(value: number): { sign: string; int: string; frac: string } {
  let text = String(value);
  let sign = "";
  if (text.startsWith("-")) {
    sign = "-";
    text = text.slice(1);
  }
  let exponent = 0;
  const eIndex = text.search(/[eE]/);
  if (eIndex >= 0) {
    exponent = Number(text.slice(eIndex + 1));
    text = text.slice(0, eIndex);
  }
  const dot = text.indexOf(".");
  let digits: string;
  let pointPos: number;
  if (dot < 0) {
    digits = text;
    pointPos = text.length;
  } else {
    digits = text.slice(0, dot) + text.slice(dot + 1);
    pointPos = dot;
  }
  pointPos += exponent;
  while (pointPos <= 0) {
    digits = "0" + digits;
    pointPos += 1;
  }
  while (pointPos > digits.length) {
    digits += "0";
  }
  const int = digits.slice(0, pointPos).replace(/^0+(?=[0-9])/, "");
  return { sign, int, frac: digits.slice(pointPos) };
}

// Round the magnitude to fracDigits fraction digits, ties away from zero.
function roundDecimal(
  value: number,
  fracDigits: number,
): { sign: string; int: string; frac: string } {
  const plain = toPlainDecimal(value);
  let int = plain.int;
  let frac = plain.frac;
  if (frac.length > fracDigits) {
    const next = frac.charCodeAt(fracDigits) - 48;
    frac = frac.slice(0, fracDigits);
    if (next >= 5) {
      const combined = (int + frac).split("");
      let i = combined.length - 1;
      for (; i >= 0; i -= 1) {
        if (combined[i] === "9") {
          combined[i] = "0";
        } else {
          combined[i] = String.fromCharCode((combined[i] as string).charCodeAt(0) + 1);
          break;
        }
      }
      if (i < 0) {
        combined.unshift("1");
      }
      int = combined.slice(0, combined.length - fracDigits).join("");
      frac = combined.slice(combined.length - fracDigits).join("");
      if (int === "") {
        int = "0";
      }
    }
  }
  while (frac.length < fracDigits) {
    frac += "0";
  }
  return { sign: plain.sign, int, frac };
}

// Exactly 5 fraction digits; a zero result never carries a minus sign.
export function formatCoordinate(value: number): string {
  const r = roundDecimal(value, 5);
  const text = `${r.int}.${r.frac}`;
  if (/^0\.0+$/.test(text)) {
    return text;
  }
  return r.sign + text;
}

// At most 6 fraction digits, trailing zeros trimmed; "-0" collapses to "0".
export function formatGeoNumber(value: number): string {
  const r = roundDecimal(value, 6);
  let text = `${r.int}.${r.frac}`.replace(/0+$/, "").replace(/\.$/, "");
  text = r.sign + text;
  if (text === "-0" || text === "") {
    return "0";
  }
  return text;
}

// --- links ----------------------------------------------------------------

export function parseLink(url: string, baseHost: string = DEFAULT_BASE_HOST): ParseResult<ParsedLink> {
  const split = splitUrl(url);
  if (!split.ok) {
    return split;
  }
  const segments = splitPath(split.value.path);
  if (!segments.ok) {
    return segments;
  }
  const parts = segments.value;
  for (const segment of parts.slice(0, 2)) {
    if (!COORD_RE.test(segment)) {
      return failure("malformed", `coordinate segment ${JSON.stringify(segment)} is not numeric`);
    }
  }
  let latitude = Number(parts[0]);
  let longitude = Number(parts[1]);
  // Collapse -0 so equal points compare equal across JSON encoders.
  if (Object.is(latitude, -0)) {
    latitude = 0;
  }
  if (Object.is(longitude, -0)) {
    longitude = 0;
  }

  if (!(latitude >= -90 && latitude <= 90)) {
    return failure("out_of_range", `latitude ${latitude} outside [-90, 90]`);
  }
  if (!(longitude >= -180 && longitude <= 180)) {
    return failure("out_of_range", `longitude ${longitude} outside [-180, 180]`);
  }

  let timestamp: Instant | null = null;
  if (parts.length === 3) {
    const parsed = parseTimestamp(parts[2] as string);
    if (!parsed.ok) {
      return parsed;
    }
    timestamp = parsed.value;
  }
  return {
    ok: true,
    value: { latitude, longitude, timestamp, host: split.value.host ?? baseHost },
  };
}

function splitUrl(url: string): ParseResult<{ host: string | null; path: string }> {
  if (url.includes("?") || url.includes("#")) {
    return failure("malformed", "query strings and fragments are not allowed");
  }
  const match = SCHEME_RE.exec(url);
  if (match !== null) {
    if ((match[1] as string).toLowerCase() !== "https") {
      return failure("malformed", `scheme must be https, got ${JSON.stringify(match[1])}`);
    }
    return splitAuthority(url.slice(match[0].length));
  }
  if (url.startsWith("//")) {
    return splitAuthority(url.slice(2));
  }
  return { ok: true, value: { host: null, path: url } };
}

function splitAuthority(rest: string): ParseResult<{ host: string | null; path: string }> {
  const slash = rest.indexOf("/");
  const host = slash < 0 ? rest : rest.slice(0, slash);
  const path = slash < 0 ? "" : rest.slice(slash);
  if (host === "") {
    return failure("malformed", "missing host");
  }
  return { ok: true, value: { host, path } };
}

function splitPath(path: string): ParseResult<string[]> {
  let trimmed = path;
  if (trimmed.startsWith("/")) {
    trimmed = trimmed.slice(1);
  }
  if (trimmed.endsWith("/")) {
    trimmed = trimmed.slice(0, -1);
  }
  const segments = trimmed.split("/");
  if (segments.length !== 2 && segments.length !== 3) {
    return failure("malformed", `expected 2 or 3 path segments, got ${segments.length}`);
  }
  return { ok: true, value: segments };
}

// --- action links and the resolver payload shape --------------------------

export function toGeoUri(latitude: number, longitude: number): string {
  return `geo:${formatGeoNumber(latitude)},${formatGeoNumber(longitude)}`;
}

export function buildActionLinks(latitude: number, longitude: number): ActionLinks {
  const lat = formatGeoNumber(latitude);
  const lon = formatGeoNumber(longitude);
  return {
    geo: toGeoUri(latitude, longitude),
    osm: `${OSM_BASE}/?mlat=${lat}&mlon=${lon}#map=${MAP_ZOOM}/${lat}/${lon}`,
    directions: `${OSM_BASE}/directions?to=${lat}%2C${lon}`,
  };
}

export function resolvePayload(link: ParsedLink): ResolvePayload {
  return {
    latitude: link.latitude,
    longitude: link.longitude,
    timestamp: link.timestamp === null ? null : formatTimestampExtended(link.timestamp),
    links: buildActionLinks(link.latitude, link.longitude),
  };
}
