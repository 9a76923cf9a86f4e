// Page assembly: decode the location path, then render either the map
// card or an error panel. Rendering is pure DOM construction; the module
// never touches cookies, storage, or the network beyond map tile images.

import {
  MAP_ZOOM,
  formatGeoNumber,
  formatTimestampCaption,
  parseLink,
  toGeoUri,
  buildActionLinks,
  type ErrorCode,
  type Instant,
} from "./grammar";
import { tileGrid } from "./tiles";

export const MAP_WIDTH = 512;
export const MAP_HEIGHT = 384;

export type PageState =
  | { kind: "map"; latitude: number; longitude: number; timestamp: Instant | null }
  | { kind: "error"; code: ErrorCode; message: string };

export function parsePath(path: string): PageState {
  const result = parseLink(path);
  if (!result.ok) {
    return { kind: "error", code: result.code, message: result.message };
  }
  return {
    kind: "map",
    latitude: result.value.latitude,
    longitude: result.value.longitude,
    timestamp: result.value.timestamp,
  };
}

export function render(state: PageState, root: HTMLElement): void {
  const doc = root.ownerDocument;
  root.replaceChildren();
  const card = doc.createElement("main");
  card.className = "card";
  if (state.kind === "map") {
    renderMap(state, card, doc);
  } else {
    renderError(state, card, doc);
  }
  root.appendChild(card);
}

export function boot(doc: Document, path: string): void {
  const root = doc.getElementById("app");
  if (root !== null) {
    render(parsePath(path), root);
  }
}

function coordinateText(latitude: number, longitude: number): string {
  return `${formatGeoNumber(latitude)}, ${formatGeoNumber(longitude)}`;
}

function renderMap(
  state: { latitude: number; longitude: number; timestamp: Instant | null },
  card: HTMLElement,
  doc: Document,
): void {
  const coords = coordinateText(state.latitude, state.longitude);
  doc.title = `Pingmark: ${coords}`;

  const map = doc.createElement("div");
  map.className = "map";
  map.dataset["zoom"] = String(MAP_ZOOM);
  for (const tile of tileGrid(state.latitude, state.longitude, MAP_WIDTH, MAP_HEIGHT)) {
    const img = doc.createElement("img");
    img.className = "tile";
    img.alt = "";
    img.decoding = "async";
    img.style.left = `${tile.left}px`;
    img.style.top = `${tile.top}px`;
    img.addEventListener("error", () => {
      map.classList.add("tiles-failed");
    });
    img.src = tile.url;
    map.appendChild(img);
  }

  const marker = doc.createElement("div");
  marker.className = "marker";
  marker.title = coords;
  map.appendChild(marker);

  const fallback = doc.createElement("div");
  fallback.className = "map-fallback";
  fallback.textContent = `Map tiles unavailable. Location: ${coords}`;
  map.appendChild(fallback);
  card.appendChild(map);

  const coordsLine = doc.createElement("p");
  coordsLine.className = "coords";
  coordsLine.textContent = coords;
  card.appendChild(coordsLine);

  if (state.timestamp !== null) {
    const when = doc.createElement("p");
    when.className = "when";
    when.textContent = formatTimestampCaption(state.timestamp);
    card.appendChild(when);
  }

  const links = buildActionLinks(state.latitude, state.longitude);
  const actions = doc.createElement("nav");
  actions.className = "actions";
  actions.appendChild(anchor(doc, "open-maps", toGeoUri(state.latitude, state.longitude), "Open in Maps"));
  actions.appendChild(anchor(doc, "open-osm", links.osm, "View on OpenStreetMap"));
  actions.appendChild(anchor(doc, "directions", links.directions, "Get Directions"));
  card.appendChild(actions);
}

function renderError(state: { code: ErrorCode; message: string }, card: HTMLElement, doc: Document): void {
  doc.title = "Pingmark: invalid link";
  const panel = doc.createElement("div");
  panel.className = "error-panel";

  const heading = doc.createElement("h1");
  heading.textContent = "Cannot display this location";
  panel.appendChild(heading);

  const codeLine = doc.createElement("p");
  codeLine.className = "error-code";
  const code = doc.createElement("code");
  code.textContent = state.code;
  codeLine.appendChild(code);
  panel.appendChild(codeLine);

  const detail = doc.createElement("p");
  detail.className = "error-detail";
  detail.textContent = state.message;
  panel.appendChild(detail);

  card.appendChild(panel);
}

function anchor(doc: Document, className: string, href: string, label: string): HTMLAnchorElement {
  const element = doc.createElement("a");
  element.className = className;
  element.href = href;
  element.textContent = label;
  return element;
}
