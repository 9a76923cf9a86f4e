// Slippy-map tile arithmetic: just enough Web-Mercator math to center a
// fixed grid of raster tiles on one coordinate. No panning, no zooming.

import { MAP_ZOOM } from "./grammar";

export const TILE_SIZE = 256;
export const TILE_BASE = "https://tile.openstreetmap.org";

// Web-Mercator singularity guard; poleward of this the projection diverges.
const MAX_MERCATOR_LATITUDE = 85.05112878;

export interface TilePlacement {
  url: string;
  left: number;
  top: number;
}

export function tileCoordinates(
  latitude: number,
  longitude: number,
  zoom: number = MAP_ZOOM,
): { x: number; y: number } {
  const clamped = Math.max(-MAX_MERCATOR_LATITUDE, Math.min(MAX_MERCATOR_LATITUDE, latitude));
  const scale = 2 ** zoom;
  const latRad = (clamped * Math.PI) / 180;
  const x = ((longitude + 180) / 360) * scale;
  const y = ((1 - Math.asinh(Math.tan(latRad)) / Math.PI) / 2) * scale;
  return { x, y };
}

export function tileUrl(zoom: number, x: number, y: number): string {
  return `${TILE_BASE}/${zoom}/${x}/${y}.png`;
}

// Tiles covering a width x height viewport centered on the coordinate,
// positioned in viewport pixels. Columns wrap around the antimeridian;
// rows outside the projection are skipped.
export function tileGrid(
  latitude: number,
  longitude: number,
  width: number,
  height: number,
  zoom: number = MAP_ZOOM,
): TilePlacement[] {
  const scale = 2 ** zoom;
  const center = tileCoordinates(latitude, longitude, zoom);
  const viewLeft = center.x * TILE_SIZE - width / 2;
  const viewTop = center.y * TILE_SIZE - height / 2;
  const firstColumn = Math.floor(viewLeft / TILE_SIZE);
  const lastColumn = Math.floor((viewLeft + width - 1) / TILE_SIZE);
  const firstRow = Math.floor(viewTop / TILE_SIZE);
  const lastRow = Math.floor((viewTop + height - 1) / TILE_SIZE);
  const placements: TilePlacement[] = [];
  for (let row = firstRow; row <= lastRow; row += 1) {
    if (row < 0 || row >= scale) {
      continue;
    }
    for (let column = firstColumn; column <= lastColumn; column += 1) {
      const wrapped = ((column % scale) + scale) % scale;
      placements.push({
        url: tileUrl(zoom, wrapped, row),
        left: column * TILE_SIZE - viewLeft,
        top: row * TILE_SIZE - viewTop,
      });
    }
  }
  return placements;
}
