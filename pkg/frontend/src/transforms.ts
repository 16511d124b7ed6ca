/** Coordinate transforms between data space and canvas pixels.
 *
 * Two axis modes mirror the two ways analysts look at a curveset: raw
 * (frequency, velocity) and the compact detrended view (log10 frequency,
 * velocity minus the fitted linear trend). Every transform here is a
 * bijection over the data window so lasso hits and drawn positions agree
 * exactly.
 */

import type { AxisMode, PointRow, RasterMeta } from "./types.js";

export interface DataWindow {
  x0: number;
  x1: number;
  y0: number;
  y1: number;
}

export interface CanvasSize {
  width: number;
  height: number;
  margin: number;
}

/** Data coordinates of one point under the given axis mode. */
export function dataCoords(point: PointRow, mode: AxisMode, meta: RasterMeta): [number, number] {
  const [freq, vel] = point;
  if (mode === "raw") {
    return [freq, vel];
  }
  const logf = Math.log10(freq);
  const [a, b] = meta.trend;
  return [logf, vel - (a + b * logf)];
}

/** Inverse of dataCoords; exact up to float rounding. */
export function physicalCoords(x: number, y: number, mode: AxisMode, meta: RasterMeta): [number, number] {
  if (mode === "raw") {
    return [x, y];
  }
  const [a, b] = meta.trend;
  return [Math.pow(10, x), y + (a + b * x)];
}

/** Padded bounding window of the points in the chosen axis mode. */
export function dataWindow(points: PointRow[], mode: AxisMode, meta: RasterMeta): DataWindow {
  let x0 = Infinity;
  let x1 = -Infinity;
  let y0 = Infinity;
  let y1 = -Infinity;
  for (const p of points) {
    const [x, y] = dataCoords(p, mode, meta);
    x0 = Math.min(x0, x);
    x1 = Math.max(x1, x);
    y0 = Math.min(y0, y);
    y1 = Math.max(y1, y);
  }
  const padX = (x1 - x0 || 1) * 0.05;
  const padY = (y1 - y0 || 1) * 0.05;
  return { x0: x0 - padX, x1: x1 + padX, y0: y0 - padY, y1: y1 + padY };
}

/** Data -> canvas pixels; y points up in data space, down on canvas. */
export function toCanvas(
  x: number,
  y: number,
  win: DataWindow,
  size: CanvasSize,
): [number, number] {
  const innerW = size.width - 2 * size.margin;
  const innerH = size.height - 2 * size.margin;
  const px = size.margin + ((x - win.x0) / (win.x1 - win.x0)) * innerW;
  const py = size.height - size.margin - ((y - win.y0) / (win.y1 - win.y0)) * innerH;
  return [px, py];
}

/** Canvas pixels -> data; inverse of toCanvas. */
export function fromCanvas(
  px: number,
  py: number,
  win: DataWindow,
  size: CanvasSize,
): [number, number] {
  const innerW = size.width - 2 * size.margin;
  const innerH = size.height - 2 * size.margin;
  const x = win.x0 + ((px - size.margin) / innerW) * (win.x1 - win.x0);
  const y = win.y0 + ((size.height - size.margin - py) / innerH) * (win.y1 - win.y0);
  return [x, y];
}

/** Marker radius in pixels: area tracks amplitude, clamped for visibility. */
export function markerRadius(amplitude: number): number {
  return 2 + 6 * Math.sqrt(Math.max(0, Math.min(1, amplitude)));
}
