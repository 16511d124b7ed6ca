/** Canvas scatter rendering: amplitude as marker size, class as color. */

import { CLASS_COLORS, type AxisMode, type Label, type PointRow, type RasterMeta } from "./types.js";
import {
  dataCoords,
  dataWindow,
  markerRadius,
  toCanvas,
  type CanvasSize,
  type DataWindow,
} from "./transforms.js";

export interface Scene {
  window: DataWindow;
  size: CanvasSize;
  /** canvas position per point, aligned with the detail's point order */
  positions: [number, number][];
}

/** Compute canvas positions for all points; pure so tests can run headless. */
export function layoutScene(
  points: PointRow[],
  mode: AxisMode,
  meta: RasterMeta,
  size: CanvasSize,
): Scene {
  const win = dataWindow(points, mode, meta);
  const positions = points.map((p) => {
    const [x, y] = dataCoords(p, mode, meta);
    return toCanvas(x, y, win, size);
  });
  return { window: win, size, positions };
}

export function renderScatter(
  ctx: CanvasRenderingContext2D,
  points: PointRow[],
  labels: readonly number[],
  scene: Scene,
  options: {
    prediction?: readonly number[];
    selection?: ReadonlySet<number>;
    axisMode: AxisMode;
  },
): void {
  const { width, height, margin } = scene.size;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#111418";
  ctx.fillRect(0, 0, width, height);

  ctx.strokeStyle = "#3c4450";
  ctx.lineWidth = 1;
  ctx.strokeRect(margin, margin, width - 2 * margin, height - 2 * margin);
  ctx.fillStyle = "#8fa0b3";
  ctx.font = "12px system-ui, sans-serif";
  const xLabel = options.axisMode === "raw" ? "frequency (Hz)" : "log10 frequency";
  const yLabel = options.axisMode === "raw" ? "group velocity (km/s)" : "detrended velocity (km/s)";
  ctx.fillText(xLabel, width / 2 - 40, height - 6);
  ctx.save();
  ctx.translate(12, height / 2 + 50);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(yLabel, 0, 0);
  ctx.restore();

  points.forEach((p, i) => {
    const [px, py] = scene.positions[i]!;
    const label = (labels[i] ?? 0) as Label;
    ctx.beginPath();
    ctx.arc(px, py, markerRadius(p[2]), 0, 2 * Math.PI);
    ctx.fillStyle = CLASS_COLORS[label];
    ctx.globalAlpha = 0.85;
    ctx.fill();
    ctx.globalAlpha = 1.0;
    if (options.prediction && options.prediction[i] !== labels[i]) {
      // model disagrees: hollow ring in the predicted class color
      ctx.beginPath();
      ctx.arc(px, py, markerRadius(p[2]) + 2.5, 0, 2 * Math.PI);
      ctx.strokeStyle = CLASS_COLORS[(options.prediction[i] ?? 0) as Label];
      ctx.lineWidth = 1.5;
      ctx.stroke();
    }
    if (options.selection?.has(i)) {
      ctx.beginPath();
      ctx.arc(px, py, markerRadius(p[2]) + 4, 0, 2 * Math.PI);
      ctx.strokeStyle = "#f5f1d0";
      ctx.lineWidth = 1.0;
      ctx.stroke();
    }
  });
}

export function renderLassoPath(ctx: CanvasRenderingContext2D, path: [number, number][]): void {
  if (path.length < 2) return;
  ctx.beginPath();
  ctx.moveTo(path[0]![0], path[0]![1]);
  for (const [x, y] of path.slice(1)) ctx.lineTo(x, y);
  ctx.strokeStyle = "#f5f1d0";
  ctx.setLineDash([4, 3]);
  ctx.lineWidth = 1;
  ctx.stroke();
  ctx.setLineDash([]);
}
