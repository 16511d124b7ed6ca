/** Lasso selection geometry: point-in-polygon and click-radius hit tests. */

export type Vec2 = [number, number];

/** Ray-casting point-in-polygon; boundary points count as inside. */
export function pointInPolygon(p: Vec2, polygon: Vec2[]): boolean {
  if (polygon.length < 3) return false;
  const [x, y] = p;
  let inside = false;
  for (let i = 0, j = polygon.length - 1; i < polygon.length; j = i++) {
    const [xi, yi] = polygon[i]!;
    const [xj, yj] = polygon[j]!;
    if (onSegment([x, y], [xi, yi], [xj, yj])) return true;
    const crosses = yi > y !== yj > y && x < ((xj - xi) * (y - yi)) / (yj - yi) + xi;
    if (crosses) inside = !inside;
  }
  return inside;
}

function onSegment(p: Vec2, a: Vec2, b: Vec2): boolean {
  const cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
  if (Math.abs(cross) > 1e-9) return false;
  const dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]);
  const len2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2;
  return dot >= 0 && dot <= len2;
}

/** Indices of canvas-space points inside a lasso path. */
export function lassoSelect(points: Vec2[], path: Vec2[]): number[] {
  const out: number[] = [];
  points.forEach((p, i) => {
    if (pointInPolygon(p, path)) out.push(i);
  });
  return out;
}

/** Index of the nearest point within radius of a click, or null. */
export function clickSelect(points: Vec2[], click: Vec2, radius: number): number | null {
  let best: number | null = null;
  let bestDist = radius;
  points.forEach(([x, y], i) => {
    const d = Math.hypot(x - click[0], y - click[1]);
    if (d <= bestDist) {
      best = i;
      bestDist = d;
    }
  });
  return best;
}
