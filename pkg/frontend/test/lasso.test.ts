import { describe, expect, it } from "vitest";
import { clickSelect, lassoSelect, pointInPolygon } from "../src/lasso.js";

const SQUARE: [number, number][] = [[0, 0], [10, 0], [10, 10], [0, 10]];

describe("pointInPolygon", () => {
  it("classifies interior and exterior points", () => {
    expect(pointInPolygon([5, 5], SQUARE)).toBe(true);
    expect(pointInPolygon([15, 5], SQUARE)).toBe(false);
    expect(pointInPolygon([-1, -1], SQUARE)).toBe(false);
  });

  it("boundary points count as inside", () => {
    expect(pointInPolygon([5, 0], SQUARE)).toBe(true);
    expect(pointInPolygon([0, 0], SQUARE)).toBe(true);
  });

  it("handles concave paths", () => {
    const concave: [number, number][] = [[0, 0], [10, 0], [10, 10], [5, 5], [0, 10]];
    expect(pointInPolygon([5, 8], concave)).toBe(false);
    expect(pointInPolygon([2, 3], concave)).toBe(true);
  });

  it("degenerate path selects nothing", () => {
    expect(pointInPolygon([0, 0], [[0, 0], [1, 1]])).toBe(false);
  });
});

describe("lassoSelect", () => {
  it("returns indices of enclosed points only", () => {
    const points: [number, number][] = [[1, 1], [5, 5], [11, 11], [9, 1]];
    expect(lassoSelect(points, SQUARE)).toEqual([0, 1, 3]);
  });
});

describe("clickSelect", () => {
  it("picks the nearest point within the radius", () => {
    const points: [number, number][] = [[0, 0], [10, 0], [20, 0]];
    expect(clickSelect(points, [9, 1], 5)).toBe(1);
  });

  it("returns null when nothing is near", () => {
    expect(clickSelect([[0, 0]], [50, 50], 5)).toBeNull();
  });
});
