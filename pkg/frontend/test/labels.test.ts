import { describe, expect, it } from "vitest";
import { LabelSession, acceptAllOfClass, disagreementIndices } from "../src/labels.js";
import type { CurvesetDetail } from "../src/types.js";

function detail(labels: number[], revision = 0, prediction?: number[]): CurvesetDetail {
  return {
    pair_id: "pr-000001",
    distance_km: 8.5,
    station_xy: [1, 2],
    points: labels.map((_, i) => [0.5 + 0.1 * i, 1.0, 0.5, 0]),
    current_labels: labels,
    revision,
    raster_meta: { trend: [1, 0], logf_range: [-0.7, 0.7], vel_range: [-0.4, 0.4] },
    prediction,
  };
}

describe("LabelSession", () => {
  it("lasso batch of five points makes five local edits", () => {
    const session = new LabelSession(detail([0, 0, 0, 0, 0, 0]));
    const n = session.applyBatch([0, 1, 2, 3, 4], 1);
    expect(n).toBe(5);
    expect(session.labels().slice(0, 5)).toEqual([1, 1, 1, 1, 1]);
    expect(session.unsavedChanges).toBe(true);
  });

  it("no-op edits are dropped from the batch", () => {
    const session = new LabelSession(detail([1, 0, 1]));
    expect(session.applyBatch([0, 1], 1)).toBe(1);
  });

  it("undo restores the previous labels batch-wise", () => {
    const session = new LabelSession(detail([0, 0, 2]));
    session.applyBatch([0, 1], 1);
    session.applyBatch([2], 0);
    expect(session.undo()).toBe(1);
    expect(session.labels()).toEqual([1, 1, 2]);
    expect(session.undo()).toBe(2);
    expect(session.labels()).toEqual([0, 0, 2]);
    expect(session.unsavedChanges).toBe(false);
  });

  it("save payload carries all local diffs in one PUT body", () => {
    const session = new LabelSession(detail([0, 0, 0], 4));
    session.applyBatch([0], 1);
    session.applyBatch([2], 2);
    const payload = session.payload("me");
    expect(payload.revision).toBe(4);
    expect(payload.edits).toEqual([
      { index: 0, label: 1 },
      { index: 2, label: 2 },
    ]);
  });

  it("committed clears the unsaved flag and bumps the revision", () => {
    const session = new LabelSession(detail([0, 0]));
    session.applyBatch([0], 1);
    session.committed(1);
    expect(session.unsavedChanges).toBe(false);
    expect(session.revision).toBe(1);
    expect(session.payload("me").edits).toEqual([]);
  });

  it("rebase after 409 keeps local edits on top of the fresh server view", () => {
    const session = new LabelSession(detail([0, 0, 0], 0));
    session.applyBatch([0], 1);
    // someone else pushed revision 1 changing point 2
    session.rebase(detail([0, 0, 2], 1));
    expect(session.revision).toBe(1);
    expect(session.labels()).toEqual([1, 0, 2]);
    expect(session.payload("me").edits).toEqual([{ index: 0, label: 1 }]);
  });
});

describe("review helpers", () => {
  it("disagreement count equals the off-diagonal of the confusion", () => {
    const labels = [0, 1, 2, 1, 0];
    const prediction = [0, 1, 1, 2, 0];
    expect(disagreementIndices(labels, prediction)).toEqual([2, 3]);
  });

  it("accept-all on a perfect prediction yields zero diffs", () => {
    const labels = [0, 1, 2];
    expect(acceptAllOfClass(labels, labels, 1)).toEqual([]);
  });

  it("accept-all relabels exactly the predicted class", () => {
    const labels = [0, 0, 0, 2];
    const prediction = [1, 0, 1, 1];
    expect(acceptAllOfClass(labels, prediction, 1)).toEqual([0, 2, 3]);
  });
});
