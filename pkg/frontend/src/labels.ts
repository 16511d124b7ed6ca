/** Local label editing: batched, undoable, never authoritative.
 *
 * The session holds the server's labels plus a stack of local edit
 * batches. Nothing is persisted here; `payload()` produces the PUT body
 * and the service remains the single source of truth.
 */

import type { CurvesetDetail, Label, LabelEdit } from "./types.js";

interface EditBatch {
  edits: LabelEdit[];
  previous: LabelEdit[];
}

export class LabelSession {
  readonly pairId: string;
  revision: number;
  private serverLabels: number[];
  private local: number[];
  private undoStack: EditBatch[] = [];

  constructor(detail: CurvesetDetail) {
    this.pairId = detail.pair_id;
    this.revision = detail.revision;
    this.serverLabels = [...detail.current_labels];
    this.local = [...detail.current_labels];
  }

  labels(): readonly number[] {
    return this.local;
  }

  /** True iff local labels differ from the server revision's view. */
  get unsavedChanges(): boolean {
    return this.local.some((l, i) => l !== this.serverLabels[i]);
  }

  /** Apply one batch of edits (one lasso or one accept-all). No-ops drop out. */
  applyBatch(indices: number[], label: Label): number {
    const edits: LabelEdit[] = [];
    const previous: LabelEdit[] = [];
    for (const index of indices) {
      if (index < 0 || index >= this.local.length) continue;
      if (this.local[index] === label) continue;
      previous.push({ index, label: this.local[index]! });
      edits.push({ index, label });
      this.local[index] = label;
    }
    if (edits.length > 0) {
      this.undoStack.push({ edits, previous });
    }
    return edits.length;
  }

  /** Undo the most recent batch; returns how many points were restored. */
  undo(): number {
    const batch = this.undoStack.pop();
    if (!batch) return 0;
    for (const { index, label } of batch.previous) {
      this.local[index] = label;
    }
    return batch.previous.length;
  }

  /** All local differences vs the server, as one PUT payload. */
  payload(author: string): { revision: number; author: string; edits: LabelEdit[] } {
    const edits: LabelEdit[] = [];
    this.local.forEach((label, index) => {
      if (label !== this.serverLabels[index]) {
        edits.push({ index, label });
      }
    });
    return { revision: this.revision, author, edits };
  }

  /** Mark the current local view as persisted under a new revision. */
  committed(newRevision: number): void {
    this.revision = newRevision;
    this.serverLabels = [...this.local];
    this.undoStack = [];
  }

  /** Merge a fresh server detail after a 409: keep local edits on top. */
  rebase(detail: CurvesetDetail): void {
    const pendingEdits = this.payload("").edits;
    this.revision = detail.revision;
    this.serverLabels = [...detail.current_labels];
    this.local = [...detail.current_labels];
    this.undoStack = [];
    for (const { index, label } of pendingEdits) {
      if (index < this.local.length) this.local[index] = label;
    }
  }
}

/** Points where the model disagrees with the current labels: equals the
 * off-diagonal of the point-level confusion matrix for this curveset. */
export function disagreementIndices(labels: readonly number[], prediction: readonly number[]): number[] {
  const out: number[] = [];
  for (let i = 0; i < Math.min(labels.length, prediction.length); i++) {
    if (labels[i] !== prediction[i]) out.push(i);
  }
  return out;
}

/** Accept every model pick of one class: the indices to relabel. */
export function acceptAllOfClass(
  labels: readonly number[],
  prediction: readonly number[],
  cls: Label,
): number[] {
  const out: number[] = [];
  for (let i = 0; i < Math.min(labels.length, prediction.length); i++) {
    if (prediction[i] === cls && labels[i] !== cls) out.push(i);
  }
  return out;
}
