/** Application wiring: keyboard-first labeling over the service API.
 *
 * Keys: 1/2/0 set the brush class, a toggles axis mode, p toggles the
 * prediction overlay, u undoes a batch, s saves, n/b next/previous
 * curveset, F accepts all predicted picks of the brush class, T starts a
 * fine-tune job. Drag to lasso; click to relabel a single point.
 */

import { ApiClient, RevisionConflictError } from "./api.js";
import { LabelSession, acceptAllOfClass, disagreementIndices } from "./labels.js";
import { clickSelect, lassoSelect, type Vec2 } from "./lasso.js";
import { layoutScene, renderLassoPath, renderScatter, type Scene } from "./render.js";
import {
  CLASS_NAMES,
  FUNDAMENTAL,
  type CurvesetDetail,
  type Label,
  type ViewState,
} from "./types.js";

const SIZE = { width: 960, height: 620, margin: 48 };

export class App {
  private state: ViewState = {
    pairId: null,
    axisMode: "detrended",
    brushClass: FUNDAMENTAL,
    overlay: "labels",
    unsavedChanges: false,
  };
  private detail: CurvesetDetail | null = null;
  private session: LabelSession | null = null;
  private scene: Scene | null = null;
  private ids: string[] = [];
  private lasso: Vec2[] = [];
  private dragging = false;

  constructor(
    private readonly api: ApiClient,
    private readonly canvas: HTMLCanvasElement,
    private readonly status: HTMLElement,
    private readonly author: string = "analyst",
  ) {}

  async start(): Promise<void> {
    const listing = await this.api.listCurvesets(0, 500);
    this.ids = listing.items.map((item) => item.pair_id);
    this.canvas.width = SIZE.width;
    this.canvas.height = SIZE.height;
    this.bindEvents();
    if (this.ids.length > 0) {
      await this.open(this.ids[0]!);
    } else {
      this.say("dataset is empty");
    }
  }

  private async open(pairId: string): Promise<void> {
    this.detail = await this.api.curveset(pairId);
    this.session = new LabelSession(this.detail);
    this.state.pairId = pairId;
    this.state.unsavedChanges = false;
    this.redraw();
    this.say(`${pairId}: ${this.detail.points.length} points, revision ${this.detail.revision}`
      + (this.detail.prediction ? `, ${this.disagreements()} model disagreements` : ""));
  }

  private disagreements(): number {
    if (!this.detail?.prediction || !this.session) return 0;
    return disagreementIndices(this.session.labels(), this.detail.prediction).length;
  }

  private redraw(): void {
    if (!this.detail || !this.session) return;
    this.scene = layoutScene(this.detail.points, this.state.axisMode,
      this.detail.raster_meta, SIZE);
    const ctx = this.canvas.getContext("2d")!;
    renderScatter(ctx, this.detail.points, this.session.labels(), this.scene, {
      prediction: this.state.overlay === "prediction" ? this.detail.prediction : undefined,
      axisMode: this.state.axisMode,
    });
    renderLassoPath(ctx, this.lasso);
    this.state.unsavedChanges = this.session.unsavedChanges;
    this.updateHud();
  }

  private updateHud(): void {
    const hud = document.getElementById("hud");
    if (!hud) return;
    hud.textContent = [
      `pair ${this.state.pairId ?? "-"}`,
      `brush ${CLASS_NAMES[this.state.brushClass]}`,
      `axes ${this.state.axisMode}`,
      `overlay ${this.state.overlay}`,
      this.state.unsavedChanges ? "UNSAVED" : "saved",
    ].join("  |  ");
  }

  private say(message: string): void {
    this.status.textContent = message;
  }

  private bindEvents(): void {
    this.canvas.addEventListener("mousedown", (ev) => {
      this.dragging = true;
      this.lasso = [this.mouse(ev)];
    });
    this.canvas.addEventListener("mousemove", (ev) => {
      if (!this.dragging) return;
      this.lasso.push(this.mouse(ev));
      this.redraw();
    });
    this.canvas.addEventListener("mouseup", (ev) => {
      this.dragging = false;
      if (!this.scene || !this.session) return;
      if (this.lasso.length > 5) {
        const hit = lassoSelect(this.scene.positions, this.lasso);
        const n = this.session.applyBatch(hit, this.state.brushClass);
        this.say(`${n} points -> ${CLASS_NAMES[this.state.brushClass]}`);
      } else {
        const idx = clickSelect(this.scene.positions, this.mouse(ev), 8);
        if (idx !== null) {
          this.session.applyBatch([idx], this.state.brushClass);
          this.say(`point ${idx} -> ${CLASS_NAMES[this.state.brushClass]}`);
        }
      }
      this.lasso = [];
      this.redraw();
    });
    window.addEventListener("keydown", (ev) => void this.onKey(ev.key));
  }

  private mouse(ev: MouseEvent): Vec2 {
    const rect = this.canvas.getBoundingClientRect();
    return [ev.clientX - rect.left, ev.clientY - rect.top];
  }

  async onKey(key: string): Promise<void> {
    if (!this.session || !this.detail) return;
    switch (key) {
      case "0":
      case "1":
      case "2":
        this.state.brushClass = Number(key) as Label;
        break;
      case "a":
        this.state.axisMode = this.state.axisMode === "raw" ? "detrended" : "raw";
        break;
      case "p":
        this.state.overlay = this.state.overlay === "labels" ? "prediction" : "labels";
        break;
      case "u":
        this.say(`undid ${this.session.undo()} edits`);
        break;
      case "s":
        await this.save();
        break;
      case "n":
      case "b": {
        const at = this.ids.indexOf(this.state.pairId ?? "");
        const next = key === "n" ? at + 1 : at - 1;
        if (next >= 0 && next < this.ids.length) await this.open(this.ids[next]!);
        return;
      }
      case "F": {
        if (!this.detail.prediction) break;
        const hit = acceptAllOfClass(this.session.labels(), this.detail.prediction,
          this.state.brushClass);
        const n = this.session.applyBatch(hit, this.state.brushClass);
        this.say(`accepted ${n} predicted ${CLASS_NAMES[this.state.brushClass]} picks`);
        break;
      }
      case "T":
        await this.finetune();
        return;
      default:
        return;
    }
    this.redraw();
  }

  /** One PUT with every local edit; on 409 refetch, merge, and re-prompt. */
  private async save(): Promise<void> {
    if (!this.session) return;
    const payload = this.session.payload(this.author);
    if (payload.edits.length === 0) {
      this.say("nothing to save");
      return;
    }
    try {
      const { revision } = await this.api.putLabels(this.session.pairId, payload);
      this.session.committed(revision);
      this.say(`saved ${payload.edits.length} labels at revision ${revision}`);
    } catch (err) {
      if (err instanceof RevisionConflictError) {
        const fresh = await this.api.curveset(this.session.pairId);
        this.session.rebase(fresh);
        this.detail = fresh;
        this.say(`revision conflict: server moved to ${fresh.revision}; `
          + "your edits were re-applied locally - review and save again");
      } else {
        this.say(String(err));
      }
    }
    this.redraw();
  }

  private async finetune(): Promise<void> {
    try {
      const job = await this.api.startFinetune({});
      this.say(`fine-tune ${job.job_id} ${job.state}`);
      const poll = setInterval(async () => {
        const st = await this.api.jobStatus(job.job_id);
        this.say(`fine-tune ${st.job_id} ${st.state} (${Math.round(st.progress * 100)}%)`);
        if (st.state === "done" || st.state === "failed") {
          clearInterval(poll);
          if (st.state === "done" && this.state.pairId) await this.open(this.state.pairId);
        }
      }, 2000);
    } catch (err) {
      this.say(String(err));
    }
  }
}
