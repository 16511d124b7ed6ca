/** Wire types of the labeling service JSON API. */

export const NOISE = 0;
export const FUNDAMENTAL = 1;
export const OVERTONE = 2;
export type Label = 0 | 1 | 2;

export const CLASS_NAMES: Record<Label, string> = {
  [NOISE]: "noise",
  [FUNDAMENTAL]: "fundamental",
  [OVERTONE]: "overtone",
};

/** Marker colors: fundamental red, first overtone blue, noise grey. */
export const CLASS_COLORS: Record<Label, string> = {
  [NOISE]: "#9a9a9a",
  [FUNDAMENTAL]: "#d62728",
  [OVERTONE]: "#1f77b4",
};

/** One candidate pick: [frequency Hz, group velocity km/s, amplitude 0..1, label]. */
export type PointRow = [number, number, number, number];

export interface CurvesetSummary {
  pair_id: string;
  n_points: number;
  labeled_fraction: number;
}

export interface CurvesetListing {
  items: CurvesetSummary[];
  total: number;
  page: number;
  page_size: number;
}

export interface RasterMeta {
  trend: [number, number]; // v = a + b * log10(f)
  logf_range: [number, number];
  vel_range: [number, number];
}

export interface CurvesetDetail {
  pair_id: string;
  distance_km: number;
  station_xy: [number, number];
  points: PointRow[];
  current_labels: number[];
  revision: number;
  raster_meta: RasterMeta;
  prediction?: number[];
}

export interface LabelEdit {
  index: number;
  label: number;
}

export interface JobStatus {
  job_id: string;
  kind: string;
  state: "queued" | "running" | "done" | "failed";
  progress: number;
  error?: string;
  checkpoint?: string;
}

export type AxisMode = "raw" | "detrended";
export type OverlayMode = "labels" | "prediction";

/** Everything the view needs to draw and to know whether a save is pending. */
export interface ViewState {
  pairId: string | null;
  axisMode: AxisMode;
  brushClass: Label;
  overlay: OverlayMode;
  unsavedChanges: boolean;
}
