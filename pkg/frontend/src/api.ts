/** Typed client for the labeling service JSON API. */

import type {
  CurvesetDetail,
  CurvesetListing,
  JobStatus,
  LabelEdit,
} from "./types.js";

export class RevisionConflictError extends Error {
  constructor(readonly currentRevision: number) {
    super(`label revision is stale; server is at ${currentRevision}`);
  }
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(`HTTP ${status}: ${message}`);
  }
}

type Fetcher = typeof fetch;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetcher: Fetcher = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetcher(`${this.base}${path}`, {
      method,
      headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    const doc = await response.json();
    if (response.status === 409) {
      throw new RevisionConflictError(doc.current_revision ?? -1);
    }
    if (!response.ok) {
      throw new ApiError(response.status, doc.error ?? "unknown error");
    }
    return doc as T;
  }

  listCurvesets(page = 0, pageSize = 100): Promise<CurvesetListing> {
    return this.request("GET", `/api/curvesets?page=${page}&page_size=${pageSize}`);
  }

  curveset(pairId: string): Promise<CurvesetDetail> {
    return this.request("GET", `/api/curvesets/${encodeURIComponent(pairId)}`);
  }

  /** One batched write per save; 409 surfaces as RevisionConflictError. */
  putLabels(
    pairId: string,
    payload: { revision: number; author: string; edits: LabelEdit[] },
  ): Promise<{ revision: number }> {
    return this.request("PUT", `/api/curvesets/${encodeURIComponent(pairId)}/labels`, payload);
  }

  startFinetune(options: Record<string, unknown> = {}): Promise<JobStatus> {
    return this.request("POST", "/api/jobs/finetune", options);
  }

  jobStatus(jobId: string): Promise<JobStatus> {
    return this.request("GET", `/api/jobs/${encodeURIComponent(jobId)}`);
  }

  metrics(): Promise<Record<string, unknown>> {
    return this.request("GET", "/api/metrics");
  }
}
