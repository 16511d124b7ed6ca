import { describe, expect, it, vi } from "vitest";
import { ApiClient, ApiError, RevisionConflictError } from "../src/api.js";

function mockFetch(status: number, body: unknown) {
  return vi.fn(async () => ({
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  })) as unknown as typeof fetch;
}

describe("ApiClient", () => {
  it("lists curvesets with paging parameters", async () => {
    const fetcher = mockFetch(200, { items: [], total: 0, page: 2, page_size: 10 });
    const api = new ApiClient("", fetcher);
    const listing = await api.listCurvesets(2, 10);
    expect(listing.page).toBe(2);
    expect(fetcher).toHaveBeenCalledWith(
      "/api/curvesets?page=2&page_size=10",
      expect.objectContaining({ method: "GET" }),
    );
  });

  it("PUTs one batched labels payload", async () => {
    const fetcher = mockFetch(200, { revision: 3 });
    const api = new ApiClient("", fetcher);
    const result = await api.putLabels("pr-1", {
      revision: 2,
      author: "me",
      edits: [{ index: 0, label: 1 }],
    });
    expect(result.revision).toBe(3);
    const [, init] = (fetcher as any).mock.calls[0];
    expect(JSON.parse(init.body).edits).toHaveLength(1);
  });

  it("maps 409 to RevisionConflictError with the server revision", async () => {
    const api = new ApiClient("", mockFetch(409, { error: "stale", current_revision: 7 }));
    await expect(
      api.putLabels("pr-1", { revision: 1, author: "me", edits: [{ index: 0, label: 1 }] }),
    ).rejects.toThrowError(RevisionConflictError);
    try {
      await api.putLabels("pr-1", { revision: 1, author: "me", edits: [{ index: 0, label: 1 }] });
    } catch (err) {
      expect((err as RevisionConflictError).currentRevision).toBe(7);
    }
  });

  it("maps other failures onto ApiError with the server message", async () => {
    const api = new ApiClient("", mockFetch(400, { error: "only 2 labeled curvesets" }));
    await expect(api.startFinetune()).rejects.toThrowError(ApiError);
    await expect(api.startFinetune()).rejects.toThrowError(/only 2 labeled/);
  });

  it("escapes pair ids in URLs", async () => {
    const fetcher = mockFetch(200, {});
    const api = new ApiClient("", fetcher);
    await api.curveset("weird/id");
    expect(fetcher).toHaveBeenCalledWith("/api/curvesets/weird%2Fid",
      expect.objectContaining({ method: "GET" }));
  });
});
