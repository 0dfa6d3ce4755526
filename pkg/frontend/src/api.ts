// Thin service client. All mathematics happens server-side; this module
// only moves bytes. At most one request should be in flight per session;
// as a second line of defense, responses arriving after a newer request
// has started are reported stale and must be dropped by the caller.

import type { QuiverJson } from "./types.js";

export interface MinimalResponse {
  ok: boolean;
  status: number;
  text(): Promise<string>;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<MinimalResponse>;

export type ApiResult =
  | { kind: "ok"; raw: string }
  | { kind: "error"; message: string }
  | { kind: "stale" };

export class ServiceClient {
  private sequence = 0;

  constructor(
    private readonly base: string,
    private readonly fetchImpl: FetchLike,
  ) {}

  private async request(path: string, init?: RequestInit): Promise<ApiResult> {
    const ticket = ++this.sequence;
    let response: MinimalResponse;
    try {
      response = await this.fetchImpl(this.base + path, init);
    } catch (err) {
      if (ticket !== this.sequence) return { kind: "stale" };
      return { kind: "error", message: `service unreachable: ${String(err)}` };
    }
    const raw = await response.text();
    if (ticket !== this.sequence) return { kind: "stale" };
    if (!response.ok) {
      let message = `service error (${response.status})`;
      try {
        const doc = JSON.parse(raw) as { error?: string };
        if (doc.error) message = doc.error;
      } catch {
        // non-JSON error body; keep the status message
      }
      return { kind: "error", message };
    }
    return { kind: "ok", raw };
  }

  private post(path: string, body: unknown): Promise<ApiResult> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  loadSeed(name: string): Promise<ApiResult> {
    return this.request(`/api/seed/${encodeURIComponent(name)}`);
  }

  loadModel(name: string): Promise<ApiResult> {
    return this.request(`/api/model/${encodeURIComponent(name)}`);
  }

  loadModelArDot(name: string): Promise<ApiResult> {
    return this.request(`/api/model/${encodeURIComponent(name)}/ar.dot`);
  }

  mutate(quiver: QuiverJson, vertex: number): Promise<ApiResult> {
    return this.post("/api/mutate", { quiver, vertex });
  }

  searchAcyclic(
    quiver: QuiverJson,
    limits?: { max_depth?: number; max_nodes?: number },
  ): Promise<ApiResult> {
    return this.post("/api/search/acyclic", { quiver, ...limits });
  }
}
