import { describe, expect, it } from "vitest";

import { FetchLike, MinimalResponse, ServiceClient } from "../src/api.js";
import { fixture } from "./fixtures.js";

function response(body: string, status = 200): MinimalResponse {
  return { ok: status < 400, status, text: async () => body };
}

describe("service client", () => {
  it("returns raw bytes on success", async () => {
    const raw = fixture("mutate-a3-vertex1.json");
    const calls: string[] = [];
    const client = new ServiceClient("", async (url, init) => {
      calls.push(url);
      expect(init?.method).toBe("POST");
      return response(raw);
    });
    const result = await client.mutate({ vertices: ["1", "2", "3"], arrows: [] }, 1);
    expect(result).toEqual({ kind: "ok", raw });
    expect(calls).toEqual(["/api/mutate"]);
  });

  it("surfaces service error documents", async () => {
    const client = new ServiceClient("", async () =>
      response('{"error":"mutation vertex 7 out of range","schema":"v1"}', 400));
    const result = await client.mutate({ vertices: ["1"], arrows: [] }, 7);
    expect(result.kind).toBe("error");
    if (result.kind === "error") expect(result.message).toContain("out of range");
  });

  it("reports network failures as errors", async () => {
    const client = new ServiceClient("", async () => {
      throw new Error("connection refused");
    });
    const result = await client.loadSeed("a3-linear");
    expect(result.kind).toBe("error");
  });

  it("discards stale responses by sequence number", async () => {
    const resolvers: ((r: MinimalResponse) => void)[] = [];
    const impl: FetchLike = () =>
      new Promise((resolve) => resolvers.push(resolve));
    const client = new ServiceClient("", impl);
    const first = client.loadSeed("a3-linear");
    const second = client.loadSeed("kronecker3");
    // the older request resolves after the newer one started
    resolvers[0]!(response(fixture("seed-a3-linear.json")));
    resolvers[1]!(response(fixture("seed-kronecker3.json")));
    expect((await first).kind).toBe("stale");
    const latest = await second;
    expect(latest.kind).toBe("ok");
    if (latest.kind === "ok") {
      expect(latest.raw).toBe(fixture("seed-kronecker3.json"));
    }
  });

  it("url-encodes seed names", async () => {
    const urls: string[] = [];
    const client = new ServiceClient("http://x", async (url) => {
      urls.push(url);
      return response(fixture("seed-a3-linear.json"));
    });
    await client.loadSeed("a3 linear");
    expect(urls[0]).toBe("http://x/api/seed/a3%20linear");
  });
});
