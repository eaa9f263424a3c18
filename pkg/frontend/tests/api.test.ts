import { describe, expect, it } from "vitest";

import { ApiClient, ApiRequestError } from "../src/api.js";

function mockFetch(routes: Record<string, { status: number; body: unknown }>) {
  const calls: { url: string; init?: RequestInit }[] = [];
  const fn = async (url: string, init?: RequestInit): Promise<Response> => {
    calls.push({ url, init });
    const hit = Object.entries(routes).find(([prefix]) => url.startsWith(prefix));
    if (!hit) return new Response("not found", { status: 404 });
    const [, spec] = hit;
    return new Response(JSON.stringify(spec.body), {
      status: spec.status,
      headers: { "Content-Type": "application/json" },
    });
  };
  return { fn, calls };
}

describe("api client", () => {
  it("posts solve requests and returns the report", async () => {
    const report = { inscriptions: [], n_starts: 10, n_converged: 0, n_constant_discarded: 0, truncated: false };
    const { fn, calls } = mockFetch({ "/api/solve": { status: 200, body: report } });
    const client = new ApiClient("", fn);
    const got = await client.solve({
      curve: { K: 1, coeffs: [] },
      config: { alpha: [], beta: [] },
      degree: 2,
      opts: { seed: 0 },
    });
    expect(got).toEqual(report);
    expect(calls[0].init?.method).toBe("POST");
    const sent = JSON.parse(String(calls[0].init?.body));
    expect(sent.degree).toBe(2);
  });

  it("surfaces service error codes", async () => {
    const { fn } = mockFetch({
      "/api/solve": { status: 422, body: { code: "InvalidCurve", message: "nope" } },
    });
    const client = new ApiClient("", fn);
    await expect(
      client.solve({ curve: { K: 1, coeffs: [] }, config: { alpha: [], beta: [] }, degree: 2, opts: {} }),
    ).rejects.toMatchObject({ code: "InvalidCurve", status: 422 });
  });

  it("builds pinwheel query urls", async () => {
    const { fn, calls } = mockFetch({ "/api/pinwheel": { status: 200, body: { alpha: [], beta: [] } } });
    await new ApiClient("", fn).pinwheel(3, 1.0472);
    expect(calls[0].url).toBe("/api/pinwheel?n=3&theta=1.0472");
  });

  it("error without json body still raises ApiRequestError", async () => {
    const fn = async () => new Response("boom", { status: 500 });
    await expect(new ApiClient("", fn).health()).rejects.toBeInstanceOf(ApiRequestError);
  });
});
