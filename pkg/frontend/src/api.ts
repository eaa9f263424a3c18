// Thin client for the compute service.  The UI performs no mathematics of
// its own: every number it renders came out of one of these calls.

import type {
  ConfigJson,
  FitResponse,
  Pair,
  ReductionJson,
  SolveReportJson,
  SolveRequest,
} from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public detail?: unknown,
  ) {
    super(message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, init);
    const body = await resp.json().catch(() => null);
    if (!resp.ok) {
      const code = body?.code ?? `HTTP${resp.status}`;
      const message = body?.message ?? resp.statusText;
      throw new ApiRequestError(resp.status, code, message, body?.detail);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<{ status: string; version: string }> {
    return this.request("/healthz");
  }

  solve(req: SolveRequest): Promise<SolveReportJson> {
    return this.post("/api/solve", req);
  }

  fitCurve(points: Pair[], K = 32): Promise<FitResponse> {
    return this.post("/api/curve/fit", { points, K });
  }

  pinwheel(n: number, theta: number): Promise<ConfigJson> {
    return this.request(`/api/pinwheel?n=${n}&theta=${theta}`);
  }

  forms(config: ConfigJson): Promise<Record<string, unknown>> {
    return this.post("/api/forms", { config });
  }

  verify(suite: string, nTrials?: number, seed = 0): Promise<{ passed: boolean }> {
    return this.post("/api/verify", { suite, n_trials: nTrials, seed });
  }

  reduction(config: ConfigJson): Promise<ReductionJson> {
    return this.post("/api/reduce", { config });
  }

  cassini(config: ConfigJson): Promise<Record<string, unknown>> {
    return this.post("/api/cassini", { config });
  }
}
