// Typed client for the toric-atlas HTTP JSON API.
//
// The explorer never computes quantum math locally: every number it
// shows comes out of one of these response types.

export type ComplexPair = [number, number];

export interface ToricPointJson {
  convex: number[];
  phases: number[];
  defined: boolean[];
  pivot: number;
}

export interface GateJson {
  name: string;
  radix: number;
  tags: string[];
  printed_scalar: number;
  entries: ComplexPair[][];
}

export type EntanglementClass = "separable" | "partial" | "maximal";

export interface EntanglementReportJson {
  concurrence: number;
  schmidt: number[];
  class: EntanglementClass;
  simplex_on_me_segment: boolean;
  simplex_on_sep_surface: boolean;
}

export type Notation = "math" | "engineering";

export interface StepRequest {
  state: ComplexPair[];
  gate_name?: string;
  custom_matrix?: ComplexPair[][];
  notation: Notation;
  tol_class: number;
}

export interface StepResponse {
  new_state: ComplexPair[];
  toric_point: ToricPointJson;
  entanglement_report: EntanglementReportJson | null;
  min_distance_to_separable?: number;
}

export interface CatalogResponse {
  radix: number;
  gates: GateJson[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; json(): Promise<unknown>; text(): Promise<string> }>;

const asError = async (status: number, payload: unknown): Promise<ApiError> => {
  const body = payload as { code?: string; message?: string } | null;
  return new ApiError(status, body?.code ?? "error", body?.message ?? `HTTP ${status}`);
};

export class AtlasClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`);
    const payload = await resp.json();
    if (resp.status >= 400) throw await asError(resp.status, payload);
    return payload as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = await resp.json();
    if (resp.status >= 400) throw await asError(resp.status, payload);
    return payload as T;
  }

  catalog(radix: number): Promise<CatalogResponse> {
    return this.getJson(`/api/catalog?radix=${radix}`);
  }

  step(request: StepRequest): Promise<StepResponse> {
    return this.postJson("/api/state/step", request);
  }

  /** Server-side render for export parity with the CLI goldens. */
  async renderScene(scene: unknown, widthPx = 640, heightPx = 560): Promise<string> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/render`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ scene, width_px: widthPx, height_px: heightPx }),
    });
    if (resp.status >= 400) throw await asError(resp.status, await resp.json());
    return resp.text();
  }
}

export const basisState = (dim: number, index: number): ComplexPair[] =>
  Array.from({ length: dim }, (_, k) => [k === index ? 1 : 0, 0] as ComplexPair);
