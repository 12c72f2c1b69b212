// Typed client for the boom kinematics JSON API (/v1). The designer never
// computes geometry itself; everything shown on screen comes back from here.

export interface DesignParams {
  n: number;
  beta_degrees: number;
  L: number;
}

export interface Metrics {
  length: number;
  curvature: number;
  planar: boolean;
}

export interface MeshFacet {
  labels: [string, string, string];
  rhombus: number;
}

export interface ModuleMesh {
  index: number;
  state: string;
  vertices: Record<string, [number, number, number]>;
  facets: MeshFacet[];
}

export interface ChainResponse {
  metrics: Metrics;
  frames: number[][];
  endpoint: [number, number, number];
  mesh: { modules: ModuleMesh[] };
  residuals: Record<string, number>;
}

export interface WorkspacePoint {
  word: string;
  position: [number, number, number];
  multiplicity: number;
}

export interface WorkspaceResponse {
  m: number;
  raw_count: number;
  points: WorkspacePoint[];
}

export interface GrayPlan {
  sequence: string[];
  flips: { module: number; bit: number }[];
  state_count: number;
  flip_count: number;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function decode<T>(resp: Response): Promise<T> {
  const body = await resp.json().catch(() => ({ error: resp.statusText }));
  if (!resp.ok) {
    throw new ApiError(resp.status, (body as { error?: string }).error ?? resp.statusText);
  }
  return body as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "http://127.0.0.1:8787/v1") {}

  async defaults(): Promise<DesignParams & { beta_gold_degrees: number }> {
    return decode(await fetch(`${this.baseUrl}/design`));
  }

  async chain(
    design: DesignParams,
    states: string[],
    signal?: AbortSignal,
  ): Promise<ChainResponse> {
    const resp = await fetch(`${this.baseUrl}/chain`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ design, states, metadata: {} }),
      signal,
    });
    return decode(resp);
  }

  async workspace(m: number, design: DesignParams): Promise<WorkspaceResponse> {
    const qs = new URLSearchParams({
      m: String(m),
      n: String(design.n),
      beta_degrees: String(design.beta_degrees),
      L: String(design.L),
    });
    return decode(await fetch(`${this.baseUrl}/workspace?${qs}`));
  }

  async graycode(m: number): Promise<GrayPlan> {
    const resp = await fetch(`${this.baseUrl}/graycode`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ m }),
    });
    return decode(resp);
  }
}
