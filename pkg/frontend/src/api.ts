/** Typed client for the silt explorer HTTP API (JSON, versioned base path).
 *
 * The client owns no math and no state beyond the base URL: every number
 * shown in the UI comes from a server payload.
 */

export interface Instance {
  label: string;
  vertices: number;
}

export interface Summand {
  id: string;
  shift: number;
  name: string;
}

export interface EndoSummary {
  summands: string[];
  dim: number;
  cartan: number[][];
  arrows: number[][];
  acyclic: boolean;
}

export interface Triangle {
  direction: string;
  left: string;
  mid: string[];
  right: string;
  removed: string;
  added: string;
}

export interface SessionState {
  id: string;
  quiver: string;
  m: number;
  object: string;
  summands: Summand[];
  in_window: boolean;
  endo: EndoSummary;
  history_length: number;
}

export interface MutateResponse extends SessionState {
  triangle: Triangle;
}

export interface HistoryEntry {
  index: number;
  dir: string;
  removed: string;
  added: string;
}

export interface Move {
  index: number;
  dir: string;
  summand: string;
  target: string[] | null;
  added?: string;
  in_window?: boolean;
  error?: string;
}

export interface FullState extends SessionState {
  history: HistoryEntry[];
  moves: Move[];
}

/** Minimal structural view of a fetch Response; lets tests inject mocks. */
export interface FetchResponse {
  ok: boolean;
  status: number;
  statusText: string;
  text(): Promise<string>;
}

export type FetchLike = (
  path: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<FetchResponse>;

export class ApiClientError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiClientError";
    this.status = status;
    this.code = code;
  }
}

export class SiltClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = "/api/v1", fetchImpl?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    const impl = fetchImpl ?? (globalThis.fetch as unknown as FetchLike);
    if (!impl) {
      throw new Error("no fetch implementation available");
    }
    // bind so the browser fetch keeps its expected receiver
    this.fetchImpl = (path, init) => impl(path, init);
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: Parameters<FetchLike>[1] = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchImpl(this.base + path, init);
    const text = await res.text();
    let data: unknown = null;
    if (text) {
      try {
        data = JSON.parse(text);
      } catch {
        throw new ApiClientError(res.status, "bad-payload",
          "response is not JSON");
      }
    }
    if (!res.ok) {
      const err = (data ?? {}) as { code?: string; message?: string };
      throw new ApiClientError(res.status, err.code ?? "unknown",
        err.message ?? res.statusText);
    }
    return data as T;
  }

  instances(): Promise<{ instances: Instance[] }> {
    return this.request("GET", "/instances");
  }

  createSession(
    quiver: string,
    m: number,
    start: string | null = null,
  ): Promise<SessionState> {
    return this.request("POST", "/sessions", { quiver, m, start });
  }

  getSession(id: string): Promise<FullState> {
    return this.request("GET", `/sessions/${id}`);
  }

  mutate(id: string, index: number, dir: string): Promise<MutateResponse> {
    return this.request("POST", `/sessions/${id}/mutate`, { index, dir });
  }

  undo(id: string): Promise<SessionState> {
    return this.request("POST", `/sessions/${id}/undo`);
  }
}
