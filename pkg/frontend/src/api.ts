/** Thin HTTP client for the designer service.
 *
 * Every method maps to exactly one request; the fetch implementation is
 * injectable so tests can run against a scripted fake.
 */

import type { Closure, ExportRecord, Move, MoveRequest, Snapshot } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function decodeError(response: Response): Promise<ApiError> {
  let detail = response.statusText;
  try {
    const body = (await response.json()) as { detail?: string };
    if (typeof body.detail === "string") {
      detail = body.detail;
    }
  } catch {
    // non-JSON error body: keep the status text
  }
  return new ApiError(response.status, detail);
}

export class DesignerApi {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      throw await decodeError(response);
    }
    return (await response.json()) as T;
  }

  newSession(caps?: Record<number, number>): Promise<Snapshot> {
    return this.json<Snapshot>("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ caps: caps ?? null }),
    });
  }

  getSession(sid: string): Promise<Snapshot> {
    return this.json<Snapshot>(`/sessions/${sid}`);
  }

  legalMoves(sid: string): Promise<Move[]> {
    return this.json<Move[]>(`/sessions/${sid}/moves`);
  }

  applyMove(sid: string, move: MoveRequest): Promise<Snapshot> {
    return this.json<Snapshot>(`/sessions/${sid}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(move),
    });
  }

  undo(sid: string): Promise<Snapshot> {
    return this.json<Snapshot>(`/sessions/${sid}/moves`, { method: "DELETE" });
  }

  closure(sid: string, max?: number): Promise<Closure> {
    const query = max === undefined ? "" : `?max=${max}`;
    return this.json<Closure>(`/sessions/${sid}/closure${query}`);
  }

  async render(sid: string): Promise<string> {
    const response = await this.fetchImpl(`${this.baseUrl}/sessions/${sid}/render`);
    if (!response.ok) {
      throw await decodeError(response);
    }
    return response.text();
  }

  exportRecord(sid: string): Promise<ExportRecord> {
    return this.json<ExportRecord>(`/sessions/${sid}/export`);
  }
}
