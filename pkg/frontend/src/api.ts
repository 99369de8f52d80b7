/**
 * Thin typed client for the three design-server endpoints.
 *
 * The fetch implementation is injectable so tests (and non-browser
 * hosts) can supply their own; the default is the global `fetch`.
 */

import type {
  CatalogResponse,
  CurveResponse,
  Point,
  SpecFile,
  SuitabilityReport,
} from './types.js';

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export interface ApiClient {
  check(spec: SpecFile, seq: number): Promise<SuitabilityReport>;
  curve(
    spec: SpecFile,
    control: Point[],
    seq: number,
    samples?: number,
  ): Promise<CurveResponse>;
  catalog(): Promise<CatalogResponse>;
}

/** Raised for non-2xx responses, carrying the server's error message. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

async function postJson(
  fetchImpl: FetchLike,
  url: string,
  body: unknown,
): Promise<unknown> {
  const res = await fetchImpl(url, {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(body),
  });
  const payload = (await res.json()) as Record<string, unknown>;
  if (!res.ok) {
    const message =
      typeof payload?.error === 'string' ? payload.error : `HTTP ${res.status}`;
    throw new ApiError(res.status, message);
  }
  return payload;
}

export function createApiClient(
  baseUrl = '',
  fetchImpl: FetchLike = fetch as unknown as FetchLike,
): ApiClient {
  return {
    async check(spec, seq) {
      const body = { ...spec, seq };
      return (await postJson(
        fetchImpl,
        `${baseUrl}/api/check`,
        body,
      )) as SuitabilityReport;
    },

    async curve(spec, control, seq, samples = 100) {
      const body = { ...spec, control, samples, seq };
      return (await postJson(
        fetchImpl,
        `${baseUrl}/api/curve`,
        body,
      )) as CurveResponse;
    },

    async catalog() {
      const res = await fetchImpl(`${baseUrl}/api/catalog`);
      if (!res.ok) throw new ApiError(res.status, `HTTP ${res.status}`);
      return (await res.json()) as CatalogResponse;
    },
  };
}
