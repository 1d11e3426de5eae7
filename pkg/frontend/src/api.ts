/**
 * Thin client for the scoring API.
 *
 * At most one score request is in flight: submitting again aborts the
 * pending request, so a slow earlier answer can never overwrite a newer
 * one.
 */
import type { ScoreRequest, ScoreResponse, TaxonomyDocument, ApiErrorBody } from './types.js';

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly parameter?: string;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.parameter = body.parameter;
  }
}

/** Thrown to the superseded caller when a newer submission takes over. */
export class SupersededError extends Error {
  constructor() {
    super('request superseded by a newer submission');
  }
}

async function errorFromResponse(response: Response): Promise<ApiError> {
  let body: ApiErrorBody = { code: 'unknown_error', message: `HTTP ${response.status}` };
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    // non-JSON error body: keep the fallback
  }
  return new ApiError(response.status, body);
}

export class ApiClient {
  private readonly baseUrl: string;
  private pending: AbortController | null = null;

  constructor(baseUrl = '') {
    this.baseUrl = baseUrl.replace(/\/$/, '');
  }

  async fetchTaxonomy(): Promise<TaxonomyDocument> {
    const response = await fetch(`${this.baseUrl}/api/v1/taxonomy`);
    if (!response.ok) {
      throw await errorFromResponse(response);
    }
    return (await response.json()) as TaxonomyDocument;
  }

  async score(request: ScoreRequest): Promise<ScoreResponse> {
    if (this.pending) {
      this.pending.abort();
    }
    const controller = new AbortController();
    this.pending = controller;
    try {
      const response = await fetch(`${this.baseUrl}/api/v1/score`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(request),
        signal: controller.signal,
      });
      if (!response.ok) {
        throw await errorFromResponse(response);
      }
      return (await response.json()) as ScoreResponse;
    } catch (error) {
      if (controller.signal.aborted) {
        throw new SupersededError();
      }
      throw error;
    } finally {
      if (this.pending === controller) {
        this.pending = null;
      }
    }
  }
}
