/**
 * Shared test scaffolding: recorded API payloads and a fetch stub that
 * serves them, matching score requests by their selections.
 */
import { readFileSync } from 'node:fs';
import { join } from 'node:path';
import type { ScoreRequest, ScoreResponse, TaxonomyDocument } from '../src/types.js';

function fixture<T>(name: string): T {
  // vitest runs with the package root as cwd.
  return JSON.parse(readFileSync(join(process.cwd(), 'tests', 'fixtures', name), 'utf-8')) as T;
}

export const taxonomyFixture = fixture<TaxonomyDocument>('taxonomy.json');
export const scoreTrueFixture = fixture<ScoreResponse>('score_true.json');
export const scoreAlertFixture = fixture<ScoreResponse>('score_alert.json');
export const scoreFakeFixture = fixture<ScoreResponse>('score_fake.json');
export const errorMissingFonteFixture = fixture<{ code: string; message: string; parameter: string }>(
  'error_missing_fonte.json',
);

export const TRUE_SELECTIONS: Record<string, string> = {
  pais: 'portugal',
  idade: 'jovem',
  educacao: 'superior',
  emprego: 'publico',
  fonte: 'respeitada',
  relacao: 'profissional',
};

export const ALERT_SELECTIONS: Record<string, string> = {
  pais: 'angola',
  idade: 'adulto',
  educacao: 'secundario',
  emprego: 'privado',
  fonte: 'privada',
  relacao: 'amizade',
};

function sameSelections(a: Record<string, string>, b: Record<string, string>): boolean {
  const aKeys = Object.keys(a).sort();
  const bKeys = Object.keys(b).sort();
  return aKeys.length === bKeys.length && aKeys.every((k, i) => k === bKeys[i] && a[k] === b[k]);
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

/** fetch stub answering the taxonomy and the recorded score scenarios. */
export function recordedFetch(): typeof fetch {
  return async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    if (url.endsWith('/api/v1/taxonomy')) {
      return json(taxonomyFixture);
    }
    if (url.endsWith('/api/v1/score')) {
      const request = JSON.parse(String(init?.body)) as ScoreRequest;
      if (sameSelections(request.selections, TRUE_SELECTIONS)) {
        return json(scoreTrueFixture);
      }
      if (sameSelections(request.selections, ALERT_SELECTIONS)) {
        return json(scoreAlertFixture);
      }
      if (!('fonte' in request.selections)) {
        return json(errorMissingFonteFixture, 422);
      }
      return json({ code: 'unknown_option', message: 'not a recorded scenario' }, 400);
    }
    throw new Error(`unexpected request: ${url}`);
  };
}

export async function flushMicrotasks(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
}
