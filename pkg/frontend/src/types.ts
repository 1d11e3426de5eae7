/**
 * Wire types for the scoring API.
 *
 * These mirror the server's taxonomy document and score endpoint payloads
 * exactly; the UI performs no arithmetic of its own.
 */

export type VerdictToken = 'likely_fake' | 'alert' | 'likely_true';

export interface TaxonomyOption {
  id: string;
  label: string;
  /** Decimal percent string ("70.00"); absent for phased parameters. */
  weight?: string;
  band: 'min' | 'mid' | 'max' | null;
}

export interface TaxonomyParameter {
  id: string;
  label: string;
  kind: 'static' | 'phased';
  options: TaxonomyOption[];
}

export interface TaxonomyDocument {
  version: string;
  parameters: TaxonomyParameter[];
}

export interface ScoreRequest {
  selections: Record<string, string>;
  phase?: number;
}

export interface Contribution {
  parameter: string;
  option: string;
  weight_percent: string;
}

export interface WhatIfEntry {
  parameter: string;
  option: string;
  verdict: VerdictToken;
}

export interface ScoreResponse {
  score_percent: string;
  verdict: VerdictToken;
  contributions: Contribution[];
  what_if: WhatIfEntry[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  parameter?: string;
}
