/**
 * Form state and verdict presentation tables.
 */
import type { ScoreResponse, TaxonomyDocument, VerdictToken } from './types.js';

export interface FormState {
  selections: Record<string, string>;
  phase: number;
  lastResponse: ScoreResponse | null;
}

export const DEFAULT_PHASE = 1;

/** Parameters grouped visually under "Pessoa" when the taxonomy has them. */
export const PERSON_GROUP = ['idade', 'educacao', 'emprego'];

export const VERDICT_TEXT: Record<VerdictToken, string> = {
  likely_true: 'Trata-se provavelmente de uma notícia verdadeira.',
  likely_fake: 'Trata-se provavelmente de uma notícia falsa.',
  alert: 'Não é possível verificar com certeza: deve estar atento.',
};

export const VERDICT_SHORT: Record<VerdictToken, string> = {
  likely_true: 'notícia verdadeira',
  likely_fake: 'notícia falsa',
  alert: 'estado de alerta',
};

export function emptyState(): FormState {
  return { selections: {}, phase: DEFAULT_PHASE, lastResponse: null };
}

/** True when every taxonomy parameter has a chosen option. */
export function isComplete(doc: TaxonomyDocument, selections: Record<string, string>): boolean {
  return doc.parameters.every((parameter) => Boolean(selections[parameter.id]));
}

export function optionLabel(doc: TaxonomyDocument, parameterId: string, optionId: string): string {
  const parameter = doc.parameters.find((p) => p.id === parameterId);
  const option = parameter?.options.find((o) => o.id === optionId);
  return option ? option.label : optionId;
}

export function parameterLabel(doc: TaxonomyDocument, parameterId: string): string {
  const parameter = doc.parameters.find((p) => p.id === parameterId);
  return parameter ? parameter.label : parameterId;
}
