/**
 * Application wiring: fetch the taxonomy, then alternate between the form
 * and the result screen. All percentages and verdicts come verbatim from
 * the API.
 */
import { ApiClient, ApiError, SupersededError } from './api.js';
import { emptyState, FormState } from './state.js';
import type { TaxonomyDocument } from './types.js';
import { renderForm, renderLoadError, renderResult, showFormError } from './view.js';

export function startApp(root: HTMLElement, client: ApiClient): void {
  const state: FormState = emptyState();

  const showForm = (doc: TaxonomyDocument) => {
    renderForm(root, doc, state, { onSubmit: () => submit(doc) });
  };

  const submit = async (doc: TaxonomyDocument) => {
    try {
      const response = await client.score({ selections: { ...state.selections }, phase: state.phase });
      state.lastResponse = response;
      renderResult(root, doc, response, { onBack: () => showForm(doc) });
    } catch (error) {
      if (error instanceof SupersededError) {
        return; // a newer submission owns the screen
      }
      if (error instanceof ApiError) {
        showFormError(root, { message: error.message, parameter: error.parameter }, {
          onSubmit: () => submit(doc),
        });
        return;
      }
      showFormError(
        root,
        { message: 'Falha de rede ao calcular o resultado.', retryable: true },
        { onSubmit: () => submit(doc) },
      );
    }
  };

  const load = async () => {
    try {
      const doc = await client.fetchTaxonomy();
      showForm(doc);
    } catch {
      renderLoadError(root, 'Não foi possível carregar os parâmetros.', { onRetry: () => load() });
    }
  };

  void load();
}

// Browser bootstrap; tests drive startApp directly.
if (typeof document !== 'undefined' && document.getElementById('app')) {
  const apiBase = document.documentElement.dataset.apiBase ?? '';
  startApp(document.getElementById('app') as HTMLElement, new ApiClient(apiBase));
}
