/**
 * DOM rendering for the two screens: the selection form and the result.
 *
 * Everything is generated from the taxonomy document; no parameter or
 * option names are hardcoded (the "Pessoa" grouping only collects ids
 * that happen to exist).
 */
import type { ScoreResponse, TaxonomyDocument } from './types.js';
import {
  FormState,
  PERSON_GROUP,
  VERDICT_SHORT,
  VERDICT_TEXT,
  isComplete,
  optionLabel,
  parameterLabel,
} from './state.js';

export interface FormHandlers {
  onSubmit: () => void;
}

export interface ResultHandlers {
  onBack: () => void;
}

export interface RetryHandlers {
  onRetry: () => void;
}

export interface InlineError {
  message: string;
  parameter?: string;
  retryable?: boolean;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

function selectFor(
  doc: TaxonomyDocument,
  parameterId: string,
  state: FormState,
  onChange: () => void,
): HTMLSelectElement {
  const parameter = doc.parameters.find((p) => p.id === parameterId);
  const select = el('select', { id: `select-${parameterId}`, 'data-parameter': parameterId });
  select.append(el('option', { value: '' }, ['(escolher)']));
  for (const option of parameter?.options ?? []) {
    select.append(el('option', { value: option.id }, [option.label]));
  }
  select.value = state.selections[parameterId] ?? '';
  select.addEventListener('change', () => {
    if (select.value) {
      state.selections[parameterId] = select.value;
    } else {
      delete state.selections[parameterId];
    }
    onChange();
  });
  return select;
}

function fieldRow(doc: TaxonomyDocument, parameterId: string, select: HTMLSelectElement): HTMLElement {
  return el('div', { class: 'field', 'data-field': parameterId }, [
    el('label', { for: `select-${parameterId}` }, [parameterLabel(doc, parameterId)]),
    select,
    el('span', { class: 'field-error', 'data-error-for': parameterId }),
  ]);
}

export function renderForm(
  root: HTMLElement,
  doc: TaxonomyDocument,
  state: FormState,
  handlers: FormHandlers,
): void {
  root.replaceChildren();
  const form = el('div', { class: 'screen form-screen' });
  form.append(el('h1', {}, ['Detetor de Fake News']));

  const okButton = el('button', { id: 'ok-button', type: 'button' }, ['OK']) as HTMLButtonElement;
  const refreshOk = () => {
    okButton.disabled = !isComplete(doc, state.selections);
  };

  const personIds = PERSON_GROUP.filter((id) => doc.parameters.some((p) => p.id === id));
  let personBox: HTMLElement | null = null;
  for (const parameter of doc.parameters) {
    const row = fieldRow(doc, parameter.id, selectFor(doc, parameter.id, state, refreshOk));
    if (personIds.includes(parameter.id)) {
      if (!personBox) {
        personBox = el('fieldset', { class: 'person-group' }, [el('legend', {}, ['Pessoa'])]);
        form.append(personBox);
      }
      personBox.append(row);
    } else {
      form.append(row);
    }
  }

  const phaseSelect = el('select', { id: 'phase-select' });
  for (const phase of [1, 2, 3, 4]) {
    phaseSelect.append(el('option', { value: String(phase) }, [`Fase ${phase}`]));
  }
  phaseSelect.value = String(state.phase);
  phaseSelect.addEventListener('change', () => {
    state.phase = Number(phaseSelect.value);
  });
  form.append(
    el('details', { class: 'advanced' }, [
      el('summary', {}, ['Avançado']),
      el('div', { class: 'field' }, [
        el('label', { for: 'phase-select' }, ['Fase de pesos do emprego']),
        phaseSelect,
      ]),
    ]),
  );

  const banner = el('div', { class: 'banner', id: 'form-banner' });
  form.append(banner);

  okButton.addEventListener('click', () => handlers.onSubmit());
  form.append(el('div', { class: 'actions' }, [okButton]));
  refreshOk();
  root.append(form);
}

/** Attach a submit error to the rendered form (field-level when possible). */
export function showFormError(root: HTMLElement, error: InlineError, handlers: FormHandlers): void {
  if (error.parameter) {
    const slot = root.querySelector(`[data-error-for="${error.parameter}"]`);
    if (slot) {
      slot.textContent = error.message;
      return;
    }
  }
  const banner = root.querySelector('#form-banner');
  if (banner) {
    banner.textContent = error.message;
    if (error.retryable) {
      const retry = el('button', { type: 'button', class: 'retry-button' }, ['Tentar novamente']);
      retry.addEventListener('click', () => handlers.onSubmit());
      banner.append(' ', retry);
    }
  }
}

export function renderResult(
  root: HTMLElement,
  doc: TaxonomyDocument,
  response: ScoreResponse,
  handlers: ResultHandlers,
): void {
  root.replaceChildren();
  const screen = el('div', { class: `screen result-screen verdict-${response.verdict}` });
  screen.append(el('h1', {}, ['Detetor de Fake News']));
  screen.append(el('p', { class: 'verdict-text', id: 'verdict-text' }, [VERDICT_TEXT[response.verdict]]));
  screen.append(el('p', { class: 'score-percent', id: 'score-percent' }, [`${response.score_percent}%`]));

  const contributions = el('table', { class: 'contributions' });
  contributions.append(
    el('tr', {}, [el('th', {}, ['Parâmetro']), el('th', {}, ['Opção']), el('th', {}, ['Peso'])]),
  );
  for (const c of response.contributions) {
    contributions.append(
      el('tr', {}, [
        el('td', {}, [parameterLabel(doc, c.parameter)]),
        el('td', {}, [optionLabel(doc, c.parameter, c.option)]),
        el('td', {}, [`${c.weight_percent}%`]),
      ]),
    );
  }
  screen.append(el('h2', {}, ['Contribuições']), contributions);

  const whatIf = el('ul', { class: 'what-if', id: 'what-if' });
  if (response.what_if.length === 0) {
    whatIf.append(el('li', { class: 'what-if-empty' }, ['Nenhuma alteração única mudaria o resultado.']));
  }
  for (const w of response.what_if) {
    whatIf.append(
      el('li', { class: `what-if-entry verdict-${w.verdict}` }, [
        `${parameterLabel(doc, w.parameter)} → ${optionLabel(doc, w.parameter, w.option)}: ${VERDICT_SHORT[w.verdict]}`,
      ]),
    );
  }
  screen.append(el('h2', {}, ['E se mudasse uma opção?']), whatIf);

  const back = el('button', { id: 'back-button', type: 'button' }, ['Voltar']);
  back.addEventListener('click', () => handlers.onBack());
  screen.append(el('div', { class: 'actions' }, [back]));
  root.append(screen);
}

export function renderLoadError(root: HTMLElement, message: string, handlers: RetryHandlers): void {
  root.replaceChildren();
  const retry = el('button', { id: 'retry-button', type: 'button' }, ['Tentar novamente']);
  retry.addEventListener('click', () => handlers.onRetry());
  root.append(
    el('div', { class: 'screen error-screen' }, [
      el('h1', {}, ['Detetor de Fake News']),
      el('p', { class: 'load-error' }, [message]),
      retry,
    ]),
  );
}
