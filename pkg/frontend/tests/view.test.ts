import { beforeEach, describe, expect, it, vi } from 'vitest';

import { emptyState } from '../src/state.js';
import { renderForm, renderLoadError, renderResult } from '../src/view.js';
import { scoreAlertFixture, scoreTrueFixture, taxonomyFixture } from './helpers.js';

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById('app') as HTMLElement;
});

function selectValue(parameter: string, value: string): void {
  const select = root.querySelector(`#select-${parameter}`) as HTMLSelectElement;
  select.value = value;
  select.dispatchEvent(new Event('change'));
}

describe('renderForm', () => {
  it('builds one dropdown per parameter, from the document alone', () => {
    renderForm(root, taxonomyFixture, emptyState(), { onSubmit: () => undefined });
    const selects = root.querySelectorAll('select[data-parameter]');
    expect(selects.length).toBe(6);
    const pais = root.querySelector('#select-pais') as HTMLSelectElement;
    expect(pais.options.length).toBe(1 + 9); // placeholder + nine countries
  });

  it('renders a seventh dropdown for an extended taxonomy with no code change', () => {
    const extended = structuredClone(taxonomyFixture);
    extended.parameters.push({
      id: 'plataforma',
      label: 'Plataforma',
      kind: 'static',
      options: [
        { id: 'rede-social', label: 'Rede Social', weight: '0.00', band: null },
        { id: 'jornal', label: 'Jornal', weight: '100.00', band: null },
      ],
    });
    renderForm(root, extended, emptyState(), { onSubmit: () => undefined });
    expect(root.querySelectorAll('select[data-parameter]').length).toBe(7);
    expect(root.querySelector('#select-plataforma')).not.toBeNull();
  });

  it('groups idade, educacao and emprego under "Pessoa"', () => {
    renderForm(root, taxonomyFixture, emptyState(), { onSubmit: () => undefined });
    const group = root.querySelector('.person-group') as HTMLElement;
    expect(group.querySelector('legend')?.textContent).toBe('Pessoa');
    const grouped = [...group.querySelectorAll('select[data-parameter]')].map(
      (s) => (s as HTMLSelectElement).dataset.parameter,
    );
    expect(grouped).toEqual(['idade', 'educacao', 'emprego']);
    // país stays outside the group
    expect(group.querySelector('#select-pais')).toBeNull();
  });

  it('keeps OK disabled until every parameter is selected', () => {
    const state = emptyState();
    renderForm(root, taxonomyFixture, state, { onSubmit: () => undefined });
    const ok = root.querySelector('#ok-button') as HTMLButtonElement;
    expect(ok.disabled).toBe(true);
    selectValue('pais', 'portugal');
    selectValue('idade', 'jovem');
    selectValue('educacao', 'superior');
    selectValue('emprego', 'publico');
    selectValue('fonte', 'respeitada');
    expect(ok.disabled).toBe(true);
    selectValue('relacao', 'profissional');
    expect(ok.disabled).toBe(false);
    // Deselecting disables it again.
    selectValue('relacao', '');
    expect(ok.disabled).toBe(true);
  });

  it('hides the phase selector behind the advanced toggle, default 1', () => {
    const state = emptyState();
    renderForm(root, taxonomyFixture, state, { onSubmit: () => undefined });
    const advanced = root.querySelector('details.advanced') as HTMLDetailsElement;
    expect(advanced.open).toBe(false);
    const phase = root.querySelector('#phase-select') as HTMLSelectElement;
    expect(phase.value).toBe('1');
    phase.value = '3';
    phase.dispatchEvent(new Event('change'));
    expect(state.phase).toBe(3);
  });

  it('invokes the submit handler from the OK button', () => {
    const state = emptyState();
    const onSubmit = vi.fn();
    renderForm(root, taxonomyFixture, state, { onSubmit });
    for (const [parameter, option] of Object.entries({
      pais: 'portugal', idade: 'jovem', educacao: 'superior',
      emprego: 'publico', fonte: 'respeitada', relacao: 'profissional',
    })) {
      selectValue(parameter, option);
    }
    (root.querySelector('#ok-button') as HTMLButtonElement).click();
    expect(onSubmit).toHaveBeenCalledTimes(1);
  });
});

describe('renderResult', () => {
  it('shows the API percent and a distinct true-verdict state', () => {
    renderResult(root, taxonomyFixture, scoreTrueFixture, { onBack: () => undefined });
    expect(root.querySelector('#score-percent')?.textContent).toBe('87.92%');
    expect(root.querySelector('.result-screen')?.classList.contains('verdict-likely_true')).toBe(true);
    expect(root.querySelector('#verdict-text')?.textContent).toContain('verdadeira');
    // One contribution row per parameter, straight from the response.
    expect(root.querySelectorAll('.contributions tr').length).toBe(1 + 6);
    expect(root.querySelector('.what-if-empty')).not.toBeNull();
  });

  it('lists what-if entries verbatim from the response', () => {
    renderResult(root, taxonomyFixture, scoreAlertFixture, { onBack: () => undefined });
    const entries = [...root.querySelectorAll('.what-if-entry')].map((li) => li.textContent);
    expect(entries).toEqual([
      'Educação → Ensino Superior: notícia verdadeira',
      'Fonte → Respeitada: notícia verdadeira',
    ]);
    expect(root.querySelector('.result-screen')?.classList.contains('verdict-alert')).toBe(true);
  });

  it('wires the back button', () => {
    const onBack = vi.fn();
    renderResult(root, taxonomyFixture, scoreTrueFixture, { onBack });
    (root.querySelector('#back-button') as HTMLButtonElement).click();
    expect(onBack).toHaveBeenCalledTimes(1);
  });
});

describe('renderLoadError', () => {
  it('offers a retry affordance instead of a dead form', () => {
    const onRetry = vi.fn();
    renderLoadError(root, 'sem rede', { onRetry });
    expect(root.querySelector('.load-error')?.textContent).toBe('sem rede');
    (root.querySelector('#retry-button') as HTMLButtonElement).click();
    expect(onRetry).toHaveBeenCalledTimes(1);
  });
});
