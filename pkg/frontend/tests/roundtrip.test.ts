/**
 * Full user flow against recorded API payloads: load, fill the form,
 * submit, read the result, go back with selections preserved.
 */
import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { ApiClient } from '../src/api.js';
import { startApp } from '../src/main.js';
import {
  ALERT_SELECTIONS,
  flushMicrotasks,
  recordedFetch,
  TRUE_SELECTIONS,
} from './helpers.js';

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById('app') as HTMLElement;
});

afterEach(() => {
  vi.unstubAllGlobals();
});

async function waitFor<T>(query: () => T | null): Promise<T> {
  for (let attempt = 0; attempt < 50; attempt += 1) {
    const found = query();
    if (found) {
      return found;
    }
    await flushMicrotasks();
  }
  throw new Error('condition never became true');
}

function fillForm(selections: Record<string, string>): void {
  for (const [parameter, option] of Object.entries(selections)) {
    const select = root.querySelector(`#select-${parameter}`) as HTMLSelectElement;
    select.value = option;
    select.dispatchEvent(new Event('change'));
  }
}

describe('form round trip', () => {
  it('submits the reference selections and shows 87.92% on the true screen', async () => {
    vi.stubGlobal('fetch', recordedFetch());
    startApp(root, new ApiClient());
    await waitFor(() => root.querySelector('#select-pais'));

    fillForm(TRUE_SELECTIONS);
    const ok = root.querySelector('#ok-button') as HTMLButtonElement;
    expect(ok.disabled).toBe(false);
    ok.click();

    await waitFor(() => root.querySelector('#score-percent'));
    expect(root.querySelector('#score-percent')?.textContent).toBe('87.92%');
    expect(root.querySelector('.result-screen')?.classList.contains('verdict-likely_true')).toBe(true);
    expect(root.querySelector('#verdict-text')?.textContent).toContain('verdadeira');

    // Back restores the form with all six selections intact.
    (root.querySelector('#back-button') as HTMLButtonElement).click();
    await waitFor(() => root.querySelector('#select-pais'));
    for (const [parameter, option] of Object.entries(TRUE_SELECTIONS)) {
      const select = root.querySelector(`#select-${parameter}`) as HTMLSelectElement;
      expect(select.value).toBe(option);
    }
    expect((root.querySelector('#ok-button') as HTMLButtonElement).disabled).toBe(false);
  });

  it('shows the alert screen with the what-if list from the API', async () => {
    vi.stubGlobal('fetch', recordedFetch());
    startApp(root, new ApiClient());
    await waitFor(() => root.querySelector('#select-pais'));

    fillForm(ALERT_SELECTIONS);
    (root.querySelector('#ok-button') as HTMLButtonElement).click();

    await waitFor(() => root.querySelector('#score-percent'));
    expect(root.querySelector('#score-percent')?.textContent).toBe('55.76%');
    expect(root.querySelector('.result-screen')?.classList.contains('verdict-alert')).toBe(true);
    const entries = [...root.querySelectorAll('.what-if-entry')].map((li) => li.textContent);
    expect(entries).toContain('Fonte → Respeitada: notícia verdadeira');
  });

  it('surfaces field-level API errors inline', async () => {
    // Recorded 422: the server names the missing parameter.
    vi.stubGlobal('fetch', recordedFetch());
    startApp(root, new ApiClient());
    await waitFor(() => root.querySelector('#select-pais'));

    const partial = { ...TRUE_SELECTIONS };
    delete partial.fonte;
    fillForm(partial);
    // Bypass the disabled button to exercise the server-side contract.
    const ok = root.querySelector('#ok-button') as HTMLButtonElement;
    expect(ok.disabled).toBe(true);
    ok.disabled = false;
    ok.click();

    await waitFor(() => {
      const slot = root.querySelector('[data-error-for="fonte"]');
      return slot?.textContent ? slot : null;
    });
    expect(root.querySelector('[data-error-for="fonte"]')?.textContent).toContain('fonte');
  });

  it('offers retry when the taxonomy fetch fails, then recovers', async () => {
    let failures = 1;
    const recorded = recordedFetch();
    vi.stubGlobal('fetch', async (input: RequestInfo | URL, init?: RequestInit) => {
      if (failures > 0) {
        failures -= 1;
        throw new TypeError('network down');
      }
      return recorded(input, init);
    });

    startApp(root, new ApiClient());
    const retry = await waitFor(() => root.querySelector('#retry-button'));
    (retry as HTMLButtonElement).click();
    await waitFor(() => root.querySelector('#select-pais'));
    expect(root.querySelectorAll('select[data-parameter]').length).toBe(6);
  });

  it('shows a retryable banner when scoring hits a network failure', async () => {
    const recorded = recordedFetch();
    let scoreCalls = 0;
    vi.stubGlobal('fetch', async (input: RequestInfo | URL, init?: RequestInit) => {
      if (String(input).endsWith('/api/v1/score')) {
        scoreCalls += 1;
        if (scoreCalls === 1) {
          throw new TypeError('network down');
        }
      }
      return recorded(input, init);
    });

    startApp(root, new ApiClient());
    await waitFor(() => root.querySelector('#select-pais'));
    fillForm(TRUE_SELECTIONS);
    (root.querySelector('#ok-button') as HTMLButtonElement).click();

    const banner = await waitFor(() => {
      const node = root.querySelector('#form-banner');
      return node?.textContent ? node : null;
    });
    expect(banner.textContent).toContain('Falha de rede');

    (root.querySelector('.retry-button') as HTMLButtonElement).click();
    await waitFor(() => root.querySelector('#score-percent'));
    expect(root.querySelector('#score-percent')?.textContent).toBe('87.92%');
  });
});
