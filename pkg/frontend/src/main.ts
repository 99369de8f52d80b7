/**
 * Browser entry point: wires the studio state machine to the DOM.
 *
 * Layout (see index.html): a spec textarea with load/export buttons, a
 * matrix-entry slider, the suitability badge, and three canvases
 * (curve + polygon, basis functions, weight functions).
 */

import { createApiClient } from './api.js';
import { editableEntries, formatEntryPath, parseEntryPath } from './matrix.js';
import { drawBasisPanel, drawCurvePanel, drawWeightPanel, type Ctx } from './plot.js';
import { createStudio } from './state.js';
import type { Point, SpecFile } from './types.js';

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function ctx2d(id: string): Ctx {
  const canvas = byId<HTMLCanvasElement>(id);
  const ctx = canvas.getContext('2d');
  if (!ctx) throw new Error(`no 2d context on #${id}`);
  return ctx as unknown as Ctx;
}

export function start(): void {
  const api = createApiClient('');
  const studio = createStudio(api);

  const specBox = byId<HTMLTextAreaElement>('spec-json');
  const badge = byId<HTMLSpanElement>('badge');
  const failureBox = byId<HTMLSpanElement>('failure');
  const banner = byId<HTMLDivElement>('stale-banner');
  const entrySelect = byId<HTMLSelectElement>('entry-select');
  const slider = byId<HTMLInputElement>('entry-slider');
  const sliderValue = byId<HTMLSpanElement>('entry-value');

  const curveCtx = ctx2d('curve-canvas');
  const basisCtx = ctx2d('basis-canvas');
  const weightCtx = ctx2d('weight-canvas');

  studio.subscribe((state) => {
    badge.textContent =
      state.badge === 'unknown' ? '…' : state.badge === 'green' ? 'suitable' : 'unsuitable';
    badge.className = `badge badge-${state.badge}`;
    const f = state.report?.failure ?? null;
    failureBox.textContent = f
      ? `failure: level ${f.level}, interval ${f.interval}, function ${f.function}`
      : '';
    banner.hidden = !state.staleData;
    if (state.spec && state.curve) {
      drawCurvePanel(curveCtx, state.spec, state.curve, state.control, f);
      drawBasisPanel(basisCtx, state.curve);
      drawWeightPanel(weightCtx, state.curve);
    }
  });

  function populateEntrySelect(spec: SpecFile): void {
    entrySelect.innerHTML = '';
    const m = spec.sections[0]?.tokens.length ?? 0;
    spec.knots.forEach((_, mi) => {
      for (const { row, col } of editableEntries(m)) {
        const opt = document.createElement('option');
        opt.value = formatEntryPath({ matrix: mi, row, col });
        opt.textContent = `R_${mi + 1}[${row + 1},${col + 1}]`;
        entrySelect.appendChild(opt);
      }
    });
    if (entrySelect.value) studio.bindSlider(parseEntryPath(entrySelect.value));
  }

  byId<HTMLButtonElement>('load-spec').addEventListener('click', () => {
    const spec = JSON.parse(specBox.value) as SpecFile;
    void studio.loadSpec(spec).then(() => populateEntrySelect(spec));
  });

  byId<HTMLButtonElement>('export-spec').addEventListener('click', () => {
    const spec = studio.getState().spec;
    if (spec) specBox.value = JSON.stringify(spec, null, 2);
  });

  entrySelect.addEventListener('change', () => {
    studio.bindSlider(parseEntryPath(entrySelect.value));
  });

  slider.addEventListener('input', () => {
    const value = Number(slider.value);
    sliderValue.textContent = slider.value;
    studio.onParameterChange(value);
  });

  // Control-point dragging on the curve canvas: nearest point within
  // 15 px follows the pointer; only /api/curve is re-fetched.
  const curveCanvas = byId<HTMLCanvasElement>('curve-canvas');
  let dragging = -1;

  function canvasPoint(ev: MouseEvent): Point {
    const rect = curveCanvas.getBoundingClientRect();
    return [ev.clientX - rect.left, ev.clientY - rect.top];
  }

  function dataPoint(ev: MouseEvent): Point {
    // inverse of the viewport used by drawCurvePanel
    const state = studio.getState();
    const pts = [
      ...(state.curve?.points ?? []).map((p) => [p[0]!, p[1]!] as Point),
      ...state.control,
    ];
    const xs = pts.map((p) => p[0]);
    const ys = pts.map((p) => p[1]);
    const [px, py] = canvasPoint(ev);
    const margin = 10;
    const w = curveCanvas.width - 2 * margin;
    const h = curveCanvas.height - 2 * margin;
    const xmin = Math.min(...xs);
    const xspan = Math.max(...xs) - xmin || 1;
    const ymin = Math.min(...ys);
    const yspan = Math.max(...ys) - ymin || 1;
    return [
      xmin + ((px - margin) / w) * xspan,
      ymin + ((curveCanvas.height - margin - py) / h) * yspan,
    ];
  }

  curveCanvas.addEventListener('mousedown', (ev) => {
    const [x, y] = dataPoint(ev);
    const state = studio.getState();
    let best = -1;
    let bestDist = Infinity;
    state.control.forEach(([cx, cy], i) => {
      const d = Math.hypot(cx - x, cy - y);
      if (d < bestDist) {
        bestDist = d;
        best = i;
      }
    });
    if (best >= 0) dragging = best;
  });
  curveCanvas.addEventListener('mousemove', (ev) => {
    if (dragging >= 0) studio.onControlPointDrag(dragging, dataPoint(ev));
  });
  window.addEventListener('mouseup', () => {
    dragging = -1;
  });
}

if (typeof document !== 'undefined' && document.getElementById('badge')) {
  start();
}
