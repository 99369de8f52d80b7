/**
 * Studio state machine: debounced live validation with sequence-number
 * discipline.
 *
 * Parameter edits (slider ticks on a connection-matrix entry) issue a
 * debounced POST /api/check + /api/curve pair — at most one pair per
 * debounce window, so <= 10 requests/second at the default 100 ms
 * window.  Control-point drags re-fetch /api/curve only: the verdict
 * does not depend on the polygon.  Every request carries a fresh
 * sequence number and responses older than the newest applied one are
 * dropped, so the badge always reflects the latest edit.  Network
 * failures raise a stale-data banner and never fake a verdict.
 */

import type { ApiClient } from './api.js';
import type { EntryPath } from './matrix.js';
import { entryValue, withEntry } from './matrix.js';
import type {
  CurveResponse,
  Point,
  SpecFile,
  SuitabilityReport,
} from './types.js';

export interface StudioState {
  spec: SpecFile | null;
  control: Point[];
  boundEntry: EntryPath | null;
  report: SuitabilityReport | null;
  curve: CurveResponse | null;
  /** 'green' | 'red' | 'unknown' — derived from the latest report. */
  badge: 'green' | 'red' | 'unknown';
  /** true while the displayed data may not match the current spec. */
  staleData: boolean;
  /** highest sequence number handed out so far. */
  seq: number;
}

export interface Studio {
  getState(): Readonly<StudioState>;
  /** Load a spec file and (re)fit the default control polygon. */
  loadSpec(spec: SpecFile, control?: Point[]): Promise<void>;
  /** Bind the slider to a lower-triangle matrix entry. */
  bindSlider(path: EntryPath): void;
  /** Slider tick: debounced check + curve refresh. */
  onParameterChange(value: number): void;
  /** Drag one control point: debounced curve-only refresh. */
  onControlPointDrag(index: number, position: Point): void;
  /** Subscribe to state updates (returns an unsubscribe function). */
  subscribe(listener: (state: Readonly<StudioState>) => void): () => void;
  /** Flush pending debounced work immediately (for tests/teardown). */
  flush(): Promise<void>;
}

const DEFAULT_DEBOUNCE_MS = 100;

/** Evenly spaced default polygon for an m-dimensional space. */
export function defaultPolygon(m: number): Point[] {
  return Array.from({ length: m }, (_, i) => [i, i % 2 === 0 ? 0 : 1]);
}

export function createStudio(
  api: ApiClient,
  options: { debounceMs?: number } = {},
): Studio {
  const debounceMs = options.debounceMs ?? DEFAULT_DEBOUNCE_MS;

  const state: StudioState = {
    spec: null,
    control: [],
    boundEntry: null,
    report: null,
    curve: null,
    badge: 'unknown',
    staleData: false,
    seq: 0,
  };

  const listeners = new Set<(s: Readonly<StudioState>) => void>();
  let checkTimer: ReturnType<typeof setTimeout> | null = null;
  let curveTimer: ReturnType<typeof setTimeout> | null = null;
  let appliedCheckSeq = 0;
  let appliedCurveSeq = 0;
  let pending: Promise<void> = Promise.resolve();

  function notify(): void {
    for (const fn of listeners) fn(state);
  }

  function applyReport(report: SuitabilityReport, seq: number): void {
    if (seq < appliedCheckSeq) return; // stale response: drop
    appliedCheckSeq = seq;
    state.report = report;
    state.badge = report.suitable ? 'green' : 'red';
    state.staleData = false;
    notify();
  }

  function applyCurve(curve: CurveResponse, seq: number): void {
    if (seq < appliedCurveSeq) return; // stale response: drop
    appliedCurveSeq = seq;
    state.curve = curve;
    state.staleData = false;
    notify();
  }

  function failStale(): void {
    state.staleData = true;
    notify();
  }

  function fetchCheckAndCurve(): Promise<void> {
    if (!state.spec) return Promise.resolve();
    const seq = ++state.seq;
    const spec = state.spec;
    const control = state.control;
    const work = Promise.all([
      api.check(spec, seq).then(
        (report) => applyReport(report, seq),
        () => failStale(),
      ),
      api.curve(spec, control, seq).then(
        (curve) => applyCurve(curve, seq),
        () => failStale(),
      ),
    ]).then(() => undefined);
    pending = pending.then(() => work);
    return work;
  }

  function fetchCurveOnly(): Promise<void> {
    if (!state.spec) return Promise.resolve();
    const seq = ++state.seq;
    const work = api.curve(state.spec, state.control, seq).then(
      (curve) => applyCurve(curve, seq),
      () => failStale(),
    );
    pending = pending.then(() => work);
    return work;
  }

  return {
    getState: () => state,

    async loadSpec(spec, control) {
      state.spec = spec;
      state.control = control ?? defaultPolygon(spec.sections[0]?.tokens.length ?? 0);
      state.report = null;
      state.curve = null;
      state.badge = 'unknown';
      notify();
      await fetchCheckAndCurve();
    },

    bindSlider(path) {
      state.boundEntry = path;
    },

    onParameterChange(value) {
      if (!state.spec || !state.boundEntry) {
        throw new Error('no spec loaded or no slider binding');
      }
      if (entryValue(state.spec, state.boundEntry) === value) {
        return; // no-op change: no request
      }
      state.spec = withEntry(state.spec, state.boundEntry, value);
      notify();
      if (checkTimer !== null) clearTimeout(checkTimer);
      checkTimer = setTimeout(() => {
        checkTimer = null;
        void fetchCheckAndCurve();
      }, debounceMs);
    },

    onControlPointDrag(index, position) {
      if (index < 0 || index >= state.control.length) {
        throw new Error(`control point index ${index} out of range`);
      }
      state.control = state.control.map((p, i) =>
        i === index ? position : p,
      );
      notify();
      if (curveTimer !== null) clearTimeout(curveTimer);
      curveTimer = setTimeout(() => {
        curveTimer = null;
        void fetchCurveOnly();
      }, debounceMs);
    },

    subscribe(listener) {
      listeners.add(listener);
      return () => listeners.delete(listener);
    },

    async flush() {
      if (checkTimer !== null) {
        clearTimeout(checkTimer);
        checkTimer = null;
        await fetchCheckAndCurve();
      }
      if (curveTimer !== null) {
        clearTimeout(curveTimer);
        curveTimer = null;
        await fetchCurveOnly();
      }
      await pending;
    },
  };
}
