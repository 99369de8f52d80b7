import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import type { ApiClient } from '../src/api.js';
import { createStudio, defaultPolygon } from '../src/state.js';
import type {
  CurveResponse,
  SpecFile,
  SuitabilityReport,
} from '../src/types.js';

const FLIP = -4.0; // admissibility flip point of the beta entry

function cubicSpec(beta = 0): SpecFile {
  return {
    interval: [0, 2],
    knots: [1],
    sections: [{ tokens: ['1', 'x', 'x^2', 'x^3'] }],
    connections: [
      [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, beta, 0, 1],
      ],
    ],
  };
}

function reportFor(spec: SpecFile, seq: number): SuitabilityReport {
  const beta = spec.connections?.[0]?.[3]?.[1] ?? 0;
  const suitable = beta > FLIP;
  return {
    suitable,
    m: 4,
    k: 1,
    failure: suitable
      ? null
      : {
          level: 1,
          interval: 1,
          function: 2,
          coefficient: 1,
          difference: -0.1,
          kind: 'monotonicity',
        },
    reason: null,
    warnings: [],
    seq,
  };
}

function curveFor(seq: number): CurveResponse {
  return {
    seq,
    t: [0, 1, 1, 2],
    side: ['+', '-', '+', '-'],
    points: [
      [0, 0],
      [1.5, 0.2],
      [1.5, 0.2],
      [3, 0],
    ],
    basis: [
      [1, 0, 0, 0],
      [0.1, 0.4, 0.4, 0.1],
      [0.1, 0.4, 0.4, 0.1],
      [0, 0, 0, 1],
    ],
    weights: [{ level: 1, x: [0, 2], side: ['+', '-'], values: [3, 3] }],
  };
}

interface MockApi extends ApiClient {
  checkCalls: number;
  curveCalls: number;
}

function mockApi(): MockApi {
  const api: MockApi = {
    checkCalls: 0,
    curveCalls: 0,
    check(spec, seq) {
      api.checkCalls += 1;
      return Promise.resolve(reportFor(spec, seq));
    },
    curve(_spec, _control, seq) {
      api.curveCalls += 1;
      return Promise.resolve(curveFor(seq));
    },
    catalog() {
      return Promise.resolve({ tokens: [], critical_lengths: [] });
    },
  };
  return api;
}

const BETA_PATH = { matrix: 0, row: 3, col: 1 };

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe('loading a spec', () => {
  it('fetches verdict and curve once and shows a green badge', async () => {
    const api = mockApi();
    const studio = createStudio(api);
    await studio.loadSpec(cubicSpec(0));
    expect(api.checkCalls).toBe(1);
    expect(api.curveCalls).toBe(1);
    expect(studio.getState().badge).toBe('green');
    expect(studio.getState().curve?.points[0]).toEqual([0, 0]);
  });

  it('fits a default polygon sized to the space dimension', () => {
    expect(defaultPolygon(4)).toHaveLength(4);
  });
});

describe('parameter changes', () => {
  it('ignores no-op changes (same value, no request)', async () => {
    const api = mockApi();
    const studio = createStudio(api);
    await studio.loadSpec(cubicSpec(0));
    studio.bindSlider(BETA_PATH);
    studio.onParameterChange(0); // identical to current value
    await vi.advanceTimersByTimeAsync(1000);
    expect(api.checkCalls).toBe(1); // only the load
  });

  it('coalesces rapid slider ticks into one request pair per window', async () => {
    const api = mockApi();
    const studio = createStudio(api, { debounceMs: 100 });
    await studio.loadSpec(cubicSpec(0));
    studio.bindSlider(BETA_PATH);
    for (let i = 1; i <= 20; i++) {
      studio.onParameterChange(i);
      await vi.advanceTimersByTimeAsync(5); // 20 ticks in 100 ms
    }
    await vi.advanceTimersByTimeAsync(200);
    expect(api.checkCalls).toBe(2); // load + one debounced check
    expect(api.curveCalls).toBe(2);
    expect(studio.getState().seq).toBeGreaterThan(0);
  });

  it('turns the badge red with the failure tuple within one window when '
     + 'sliding below the flip point', async () => {
    const api = mockApi();
    const studio = createStudio(api, { debounceMs: 100 });
    await studio.loadSpec(cubicSpec(100));
    studio.bindSlider(BETA_PATH);
    expect(studio.getState().badge).toBe('green');
    for (const beta of [50, 10, 0, -4.5]) {
      studio.onParameterChange(beta);
      await vi.advanceTimersByTimeAsync(10);
    }
    await vi.advanceTimersByTimeAsync(100); // one debounce window
    const state = studio.getState();
    expect(state.badge).toBe('red');
    expect(state.report?.failure).toMatchObject({
      level: 1,
      interval: 1,
      function: 2,
    });
  });

  it('throws without a slider binding', async () => {
    const studio = createStudio(mockApi());
    await studio.loadSpec(cubicSpec());
    expect(() => studio.onParameterChange(1)).toThrow();
  });
});

describe('sequence-number discipline', () => {
  it('drops stale responses that resolve after newer ones', async () => {
    const resolvers: ((r: SuitabilityReport) => void)[] = [];
    const pendingSpecs: SpecFile[] = [];
    const pendingSeqs: number[] = [];
    const api = mockApi();
    api.check = (spec, seq) => {
      pendingSpecs.push(spec);
      pendingSeqs.push(seq);
      return new Promise((resolve) => resolvers.push(resolve));
    };
    const studio = createStudio(api, { debounceMs: 10 });
    void studio.loadSpec(cubicSpec(0)); // check #0 stays pending
    studio.bindSlider(BETA_PATH);

    studio.onParameterChange(-10); // unsuitable value
    await vi.advanceTimersByTimeAsync(20); // request #1 issued
    studio.onParameterChange(5); // suitable value
    await vi.advanceTimersByTimeAsync(20); // request #2 issued
    expect(resolvers).toHaveLength(3);

    // newest (suitable) resolves first, then the stale unsuitable one
    resolvers[2]!(reportFor(pendingSpecs[2]!, pendingSeqs[2]!));
    await vi.advanceTimersByTimeAsync(1);
    expect(studio.getState().badge).toBe('green');
    resolvers[1]!(reportFor(pendingSpecs[1]!, pendingSeqs[1]!));
    await vi.advanceTimersByTimeAsync(1);
    expect(studio.getState().badge).toBe('green'); // stale result dropped
  });
});

describe('control-point drags', () => {
  it('re-fetches the curve only, never the verdict', async () => {
    const api = mockApi();
    const studio = createStudio(api, { debounceMs: 10 });
    await studio.loadSpec(cubicSpec(0));
    for (let i = 0; i < 30; i++) {
      studio.onControlPointDrag(1, [1, 1 + i / 10]);
      await vi.advanceTimersByTimeAsync(2);
    }
    await vi.advanceTimersByTimeAsync(50);
    expect(api.checkCalls).toBe(1); // only the initial load
    expect(api.curveCalls).toBeGreaterThan(1);
    expect(studio.getState().control[1]).toEqual([1, 1 + 29 / 10]);
  });

  it('rejects out-of-range indices', async () => {
    const studio = createStudio(mockApi());
    await studio.loadSpec(cubicSpec(0));
    expect(() => studio.onControlPointDrag(9, [0, 0])).toThrow();
  });
});

describe('network failures', () => {
  it('raises the stale-data banner and keeps the last honest verdict', async () => {
    const api = mockApi();
    const studio = createStudio(api, { debounceMs: 10 });
    await studio.loadSpec(cubicSpec(0));
    expect(studio.getState().badge).toBe('green');

    api.check = () => Promise.reject(new Error('connection refused'));
    api.curve = () => Promise.reject(new Error('connection refused'));
    studio.bindSlider(BETA_PATH);
    studio.onParameterChange(-10);
    await vi.advanceTimersByTimeAsync(50);

    const state = studio.getState();
    expect(state.staleData).toBe(true);
    expect(state.badge).toBe('green'); // never a fabricated verdict
  });
});
