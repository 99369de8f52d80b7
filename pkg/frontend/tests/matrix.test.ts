import { describe, expect, it } from 'vitest';

import {
  editableEntries,
  entryValue,
  formatEntryPath,
  isAdmissibleValue,
  isEditableEntry,
  parseEntryPath,
  withEntry,
} from '../src/matrix.js';
import type { SpecFile } from '../src/types.js';

const cubicSpec: SpecFile = {
  interval: [0, 2],
  knots: [1],
  sections: [{ tokens: ['1', 'x', 'x^2', 'x^3'] }],
  connections: [
    [
      [1, 0, 0, 0],
      [0, 1, 0, 0],
      [0, 0, 1, 0],
      [0, 0, 0, 1],
    ],
  ],
};

describe('entry paths', () => {
  it('round-trips through the CLI path syntax', () => {
    const p = { matrix: 0, row: 3, col: 1 };
    expect(parseEntryPath(formatEntryPath(p))).toEqual(p);
  });

  it('rejects malformed paths', () => {
    expect(() => parseEntryPath('connections/0/3/1')).toThrow();
    expect(() => parseEntryPath('knots/0/entries/3/1')).toThrow();
    expect(() => parseEntryPath('connections/x/entries/3/1')).toThrow();
  });
});

describe('editable region', () => {
  it('is the lower triangle plus diagonal, minus first row/column', () => {
    expect(isEditableEntry(4, 3, 1)).toBe(true);
    expect(isEditableEntry(4, 2, 2)).toBe(true); // diagonal
    expect(isEditableEntry(4, 0, 0)).toBe(false); // fixed unit corner
    expect(isEditableEntry(4, 3, 0)).toBe(false); // fixed first column
    expect(isEditableEntry(4, 1, 2)).toBe(false); // upper triangle
  });

  it('enumerates exactly the editable entries of a 4x4 matrix', () => {
    const entries = editableEntries(4);
    expect(entries).toHaveLength(6); // (1,1) (2,1) (2,2) (3,1) (3,2) (3,3)
    for (const { row, col } of entries) {
      expect(isEditableEntry(4, row, col)).toBe(true);
    }
  });
});

describe('value constraints', () => {
  it('requires positive diagonal entries', () => {
    expect(isAdmissibleValue(2, 2, 0.5)).toBe(true);
    expect(isAdmissibleValue(2, 2, 0)).toBe(false);
    expect(isAdmissibleValue(2, 2, -1)).toBe(false);
    expect(isAdmissibleValue(3, 1, -100)).toBe(true); // off-diagonal free
    expect(isAdmissibleValue(3, 1, NaN)).toBe(false);
  });
});

describe('withEntry', () => {
  it('replaces one entry without mutating the original spec', () => {
    const path = { matrix: 0, row: 3, col: 1 };
    const next = withEntry(cubicSpec, path, -3.9);
    expect(entryValue(next, path)).toBe(-3.9);
    expect(entryValue(cubicSpec, path)).toBe(0);
  });

  it('materializes omitted identity matrices before editing', () => {
    const spec: SpecFile = { ...cubicSpec, connections: [null] };
    const next = withEntry(spec, { matrix: 0, row: 2, col: 1 }, 7);
    expect(next.connections?.[0]?.[2]).toEqual([0, 7, 1, 0]);
    expect(next.connections?.[0]?.[0]).toEqual([1, 0, 0, 0]);
  });

  it('rejects fixed and out-of-range entries', () => {
    expect(() => withEntry(cubicSpec, { matrix: 0, row: 0, col: 0 }, 2)).toThrow();
    expect(() => withEntry(cubicSpec, { matrix: 0, row: 1, col: 2 }, 2)).toThrow();
    expect(() => withEntry(cubicSpec, { matrix: 1, row: 2, col: 1 }, 2)).toThrow();
    expect(() => withEntry(cubicSpec, { matrix: 0, row: 2, col: 2 }, 0)).toThrow();
  });
});
