/**
 * Connection-matrix editing rules.
 *
 * Only the strictly-lower triangle and the diagonal of a connection
 * matrix are editable; the first row and column and the upper triangle
 * are structurally fixed (unit corner, zeros elsewhere).  Diagonal
 * entries must stay strictly positive.
 */

import type { SpecFile } from './types.js';

/** Address of one matrix entry inside a spec file. */
export interface EntryPath {
  matrix: number; // index into spec.connections
  row: number;
  col: number;
}

/** The slider path syntax shared with the CLI: "connections/I/entries/R/C". */
export function formatEntryPath(p: EntryPath): string {
  return `connections/${p.matrix}/entries/${p.row}/${p.col}`;
}

export function parseEntryPath(text: string): EntryPath {
  const parts = text.split('/');
  if (parts.length !== 5 || parts[0] !== 'connections' || parts[2] !== 'entries') {
    throw new Error(`bad entry path ${JSON.stringify(text)}`);
  }
  const [matrix, row, col] = [parts[1], parts[3], parts[4]].map(Number);
  if (![matrix, row, col].every(Number.isInteger)) {
    throw new Error(`non-integer indices in ${JSON.stringify(text)}`);
  }
  return { matrix: matrix!, row: row!, col: col! };
}

/** An entry may be bound to a slider iff it is on or below the diagonal,
 * excluding the structurally fixed first row and column. */
export function isEditableEntry(m: number, row: number, col: number): boolean {
  return row >= 1 && row < m && col >= 1 && col <= row;
}

/** All slider-bindable entries of an m x m connection matrix. */
export function editableEntries(m: number): { row: number; col: number }[] {
  const out: { row: number; col: number }[] = [];
  for (let row = 1; row < m; row++) {
    for (let col = 1; col <= row; col++) out.push({ row, col });
  }
  return out;
}

/** Validate a candidate value for one entry (diagonal must stay > 0). */
export function isAdmissibleValue(
  row: number,
  col: number,
  value: number,
): boolean {
  if (!Number.isFinite(value)) return false;
  return row === col ? value > 0 : true;
}

/** Return a copy of the spec with one connection-matrix entry replaced.
 * Omitted / null matrices are materialized as identity first. */
export function withEntry(
  spec: SpecFile,
  path: EntryPath,
  value: number,
): SpecFile {
  const m = spec.sections[0]?.tokens.length ?? 0;
  const conns = (spec.connections ?? spec.knots.map(() => null)).map((c) =>
    c === null
      ? Array.from({ length: m }, (_, i) =>
          Array.from({ length: m }, (_, j) => (i === j ? 1 : 0)),
        )
      : c.map((r) => r.slice()),
  );
  const mat = conns[path.matrix];
  if (!mat || !mat[path.row] || path.col >= mat[path.row]!.length) {
    throw new Error(`entry path outside matrix: ${formatEntryPath(path)}`);
  }
  if (!isEditableEntry(mat.length, path.row, path.col)) {
    throw new Error(`entry not editable: ${formatEntryPath(path)}`);
  }
  if (!isAdmissibleValue(path.row, path.col, value)) {
    throw new Error(`inadmissible value ${value} at ${formatEntryPath(path)}`);
  }
  mat[path.row]![path.col] = value;
  return { ...spec, connections: conns };
}

/** Current value at an entry path (identity matrices read as 0/1). */
export function entryValue(spec: SpecFile, path: EntryPath): number {
  const mat = spec.connections?.[path.matrix] ?? null;
  if (mat === null) return path.row === path.col ? 1 : 0;
  const v = mat[path.row]?.[path.col];
  if (v === undefined) {
    throw new Error(`entry path outside matrix: ${formatEntryPath(path)}`);
  }
  return v;
}
