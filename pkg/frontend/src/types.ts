/**
 * JSON shapes shared with the spline design server.
 *
 * These mirror the server's request/response bodies exactly; the studio
 * never invents fields of its own on the wire.
 */

/** One section space: an ordered list of basis tokens ("1", "x", "cos", ...). */
export interface SectionSpec {
  tokens: string[];
}

/** A connection matrix as nested rows; `null` means identity. */
export type ConnectionSpec = number[][] | null;

/** The spline-space description the server consumes. */
export interface SpecFile {
  interval: [number, number];
  knots: number[];
  sections: SectionSpec[];
  connections?: ConnectionSpec[] | null;
}

/** Where the suitability recursion first failed. */
export interface FailureTuple {
  level: number;
  interval: number;
  function: number;
  coefficient: number;
  difference: number;
  kind: string;
}

/** Response of POST /api/check. */
export interface SuitabilityReport {
  suitable: boolean;
  m: number;
  k: number;
  failure: FailureTuple | null;
  reason: string | null;
  warnings: string[];
  seq?: number;
}

/** One sampled weight function from POST /api/curve. */
export interface WeightTable {
  level: number;
  x: number[];
  side: string[];
  values: number[];
}

/** Response of POST /api/curve. */
export interface CurveResponse {
  seq?: number;
  t: number[];
  side: string[];
  points: number[][];
  basis: number[][];
  weights: WeightTable[];
}

/** Response of GET /api/catalog. */
export interface CatalogResponse {
  tokens: string[];
  critical_lengths: { tokens: string[]; max_length: number }[];
}

/** A 2-D control point. */
export type Point = [number, number];
