/**
 * Canvas plotting: curve + polygon panel, basis panel, weight panel.
 *
 * Drawing goes through the standard CanvasRenderingContext2D surface,
 * but only a small subset is used (declared as Ctx below) so tests can
 * substitute a recording mock.  All layout math is in pure functions.
 */

import type { CurveResponse, FailureTuple, Point, SpecFile } from './types.js';

export interface Ctx {
  canvas: { width: number; height: number };
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
  fill(): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  clearRect(x: number, y: number, w: number, h: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
}

/** Affine map from a data bounding box to canvas pixels (y flipped). */
export interface Viewport {
  toX(x: number): number;
  toY(y: number): number;
}

export function makeViewport(
  xs: number[],
  ys: number[],
  width: number,
  height: number,
  margin = 10,
): Viewport {
  const xmin = Math.min(...xs);
  const xmax = Math.max(...xs);
  const ymin = Math.min(...ys);
  const ymax = Math.max(...ys);
  const xspan = xmax - xmin || 1;
  const yspan = ymax - ymin || 1;
  return {
    toX: (x) => margin + ((x - xmin) / xspan) * (width - 2 * margin),
    toY: (y) => height - margin - ((y - ymin) / yspan) * (height - 2 * margin),
  };
}

function polyline(ctx: Ctx, view: Viewport, xs: number[], ys: number[]): void {
  ctx.beginPath();
  xs.forEach((x, i) => {
    const px = view.toX(x);
    const py = view.toY(ys[i]!);
    if (i === 0) ctx.moveTo(px, py);
    else ctx.lineTo(px, py);
  });
  ctx.stroke();
}

const SERIES_COLORS = [
  '#1f77b4', '#ff7f0e', '#2ca02c', '#d62728',
  '#9467bd', '#8c564b', '#e377c2', '#7f7f7f',
];

/** Breakpoints a = x_0 < ... < x_{k+1} = b of a spec. */
export function breakpoints(spec: SpecFile): number[] {
  return [spec.interval[0], ...spec.knots, spec.interval[1]];
}

/** Parameter range [lo, hi] of the interval a failure tuple points at. */
export function failureInterval(
  spec: SpecFile,
  failure: FailureTuple,
): [number, number] {
  const bp = breakpoints(spec);
  const i = failure.interval;
  if (i < 0 || i + 1 >= bp.length) {
    throw new Error(`failure interval ${i} outside knot vector`);
  }
  return [bp[i]!, bp[i + 1]!];
}

/** Curve panel: control polygon, curve, and (when unsuitable) a shaded
 * band over the offending interval. */
export function drawCurvePanel(
  ctx: Ctx,
  spec: SpecFile,
  curve: CurveResponse,
  control: Point[],
  failure: FailureTuple | null,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const xs = [...curve.points.map((p) => p[0]!), ...control.map((p) => p[0])];
  const ys = [...curve.points.map((p) => p[1]!), ...control.map((p) => p[1])];
  const view = makeViewport(xs, ys, width, height);

  if (failure) {
    const [lo, hi] = failureInterval(spec, failure);
    const sel = curve.t
      .map((t, i) => ({ t, i }))
      .filter(({ t }) => t >= lo && t <= hi)
      .map(({ i }) => curve.points[i]!);
    if (sel.length > 0) {
      const px = sel.map((p) => view.toX(p[0]!));
      const py = sel.map((p) => view.toY(p[1]!));
      ctx.fillStyle = 'rgba(214, 39, 40, 0.15)';
      ctx.fillRect(
        Math.min(...px) - 4,
        Math.min(...py) - 4,
        Math.max(...px) - Math.min(...px) + 8,
        Math.max(...py) - Math.min(...py) + 8,
      );
    }
  }

  ctx.strokeStyle = '#bbbbbb';
  ctx.lineWidth = 1;
  polyline(ctx, view, control.map((p) => p[0]), control.map((p) => p[1]));
  for (const [x, y] of control) {
    ctx.beginPath();
    ctx.arc(view.toX(x), view.toY(y), 4, 0, 2 * Math.PI);
    ctx.fillStyle = '#555555';
    ctx.fill();
  }

  ctx.strokeStyle = failure ? '#d62728' : '#1f77b4';
  ctx.lineWidth = 2;
  polyline(
    ctx,
    view,
    curve.points.map((p) => p[0]!),
    curve.points.map((p) => p[1]!),
  );
}

/** Basis panel: every design basis function over the parameter range. */
export function drawBasisPanel(ctx: Ctx, curve: CurveResponse): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const values = curve.basis;
  const m = values[0]?.length ?? 0;
  const flat = values.flat();
  const view = makeViewport(curve.t, [...flat, 0, 1], width, height);
  for (let ell = 0; ell < m; ell++) {
    ctx.strokeStyle = SERIES_COLORS[ell % SERIES_COLORS.length]!;
    ctx.lineWidth = 1.5;
    polyline(ctx, view, curve.t, values.map((row) => row[ell]!));
  }
}

/** Weight panel: each w_j drawn bold over its own parameter samples. */
export function drawWeightPanel(ctx: Ctx, curve: CurveResponse): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const all = curve.weights.flatMap((w) => w.values);
  const allX = curve.weights.flatMap((w) => w.x);
  if (all.length === 0) return;
  const view = makeViewport(allX, [...all, 0], width, height);
  curve.weights.forEach((w, idx) => {
    ctx.strokeStyle = SERIES_COLORS[idx % SERIES_COLORS.length]!;
    ctx.lineWidth = 3; // weights are the headline quantity: bold
    polyline(ctx, view, w.x, w.values);
  });
}
