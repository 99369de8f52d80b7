"""Pointwise evaluation of weight functions and intermediate transitions.

This is the independent oracle for the suitability verdict.  Starting
from exact section-basis derivatives of the top-level transition
functions, the recursion

    w_j          = sum of the first derivatives of the current functions,
    next level f = (partial sums of those derivatives) / w_j,

is propagated down one level at a time.  Derivatives of the quotient are
obtained from the Leibniz rule solved for the highest quotient
derivative, so no finite differences enter anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np
from scipy.integrate import solve_ivp

from .errors import NearZeroWeight
from .sections import eval_basis
from .transitions import TransitionSet

TAU_DIV = 1e-13


def derivative_tower(transitions: TransitionSet, xs, interval: int) -> np.ndarray:
    """V[p, l, r] = D^r f_{l+1}(x_p), exact, for points in one interval."""
    space = transitions.space
    m = space.dimension
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    sec = space.sections[interval]
    B = np.stack([eval_basis(sec, r, xs) for r in range(m)], axis=-1)
    # (npts, h, r) contracted with coefficients (l, h)
    return np.einsum("lh,phr->plr", transitions.piece_coeffs(interval), B)


def tower_step(V: np.ndarray, level_j: int) -> tuple[np.ndarray, np.ndarray]:
    """One recursion level: (V at n funcs, orders 0..n-1) -> (V', w).

    Returns the next tower (npts, n-1, n-1) and the weight values with
    derivatives, shape (npts, n-1); column 0 is w_j itself.
    """
    npts, n, _ = V.shape
    # Partial sums of first derivatives: N[p, l, r] = sum_{h > l} D^(r+1) f_h
    dV = V[:, :, 1:]                       # (npts, n, n-1)
    suffix = np.cumsum(dV[:, ::-1, :], axis=1)[:, ::-1, :]
    N = suffix[:, 1:, :]                   # (npts, n-1, n-1)
    wd = N[:, 0, :]                        # derivatives of w_j
    w = wd[:, 0]
    scale = np.maximum(1.0, np.abs(N[:, :, 0]).max(axis=1))
    bad = np.abs(w) <= TAU_DIV * scale
    if np.any(bad):
        idx = int(np.argmax(bad))
        raise NearZeroWeight(level_j, idx)
    n1 = n - 1
    Vn = np.zeros((npts, n1, n1))
    for r in range(n1):
        acc = N[:, :, r].copy()
        for s in range(r):
            acc -= comb(r, s) * Vn[:, :, s] * wd[:, None, r - s]
        Vn[:, :, r] = acc / w[:, None]
    return Vn, wd


def eval_level(transitions: TransitionSet, j: int, x: float,
               side: str = "+") -> tuple[np.ndarray, float]:
    """Values of the level-(m-j) transition functions and w_j at x."""
    space = transitions.space
    m = space.dimension
    if not 1 <= j <= m - 1:
        raise ValueError(f"level j must be in 1..{m - 1}")
    i = space.interval_of(float(x), side)
    V = derivative_tower(transitions, [float(x)], i)
    w = None
    for step in range(1, j + 1):
        V, wd = tower_step(V, step)
        w = float(wd[0, 0])
    return V[0, :, 0], w


def eval_weights_at(transitions: TransitionSet, x: float,
                    side: str = "+") -> np.ndarray:
    """All weight values (w_1, ..., w_{m-1}) at a single point."""
    space = transitions.space
    m = space.dimension
    i = space.interval_of(float(x), side)
    V = derivative_tower(transitions, [float(x)], i)
    out = np.empty(m - 1)
    for j in range(1, m):
        V, wd = tower_step(V, j)
        out[j - 1] = wd[0, 0]
    return out


@dataclass(frozen=True)
class WeightSample:
    """Sampled values of one weight function, one-sided at the knots."""

    level: int
    x: np.ndarray
    side: np.ndarray   # "+" or "-" per row
    values: np.ndarray


@dataclass(frozen=True)
class OracleVerdict:
    positive: bool
    min_value: float
    argmin: tuple[int, int, float]  # (level j, interval, x)
    tau_pos: float
    samples: tuple[WeightSample, ...]
    note: str = ""


def weight_samples(transitions: TransitionSet,
                   grid_per_interval: int = 200) -> list[WeightSample]:
    """Sample every w_j on a per-interval grid, both sides at each knot."""
    space = transitions.space
    m = space.dimension
    k = space.num_knots
    bp = space.breakpoints
    per_level_x, per_level_side, per_level_val = (
        [[] for _ in range(m - 1)] for _ in range(3)
    )
    for i in range(k + 1):
        xs = np.linspace(bp[i], bp[i + 1], grid_per_interval)
        V = derivative_tower(transitions, xs, i)
        for j in range(1, m):
            V, wd = tower_step(V, j)
            per_level_x[j - 1].append(xs)
            sides = np.full(xs.shape, "+", dtype=object)
            sides[-1] = "-"
            per_level_side[j - 1].append(sides)
            per_level_val[j - 1].append(wd[:, 0])
    return [
        WeightSample(
            level=j,
            x=np.concatenate(per_level_x[j - 1]),
            side=np.concatenate(per_level_side[j - 1]),
            values=np.concatenate(per_level_val[j - 1]),
        )
        for j in range(1, m)
    ]


def positivity_scan(transitions: TransitionSet,
                    grid_per_interval: int = 200) -> OracleVerdict:
    """Check all weight functions for positivity on a scan grid."""
    if grid_per_interval < 2:
        raise ValueError("grid_per_interval must be >= 2")
    space = transitions.space
    m = space.dimension
    k = space.num_knots
    bp = space.breakpoints
    best = (np.inf, (0, 0, space.a))
    samples = []
    note = ""
    collected = {j: ([], [], []) for j in range(1, m)}
    for i in range(k + 1):
        xs = np.linspace(bp[i], bp[i + 1], grid_per_interval)
        V = derivative_tower(transitions, xs, i)
        try:
            for j in range(1, m):
                V, wd = tower_step(V, j)
                w = wd[:, 0]
                xl, sl, vl = collected[j]
                xl.append(xs)
                sides = np.full(xs.shape, "+", dtype=object)
                sides[-1] = "-"
                sl.append(sides)
                vl.append(w)
                p = int(np.argmin(w))
                if w[p] < best[0]:
                    best = (float(w[p]), (j, i, float(xs[p])))
        except NearZeroWeight as exc:
            note = str(exc)
            best = min(best, (0.0, (exc.level, i, float(bp[i]))))
            break
    for j in range(1, m):
        xl, sl, vl = collected[j]
        if xl:
            samples.append(WeightSample(
                level=j, x=np.concatenate(xl),
                side=np.concatenate(sl), values=np.concatenate(vl)))
    max_abs = max(
        (float(np.max(np.abs(s.values))) for s in samples), default=1.0
    )
    tau_pos = 1e-9 * max(1.0, max_abs)
    positive = (not note) and best[0] > tau_pos
    return OracleVerdict(positive=positive, min_value=best[0],
                         argmin=best[1], tau_pos=tau_pos,
                         samples=tuple(samples), note=note)


def canonical_coeffs(transitions: TransitionSet) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients of the canonical basis psi over the f-basis.

    Returns (psi_over_f, psi_section) where psi_over_f[r, l] is the
    coefficient of f_{l+1} in psi_{r+1} and psi_section[r, i, :] the
    induced section-basis coefficients on interval i.
    """
    m = transitions.dimension
    M = np.zeros((m, m))
    M[0, 0] = 1.0
    if m >= 2:
        M[1, 1:] = 1.0
    for r in range(2, m):
        for ell in range(r + 1, m + 1):
            M[r, ell - 1] = comb(ell - 2, r - 1)
    psi_section = np.einsum("rl,lih->rih", M, transitions.coeffs)
    return M, psi_section


def nested_integral_psi(transitions: TransitionSet, r: int, xs) -> np.ndarray:
    """psi_{r+1} from the nested-integral form, by high-accuracy ODE cascade.

    The cascade z_i' = w_i * z_{i+1} (z_{r+1} = 1) is integrated piece by
    piece from a; z_1 evaluated at the requested points equals psi_{r+1}.
    """
    space = transitions.space
    m = space.dimension
    if not 1 <= r <= m - 1:
        raise ValueError(f"r must be in 1..{m - 1}")
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    order = np.argsort(xs)
    bp = space.breakpoints

    def rhs(x, z, i):
        w = _weights_in_piece(transitions, x, i)
        dz = np.empty(r)
        for q in range(r - 1):
            dz[q] = w[q] * z[q + 1]
        dz[r - 1] = w[r - 1]
        return dz

    out = np.empty_like(xs)
    z = np.zeros(r)
    pos = 0
    for i in range(len(bp) - 1):
        lo, hi = bp[i], bp[i + 1]
        targets = []
        while pos < len(order) and xs[order[pos]] <= hi + 1e-12 * max(1, abs(hi)):
            targets.append(order[pos])
            pos += 1
        t_eval = sorted({min(max(xs[t], lo), hi) for t in targets} | {hi})
        sol = solve_ivp(rhs, (lo, hi), z, t_eval=t_eval, args=(i,),
                        method="DOP853", rtol=1e-10, atol=1e-12)
        for t in targets:
            xq = min(max(xs[t], lo), hi)
            col = int(np.argmin(np.abs(np.asarray(sol.t) - xq)))
            out[t] = sol.y[0, col]
        z = sol.y[:, -1]
    return out


def _weights_in_piece(transitions: TransitionSet, x: float, i: int) -> np.ndarray:
    m = transitions.dimension
    V = derivative_tower(transitions, [float(x)], i)
    out = np.empty(m - 1)
    for j in range(1, m):
        V, wd = tower_step(V, j)
        out[j - 1] = wd[0, 0]
    return out
