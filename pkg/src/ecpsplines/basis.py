"""Normalized design basis and parametric curve evaluation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfInterval, SizeMismatch
from .sections import eval_basis
from .spaces import SplineSpace
from .transitions import TransitionSet


@dataclass(frozen=True)
class DesignBasis:
    """Differenced transition functions: a partition of unity with the
    endpoint vanishing orders of a Bernstein basis."""

    space: SplineSpace
    coeffs: np.ndarray  # (m, k+1, m): section coeffs of each B_ell

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def eval(self, x: float, deriv_order: int = 0,
             side: str = "+") -> np.ndarray:
        i = self.space.interval_of(float(x), side)
        vals = eval_basis(self.space.sections[i], deriv_order, float(x))
        return self.coeffs[:, i, :] @ vals

    def eval_many(self, xs, interval: int, deriv_order: int = 0) -> np.ndarray:
        """(npts, m) values for points known to lie in one interval."""
        vals = eval_basis(self.space.sections[interval], deriv_order,
                          np.asarray(xs, dtype=float))
        return vals @ self.coeffs[:, interval, :].T


def bernstein_basis(transitions: TransitionSet) -> DesignBasis:
    """B_ell = f_ell - f_{ell+1} for ell < m, B_m = f_m."""
    c = transitions.coeffs
    diff = c.copy()
    diff[:-1] -= c[1:]
    return DesignBasis(space=transitions.space, coeffs=diff)


def eval_curve(basis: DesignBasis, polygon, t: float,
               side: str = "+") -> np.ndarray:
    """Point of the spline curve with the given control polygon at t."""
    pts = np.asarray(polygon, dtype=float)
    if pts.ndim != 2 or pts.shape[0] != basis.dimension:
        raise SizeMismatch(
            f"control polygon must have {basis.dimension} points"
        )
    space = basis.space
    if not space.a <= t <= space.b:
        raise OutOfInterval(f"t={t} outside [{space.a}, {space.b}]")
    return basis.eval(t, side=side) @ pts


def sample_basis(basis: DesignBasis, points_per_interval: int = 200) -> dict:
    """Tabulate all basis functions, one-sided at the knots.

    Returns {"x": ..., "side": ..., "values": (npts, m)} with both limits
    emitted at every interior knot.
    """
    if points_per_interval < 2:
        raise ValueError("points_per_interval must be >= 2")
    space = basis.space
    bp = space.breakpoints
    xs, sides, rows = [], [], []
    for i in range(len(bp) - 1):
        g = np.linspace(bp[i], bp[i + 1], points_per_interval)
        vals = basis.eval_many(g, i)
        xs.append(g)
        s = np.full(g.shape, "+", dtype=object)
        s[-1] = "-"
        sides.append(s)
        rows.append(vals)
    return {
        "x": np.concatenate(xs),
        "side": np.concatenate(sides),
        "values": np.vstack(rows),
    }


def sample_curve(basis: DesignBasis, polygon,
                 samples_per_interval: int = 200) -> dict:
    """Tabulate the curve, one-sided at the knots."""
    pts = np.asarray(polygon, dtype=float)
    if pts.ndim != 2 or pts.shape[0] != basis.dimension:
        raise SizeMismatch(
            f"control polygon must have {basis.dimension} points"
        )
    table = sample_basis(basis, samples_per_interval)
    return {
        "t": table["x"],
        "side": table["side"],
        "points": table["values"] @ pts,
    }
