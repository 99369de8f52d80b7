"""Local Bernstein bases and the change of basis into them.

Each interval carries its own Bernstein basis, obtained by differencing
the transition functions of the section space relative to that single
interval.  Expressing the global transition functions in these local
bases produces the coefficient tensor consumed by the suitability
recursion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularChangeOfBasis, SingularSystem
from .sections import SectionSpace, collocation_matrix
from .spaces import SplineSpace
from .transitions import (
    RCOND_SINGULAR,
    TransitionSet,
    _reciprocal_cond,
    solve_extended,
)


@dataclass(frozen=True)
class LocalBasis:
    """Local transition functions and Bernstein basis on one interval.

    g_coeffs has shape (n+1, n): row ell-1 holds the section-basis
    coefficients of g_ell, with g_1 the constant and g_{n+1} identically
    zero.  B_coeffs has shape (n, n): row h-1 holds B_h = g_h - g_{h+1}.
    """

    section: SectionSpace
    g_coeffs: np.ndarray
    B_coeffs: np.ndarray


@dataclass(frozen=True)
class CoeffTensor:
    """Per-interval Bernstein coefficients of the transition functions.

    entries[l, h, i] is the coefficient of local Bernstein function h+1
    on interval i in the function f_{l+1} at this level.
    """

    level: int
    entries: np.ndarray  # (level, level, k+1)

    @property
    def num_intervals(self) -> int:
        return self.entries.shape[2]


def local_transitions(section: SectionSpace) -> LocalBasis:
    """Solve the single-interval Hermite systems for g_ell, build B_h."""
    n = section.dimension
    g = np.zeros((n + 1, n), dtype=np.longdouble)
    g[0, 0] = 1.0
    lo, hi = np.longdouble(section.lo), np.longdouble(section.hi)
    for ell in range(2, n + 1):
        A = np.zeros((n, n), dtype=np.longdouble)
        c = np.zeros(n, dtype=np.longdouble)
        A[:ell - 1] = collocation_matrix(section, lo, range(ell - 1))
        A[ell - 1:] = collocation_matrix(section, hi, range(n - ell + 1))
        c[ell - 1] = 1.0
        rcond = _reciprocal_cond(A)
        if not np.isfinite(rcond) or rcond < RCOND_SINGULAR:
            raise SingularSystem(ell, rcond)
        g[ell - 1] = solve_extended(A, c)
    B = g[:-1] - g[1:]
    return LocalBasis(section=section, g_coeffs=g, B_coeffs=B)


def to_bernstein_coeffs(space: SplineSpace,
                        transitions: TransitionSet,
                        local_bases: list[LocalBasis] | None = None
                        ) -> CoeffTensor:
    """Express every global f_ell in each interval's local Bernstein basis."""
    m = space.dimension
    k = space.num_knots
    if local_bases is None:
        local_bases = [local_transitions(sec) for sec in space.sections]
    entries = np.zeros((m, m, k + 1))
    for i in range(k + 1):
        G = local_bases[i].B_coeffs.T  # columns: section coeffs of B_h
        rcond = _reciprocal_cond(G)
        if not np.isfinite(rcond) or rcond < RCOND_SINGULAR:
            raise SingularChangeOfBasis(i)
        C = transitions.piece_coeffs_hp(i).T  # columns: coeffs of f_ell
        entries[:, :, i] = solve_extended(G, C).T
    return CoeffTensor(level=m, entries=entries)


def from_bernstein_coeffs(space: SplineSpace,
                          tensor: CoeffTensor,
                          local_bases: list[LocalBasis]) -> np.ndarray:
    """Section-basis coefficients recovered from a level-m tensor."""
    m = space.dimension
    k = space.num_knots
    coeffs = np.zeros((m, k + 1, m))
    for i in range(k + 1):
        coeffs[:, i, :] = tensor.entries[:, :, i] @ local_bases[i].B_coeffs
    return coeffs
