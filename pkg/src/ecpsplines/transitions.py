"""Global transition functions via the block collocation system.

Each transition function is the solution of a Hermite-type problem: it
vanishes to a prescribed order at the left endpoint, takes value 1 with a
prescribed number of vanishing derivatives at the right endpoint, and its
one-sided derivative vectors at every interior knot are linked by the
connection matrices.  Stacking the per-piece coefficient vectors gives a
block-bidiagonal linear system per function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DependentTransitions, SingularSystem
from .sections import collocation_matrix, eval_basis
from .spaces import SplineSpace

RCOND_SINGULAR = 1e-12


def solve_extended(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Gaussian elimination with partial pivoting in extended precision.

    The suitability test works with a 1e-10 relative tolerance while the
    section-basis coefficients of splines on short off-origin intervals
    can reach 1e7; float64 coefficient storage alone already costs ~1e-9
    absolute, so the whole coefficient pipeline runs in longdouble.
    Accepts one or several right-hand sides; keeps the longdouble dtype.
    """
    A = np.array(A, dtype=np.longdouble)
    X = np.array(B, dtype=np.longdouble)
    squeeze = X.ndim == 1
    if squeeze:
        X = X[:, None]
    n = A.shape[0]
    for col in range(n):
        p = col + int(np.argmax(np.abs(A[col:, col])))
        if A[p, col] == 0.0:
            raise np.linalg.LinAlgError("singular matrix")
        if p != col:
            A[[col, p]] = A[[p, col]]
            X[[col, p]] = X[[p, col]]
        factors = A[col + 1:, col] / A[col, col]
        A[col + 1:, col:] -= factors[:, None] * A[col, col:]
        X[col + 1:] -= factors[:, None] * X[col]
    for col in range(n - 1, -1, -1):
        X[col] /= A[col, col]
        X[:col] -= A[:col, col, None] * X[col]
    return X[:, 0] if squeeze else X


@dataclass(frozen=True)
class BlockSystem:
    ell: int
    matrix: np.ndarray  # ((k+1)m, (k+1)m)
    rhs: np.ndarray     # ((k+1)m,)


@dataclass(frozen=True)
class TransitionSet:
    """Coefficients of f_ell in each interval's section basis.

    coeffs has shape (m, k+1, m): coeffs[ell-1, i, h] is the coefficient
    of section-basis function h of piece i in f_ell.  Row 0 is the
    constant function 1.
    """

    space: SplineSpace
    coeffs: np.ndarray
    coeffs_hp: np.ndarray | None = None  # same data kept in longdouble

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def piece_coeffs(self, i: int) -> np.ndarray:
        """(m, m) matrix of coefficients of all f_ell on piece i."""
        return self.coeffs[:, i, :]

    def piece_coeffs_hp(self, i: int) -> np.ndarray:
        """Extended-precision variant of piece_coeffs when available."""
        src = self.coeffs_hp if self.coeffs_hp is not None else self.coeffs
        return src[:, i, :]

    def eval(self, x, deriv_order: int = 0, side: str = "+") -> np.ndarray:
        """Values D^r f_ell(x) for all ell; x scalar -> shape (m,)."""
        i = self.space.interval_of(float(x), side)
        basis = eval_basis(self.space.sections[i], deriv_order, float(x))
        return self.coeffs[:, i, :] @ basis


def assemble_system(space: SplineSpace, ell: int,
                    dtype=float) -> BlockSystem:
    """Assemble the collocation system for the ell-th transition function."""
    m = space.dimension
    k = space.num_knots
    if not 2 <= ell <= m:
        raise ValueError(f"ell must be in 2..{m}, got {ell}")
    n = (k + 1) * m
    A = np.zeros((n, n), dtype=dtype)
    c = np.zeros(n, dtype=dtype)
    bp = [dtype(t) for t in space.breakpoints]
    row = 0
    # Left endpoint: D^r f(a) = 0 for r = 0..ell-2.
    left = collocation_matrix(space.sections[0], bp[0], range(ell - 1))
    A[row:row + ell - 1, 0:m] = left
    row += ell - 1
    # Interior knots: derivative vectors linked by the connection matrices.
    for i in range(1, k + 1):
        orders = range(m)
        prev = collocation_matrix(space.sections[i - 1], bp[i], orders)
        cur = collocation_matrix(space.sections[i], bp[i], orders)
        R = space.connections[i - 1].entries
        A[row:row + m, (i - 1) * m:i * m] = R @ prev
        A[row:row + m, i * m:(i + 1) * m] = -cur
        row += m
    # Right endpoint: f(b) = 1, D^r f(b) = 0 for r = 1..m-ell.
    right = collocation_matrix(space.sections[k], bp[k + 1], range(m - ell + 1))
    A[row:row + m - ell + 1, k * m:(k + 1) * m] = right
    c[row] = 1.0
    return BlockSystem(ell=ell, matrix=A, rhs=c)


def compute_transitions(space: SplineSpace) -> TransitionSet:
    """Solve for all transition functions of the space on [a, b].

    Raises SingularSystem when any of the collocation systems is
    numerically singular, in which case the space is not an ECP-space.
    """
    m = space.dimension
    k = space.num_knots
    coeffs = np.zeros((m, k + 1, m), dtype=np.longdouble)
    coeffs[0, :, 0] = 1.0  # f_1 is the constant 1
    for ell in range(2, m + 1):
        sys = assemble_system(space, ell, dtype=np.longdouble)
        rcond = _reciprocal_cond(sys.matrix)
        if not np.isfinite(rcond) or rcond < RCOND_SINGULAR:
            raise SingularSystem(ell, rcond)
        sol = solve_extended(sys.matrix, sys.rhs)
        coeffs[ell - 1] = sol.reshape(k + 1, m)
    return TransitionSet(space=space, coeffs=coeffs.astype(float),
                         coeffs_hp=coeffs)


def _reciprocal_cond(mat: np.ndarray) -> float:
    sv = np.linalg.svd(np.asarray(mat, dtype=float), compute_uv=False)
    if sv[0] == 0.0:
        return 0.0
    return float(sv[-1] / sv[0])


@dataclass(frozen=True)
class IndependenceReport:
    ok: bool
    failures: tuple[tuple[int, str], ...]  # (ell, endpoint label)
    details: dict


def check_independence(space: SplineSpace,
                       transitions: TransitionSet) -> IndependenceReport:
    """Verify each f_ell vanishes at the endpoints exactly as prescribed.

    f_ell must have a nonzero (ell-1)-th derivative at a, and 1 - f_ell a
    nonzero (m-ell+1)-th derivative at b; otherwise the transition
    functions are linearly dependent and the differentiated space is not
    an ECP-space.
    """
    m = space.dimension
    failures = []
    details = {}
    for ell in range(2, m + 1):
        scale = max(1.0, float(np.max(np.abs(transitions.coeffs[ell - 1]))))
        tau = 1e-9 * scale
        at_a = float(transitions.eval(space.a, ell - 1, side="+")[ell - 1])
        # D^(m-ell+1)(1 - f_ell) = -D^(m-ell+1) f_ell since m-ell+1 >= 1
        at_b = -float(transitions.eval(space.b, m - ell + 1, side="-")[ell - 1])
        details[ell] = {"a": at_a, "b": at_b, "tau": tau}
        if abs(at_a) <= tau:
            failures.append((ell, "a"))
        if abs(at_b) <= tau:
            failures.append((ell, "b"))
    return IndependenceReport(ok=not failures, failures=tuple(failures),
                              details=details)


def require_independence(space: SplineSpace,
                         transitions: TransitionSet) -> IndependenceReport:
    report = check_independence(space, transitions)
    if not report.ok:
        ell, endpoint = report.failures[0]
        raise DependentTransitions(ell, endpoint)
    return report
