"""The recursive coefficient test deciding suitability for design.

At each step the local Bernstein coefficients of the current transition
functions are differenced along the coefficient index.  A negative
difference means the coefficients are not non-decreasing, which rules
out suitability immediately.  Otherwise the suffix sums of the
differences, normalized by their first row, are the coefficients at the
next level down, and the first row of the sums represents the weight
function guarded by this step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bernstein import CoeffTensor, local_transitions, to_bernstein_coeffs
from .errors import ComputationError
from .spaces import SplineSpace
from .transitions import check_independence, compute_transitions

TAU_MONO_BASE = 1e-10


@dataclass(frozen=True)
class Failure:
    """First violation found, in loop order (level, interval, l, h)."""

    level: int       # 1-based step index; step j guards weight w_j
    interval: int    # 0-based interval index
    function: int    # 1-based transition-function index
    coefficient: int  # 1-based coefficient index (left element of the pair)
    difference: float
    kind: str = "monotonicity"  # or "zero-normalizer"

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "interval": self.interval,
            "function": self.function,
            "coefficient": self.coefficient,
            "difference": self.difference,
            "kind": self.kind,
        }


@dataclass(frozen=True)
class StepResult:
    ok: bool
    failure: Failure | None = None


@dataclass
class SuitabilityReport:
    suitable: bool
    m: int
    k: int
    failure: Failure | None = None
    reason: str | None = None
    warnings: tuple[str, ...] = ()
    levels: list[CoeffTensor] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "suitable": self.suitable,
            "m": self.m,
            "k": self.k,
            "failure": self.failure.to_json() if self.failure else None,
            "reason": self.reason,
            "warnings": list(self.warnings),
        }


def sfd_step(tensor: CoeffTensor, step_index: int = 1,
             tol: float = 1.0) -> tuple[StepResult, CoeffTensor | None]:
    """One level of the coefficient recursion.

    Checks monotonicity of the coefficient rows of every function on
    every interval, then builds the level-(n-1) tensor from normalized
    suffix sums of the differences.  Returns the failure (and no tensor)
    as soon as a violation is found, in loop order interval, function,
    coefficient.
    """
    n = tensor.level
    if n < 2:
        raise ValueError("cannot step a level-1 tensor")
    b = tensor.entries
    tau = tol * TAU_MONO_BASE * max(1.0, float(np.max(np.abs(b))))
    new = np.zeros((n - 1, n - 1, tensor.num_intervals))
    for i in range(tensor.num_intervals):
        d = b[:, 1:, i] - b[:, :-1, i]  # (n, n-1); row 0 is identically 0
        viol = d[1:, :] < -tau
        if np.any(viol):
            r, h = np.argwhere(viol)[0]
            return StepResult(False, Failure(
                level=step_index, interval=i, function=int(r) + 2,
                coefficient=int(h) + 1, difference=float(d[r + 1, h]),
            )), None
        # t[l, h] = sum_{r > l} d[r, h]; row 0 of t is the weight's coeffs
        t = np.cumsum(d[::-1, :], axis=0)[::-1, :][1:, :]
        norm = t[0, :]
        small = norm <= tau
        if np.any(small):
            h = int(np.argmax(small))
            return StepResult(False, Failure(
                level=step_index, interval=i, function=1,
                coefficient=h + 1, difference=float(norm[h]),
                kind="zero-normalizer",
            )), None
        new[:, :, i] = t / norm[None, :]
        new[0, :, i] = 1.0
    return StepResult(True, None), CoeffTensor(level=n - 1, entries=new)


def sfd_test(tensor: CoeffTensor, tol: float = 1.0,
             trace: bool = False) -> SuitabilityReport:
    """Run the full recursion on a level-m coefficient tensor."""
    m = tensor.level
    k = tensor.num_intervals - 1
    levels = [tensor] if trace else []
    current = tensor
    for j in range(1, m):
        result, nxt = sfd_step(current, step_index=j, tol=tol)
        if not result.ok:
            report = SuitabilityReport(suitable=False, m=m, k=k,
                                       failure=result.failure)
            report.levels = levels if trace else [current]
            return report
        current = nxt
        if trace:
            levels.append(current)
    report = SuitabilityReport(suitable=True, m=m, k=k)
    report.levels = levels if trace else [current]
    return report


def check_space(space: SplineSpace, tol: float = 1.0,
                trace: bool = False) -> SuitabilityReport:
    """Full pipeline: transitions, independence, coefficients, recursion."""
    m = space.dimension
    k = space.num_knots
    try:
        transitions = compute_transitions(space)
    except ComputationError as exc:
        return SuitabilityReport(suitable=False, m=m, k=k,
                                 reason=str(exc), warnings=space.warnings)
    indep = check_independence(space, transitions)
    if not indep.ok:
        ell, endpoint = indep.failures[0]
        return SuitabilityReport(
            suitable=False, m=m, k=k, warnings=space.warnings,
            reason=(f"transition function {ell} vanishes to excess order at "
                    f"endpoint {endpoint}: transition functions dependent"),
        )
    try:
        local = [local_transitions(sec) for sec in space.sections]
        tensor = to_bernstein_coeffs(space, transitions, local)
    except ComputationError as exc:
        return SuitabilityReport(suitable=False, m=m, k=k,
                                 reason=str(exc), warnings=space.warnings)
    report = sfd_test(tensor, tol=tol, trace=trace)
    report.warnings = space.warnings
    return report
