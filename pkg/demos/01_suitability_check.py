"""Deciding whether a piecewise Chebyshevian spline space is suitable
for design.

A spline space is assembled from per-interval section spaces (drawn from
a catalog of tokens: polynomials, trig, hyperbolic, ...) glued together
at the knots by lower-triangular connection matrices.  The space is
"suitable for design" exactly when it carries a normalized totally
positive basis, and the package decides that with a finite recursion on
Bernstein-like coefficients -- no quadrature, no sampling.

This demo runs the check on a classic mixed trig/hyperbolic space with
two different knot configurations: one suitable, one not.
"""

import numpy as np

import ecpsplines as ecp

R = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 2.0, 0.0, 0.0],
    [0.0, 0.0, 2.0, 0.0],
    [0.0, 0.0, 1.0, 4.0],
])

TOKENS = [
    ["1", "x", "cos", "sin"],
    ["1", "x", "cosh", "sinh"],
    ["1", "x", "cos", "sin"],
    ["1", "x", "cosh", "sinh"],
]


def build(breakpoints):
    bp = list(breakpoints)
    sections = [ecp.make_section_space(toks, (bp[i], bp[i + 1]))
                for i, toks in enumerate(TOKENS)]
    return ecp.build_space((bp[0], bp[-1]), bp[1:-1], sections,
                           [R, np.eye(4), R])


print("=== knots {0, 2, 4, 5, 6} ===")
report = ecp.check_space(build([0, 2, 4, 5, 6]))
print(f"suitable: {report.suitable}")

print()
print("=== knots {0, 0.5, 5.3, 10.1, 14.9} ===")
report = ecp.check_space(build([0, 0.5, 5.3, 10.1, 14.9]))
print(f"suitable: {report.suitable}")
f = report.failure
print(f"first violation: recursion level {f.level}, interval {f.interval}, "
      f"function {f.function}, coefficient {f.coefficient}")
print(f"offending coefficient difference: {f.difference:.6g}")

# The verdict can be cross-checked by actually computing the weight
# functions the recursion implicitly divides by: on the failing space one
# of them goes negative.
tr = ecp.compute_transitions(build([0, 0.5, 5.3, 10.1, 14.9]))
verdict = ecp.positivity_scan(tr, 200)
j, i, x = verdict.argmin
print(f"independent oracle: min weight value {verdict.min_value:.6g} "
      f"attained by w_{j} near x = {x:.3f}")
