"""The optimal basis and the weight functions behind it.

On a suitable space the package constructs the normalized totally
positive (Bernstein-like) basis: a partition of unity with the endpoint
vanishing orders of classical Bernstein polynomials.  The same
construction exposes the positive weight functions whose nested
integrals generate the space.

This demo prints small ASCII profiles of both for the mixed
trig/hyperbolic space of demo 01.
"""

import numpy as np

import ecpsplines as ecp

R = np.array([
    [1.0, 0, 0, 0],
    [0.0, 2, 0, 0],
    [0.0, 0, 2, 0],
    [0.0, 0, 1, 4],
])
tokens = [["1", "x", "cos", "sin"], ["1", "x", "cosh", "sinh"],
          ["1", "x", "cos", "sin"], ["1", "x", "cosh", "sinh"]]
bp = [0.0, 2.0, 4.0, 5.0, 6.0]
sections = [ecp.make_section_space(t, (bp[i], bp[i + 1]))
            for i, t in enumerate(tokens)]
space = ecp.build_space((0, 6), bp[1:-1], sections, [R, np.eye(4), R])

tr = ecp.compute_transitions(space)
basis = ecp.bernstein_basis(tr)


def ascii_profile(xs, ys, width=60):
    lo, hi = ys.min(), ys.max()
    span = hi - lo if hi > lo else 1.0
    cells = np.full(width, " ")
    for x, y in zip(xs, ys):
        col = int((x - xs[0]) / (xs[-1] - xs[0]) * (width - 1))
        cells[col] = ".:-=+*#"[int((y - lo) / span * 6)]
    return "".join(cells)


table = ecp.sample_basis(basis, 16)
print("design basis functions (darker = larger) on [0, 6]:")
for ell in range(space.dimension):
    print(f"  B_{ell + 1} |{ascii_profile(table['x'], table['values'][:, ell])}|")

print()
print("row sums are identically one (partition of unity):",
      np.allclose(table["values"].sum(axis=1), 1.0, atol=1e-9))

print()
print("weight functions (all strictly positive on a suitable space):")
for s in ecp.weight_samples(tr, 16):
    print(f"  w_{s.level} |{ascii_profile(s.x, s.values)}|"
          f"   min = {s.values.min():.4f}")
