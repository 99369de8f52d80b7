"""A connection-matrix entry as a live tension parameter.

Take two cubic pieces on [0, 2] joined at x = 1 with connection matrix
I + beta * E_{4,3}: the second derivative jump is controlled by beta.
The space stays suitable for design for all beta above some minimum
value and breaks below it; within the admissible range, raising beta
pulls the curve toward its control polygon -- a tension control.

The demo locates the flip point by bisection and tabulates how far the
curve sits from the polygon as beta grows.
"""

import numpy as np

import ecpsplines as ecp


def space(beta):
    R = np.eye(4)
    R[3, 2] = beta
    sections = [ecp.make_section_space(["1", "x", "x^2", "x^3"], (0, 1)),
                ecp.make_section_space(["1", "x", "x^2", "x^3"], (1, 2))]
    return ecp.build_space((0.0, 2.0), [1.0], sections, [R])


# --- where does admissibility end? ---------------------------------
lo, hi = -16.0, 0.0
for _ in range(40):
    mid = 0.5 * (lo + hi)
    if ecp.check_space(space(mid)).suitable:
        hi = mid
    else:
        lo = mid
print(f"admissibility flip point: beta_min ~ {hi:.8f}")

# --- tension behaviour in the admissible range ---------------------
polygon = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, -1.0], [3.0, 0.0]])


def max_dist_to_polygon(points):
    best = np.full(len(points), np.inf)
    for s, e in zip(polygon[:-1], polygon[1:]):
        d = e - s
        t = np.clip((points - s) @ d / (d @ d), 0.0, 1.0)
        best = np.minimum(best,
                          np.linalg.norm(points - (s + t[:, None] * d),
                                         axis=1))
    return best.max()


print()
print("beta      suitable   max distance curve <-> polygon")
for beta in [hi - 0.5, 0.0, 2.0, 10.0, 50.0, 200.0]:
    report = ecp.check_space(space(beta))
    line = f"{beta:8.2f}   {str(report.suitable):8s}"
    if report.suitable:
        basis = ecp.bernstein_basis(ecp.compute_transitions(space(beta)))
        pts = ecp.sample_curve(basis, polygon, 80)["points"]
        line += f"   {max_dist_to_polygon(pts):.4f}"
    print(line)
