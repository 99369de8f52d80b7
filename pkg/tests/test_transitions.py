import math

import numpy as np
import pytest

import ecpsplines as ecp
from ecpsplines.errors import SingularSystem

from conftest import (
    example1_space,
    hermite_oracle_poly,
    polynomial_space,
)


def cumulative_bernstein(m, ell, x):
    """Oracle: sum_{h >= ell} C(m-1, h-1) x^(h-1) (1-x)^(m-h)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for h in range(ell, m + 1):
        out += math.comb(m - 1, h - 1) * x ** (h - 1) * (1 - x) ** (m - h)
    return out


def test_assemble_cubic_ell2():
    space = polynomial_space(4)
    sys = ecp.assemble_system(space, 2)
    assert sys.matrix.shape == (4, 4)
    sol = np.linalg.solve(sys.matrix, sys.rhs)
    # oracle: independent monomial-basis Hermite solve
    oracle = hermite_oracle_poly(4, 2)
    np.testing.assert_allclose(sol, oracle, atol=1e-12)
    # closed form f_2(x) = 1 - (1-x)^3 = 3x - 3x^2 + x^3
    np.testing.assert_allclose(sol, [0.0, 3.0, -3.0, 1.0], atol=1e-12)


def test_assemble_cubic_ell4():
    space = polynomial_space(4)
    sys = ecp.assemble_system(space, 4)
    sol = np.linalg.solve(sys.matrix, sys.rhs)
    np.testing.assert_allclose(sol, [0.0, 0.0, 0.0, 1.0], atol=1e-12)


def test_assemble_example1_dimensions():
    space = example1_space()
    for ell in range(2, 5):
        sys = ecp.assemble_system(space, ell)
        assert sys.matrix.shape == (16, 16)
        assert sys.rhs.shape == (16,)
        assert np.count_nonzero(sys.rhs) == 1


def test_compute_transitions_cubic_matches_oracle():
    space = polynomial_space(4)
    tr = ecp.compute_transitions(space)
    xs = np.linspace(0, 1, 101)
    for ell in range(1, 5):
        vals = np.array([tr.eval(x)[ell - 1] for x in xs])
        np.testing.assert_allclose(
            vals, cumulative_bernstein(4, ell, xs), atol=1e-10)


@pytest.mark.parametrize("m", range(2, 7))
def test_polynomial_transitions_are_cumulative_sums(m):
    space = polynomial_space(m)
    tr = ecp.compute_transitions(space)
    xs = np.linspace(0, 1, 101)
    for ell in range(1, m + 1):
        vals = np.array([tr.eval(x)[ell - 1] for x in xs])
        np.testing.assert_allclose(
            vals, cumulative_bernstein(m, ell, xs), atol=1e-10)


def boundary_residuals(space, tr):
    m = space.dimension
    worst = 0.0
    for ell in range(2, m + 1):
        s = max(1.0, float(np.max(np.abs(tr.coeffs[ell - 1]))))
        for r in range(ell - 1):
            worst = max(worst,
                        abs(tr.eval(space.a, r, "+")[ell - 1]) / s)
        for r in range(m - ell + 1):
            val = tr.eval(space.b, r, "-")[ell - 1]
            target = 1.0 if r == 0 else 0.0
            worst = max(worst, abs(val - target) / s)
    return worst


def connection_residuals(space, tr):
    m = space.dimension
    worst = 0.0
    for ell in range(2, m + 1):
        s = max(1.0, float(np.max(np.abs(tr.coeffs[ell - 1]))))
        for i, knot in enumerate(space.knots):
            left = np.array([tr.eval(knot, r, "-")[ell - 1] for r in range(m)])
            right = np.array([tr.eval(knot, r, "+")[ell - 1] for r in range(m)])
            res = right - space.connections[i].entries @ left
            worst = max(worst, float(np.max(np.abs(res))) / s)
    return worst


def test_boundary_residuals_example1():
    for bp in [(0, 2, 4, 5, 6), (0, 0.5, 5.3, 10.1, 14.9)]:
        space = example1_space(bp)
        tr = ecp.compute_transitions(space)
        assert boundary_residuals(space, tr) <= 1e-8


def test_connection_residuals_example1():
    for bp in [(0, 2, 4, 5, 6), (0, 0.5, 5.3, 10.1, 14.9)]:
        space = example1_space(bp)
        tr = ecp.compute_transitions(space)
        assert connection_residuals(space, tr) <= 1e-8


def test_singular_system_for_dependent_span():
    # exp(0) is the constant function again: degenerate collocation matrix
    sec = ecp.make_section_space(
        [ecp.parse_token("1"), ecp.parse_token("x"), ecp.BasisToken("exp", rate=0.0)],
        (0, 1))
    space = ecp.build_space((0, 1), [], [sec], [])
    with pytest.raises(SingularSystem):
        ecp.compute_transitions(space)


def test_independence_cubic():
    space = polynomial_space(4)
    tr = ecp.compute_transitions(space)
    report = ecp.check_independence(space, tr)
    assert report.ok
    # derivatives of the closed forms at 0: D^1 f_2 = 3, D^2 f_3 = 6, D^3 f_4 = 6
    assert report.details[2]["a"] == pytest.approx(3.0)
    assert report.details[3]["a"] == pytest.approx(6.0)
    assert report.details[4]["a"] == pytest.approx(6.0)


def test_independence_example1():
    space = example1_space()
    tr = ecp.compute_transitions(space)
    assert ecp.check_independence(space, tr).ok


def test_f1_is_constant_one():
    space = example1_space()
    tr = ecp.compute_transitions(space)
    for x in np.linspace(0, 6, 31):
        assert tr.eval(x)[0] == pytest.approx(1.0, abs=1e-12)
