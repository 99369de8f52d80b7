import math

import numpy as np
import pytest

import ecpsplines as ecp
from ecpsplines.bernstein import from_bernstein_coeffs

from conftest import example1_space, polynomial_space


def classical_bernstein(n, h, x):
    x = np.asarray(x, dtype=float)
    return math.comb(n - 1, h - 1) * x ** (h - 1) * (1 - x) ** (n - h)


def eval_in_section(section, coeffs, xs):
    vals = ecp.eval_basis(section, 0, np.asarray(xs, dtype=float))
    return vals @ np.asarray(coeffs)


def test_local_cubic_is_classical_bernstein():
    sec = ecp.make_section_space(["1", "x", "x^2", "x^3"], (0, 1))
    local = ecp.local_transitions(sec)
    xs = np.linspace(0, 1, 101)
    for h in range(1, 5):
        vals = eval_in_section(sec, local.B_coeffs[h - 1], xs)
        np.testing.assert_allclose(vals, classical_bernstein(4, h, xs),
                                   atol=1e-12)


def test_local_linear():
    sec = ecp.make_section_space(["1", "x"], (0, 1))
    local = ecp.local_transitions(sec)
    xs = np.linspace(0, 1, 11)
    np.testing.assert_allclose(
        eval_in_section(sec, local.B_coeffs[0], xs), 1 - xs, atol=1e-12)
    np.testing.assert_allclose(
        eval_in_section(sec, local.B_coeffs[1], xs), xs, atol=1e-12)


def test_local_cycloidal_partition_and_endpoint_orders():
    sec = ecp.make_section_space(["1", "x", "cos", "sin"], (0, 2))
    local = ecp.local_transitions(sec)
    xs = np.linspace(0, 2, 201)
    total = np.zeros_like(xs)
    for h in range(4):
        vals = eval_in_section(sec, local.B_coeffs[h], xs)
        assert np.all(vals[1:-1] > 0)  # positive bumps on the interior
        total += vals
    np.testing.assert_allclose(total, 1.0, atol=1e-10)
    # endpoint vanishing orders: B_h vanishes h-1 times at lo, n-h at hi
    scale = max(1.0, float(np.max(np.abs(local.B_coeffs))))
    for h in range(1, 5):
        for r in range(h - 1):
            v = ecp.eval_basis(sec, r, 0.0) @ local.B_coeffs[h - 1]
            assert abs(v) <= 1e-8 * scale
        for r in range(4 - h):
            v = ecp.eval_basis(sec, r, 2.0) @ local.B_coeffs[h - 1]
            assert abs(v) <= 1e-8 * scale


def test_g_row_conventions():
    sec = ecp.make_section_space(["1", "x", "x^2"], (0, 1))
    local = ecp.local_transitions(sec)
    np.testing.assert_array_equal(local.g_coeffs[0], [1, 0, 0])
    np.testing.assert_array_equal(local.g_coeffs[-1], [0, 0, 0])


def test_cubic_tensor_is_unit_steps(cubic_space, cubic_transitions):
    tensor = ecp.to_bernstein_coeffs(cubic_space, cubic_transitions)
    expected = np.zeros((4, 4, 1))
    for ell in range(4):
        expected[ell, ell:, 0] = 1.0
    np.testing.assert_allclose(tensor.entries, expected, atol=1e-10)


def test_first_function_row_of_ones(ex1_pos, ex1_pos_transitions):
    tensor = ecp.to_bernstein_coeffs(ex1_pos, ex1_pos_transitions)
    np.testing.assert_allclose(tensor.entries[0], 1.0, atol=1e-10)


def test_example1_tensor_differences_nonnegative(ex1_pos, ex1_pos_transitions):
    tensor = ecp.to_bernstein_coeffs(ex1_pos, ex1_pos_transitions)
    d = np.diff(tensor.entries, axis=1)
    assert d.min() > -1e-10


def test_round_trip(ex1_pos, ex1_pos_transitions):
    local = [ecp.local_transitions(sec) for sec in ex1_pos.sections]
    tensor = ecp.to_bernstein_coeffs(ex1_pos, ex1_pos_transitions, local)
    back = from_bernstein_coeffs(ex1_pos, tensor, local)
    scale = max(1.0, float(np.max(np.abs(ex1_pos_transitions.coeffs))))
    assert np.max(np.abs(back - ex1_pos_transitions.coeffs)) <= 1e-9 * scale


def test_endpoint_interpolation_property(ex1_pos, ex1_pos_transitions):
    tensor = ecp.to_bernstein_coeffs(ex1_pos, ex1_pos_transitions)
    bp = ex1_pos.breakpoints
    m = ex1_pos.dimension
    for i in range(len(bp) - 1):
        left = ecp.eval_basis(ex1_pos.sections[i], 0, bp[i])
        right = ecp.eval_basis(ex1_pos.sections[i], 0, bp[i + 1])
        for ell in range(m):
            f_left = ex1_pos_transitions.coeffs[ell, i, :] @ left
            f_right = ex1_pos_transitions.coeffs[ell, i, :] @ right
            assert tensor.entries[ell, 0, i] == pytest.approx(f_left, abs=1e-9)
            assert tensor.entries[ell, -1, i] == pytest.approx(f_right, abs=1e-9)


def test_multi_interval_polynomial_tensor():
    space = polynomial_space(4, knots=(0.4, 0.7))
    tr = ecp.compute_transitions(space)
    tensor = ecp.to_bernstein_coeffs(space, tr)
    # classical spline space: all rows non-decreasing
    assert np.diff(tensor.entries, axis=1).min() > -1e-10
    np.testing.assert_allclose(tensor.entries[0], 1.0, atol=1e-10)
