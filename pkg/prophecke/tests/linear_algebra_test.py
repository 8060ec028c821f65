import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import numpy as np
import pytest

from prophecke.modules import linear_algebra as la

from helper_functions import setup_test_for_mode


def _run_reduction_tests():
    """
    Test row reduction over F_p
    * rank, kernels and inverses
    * singular matrices raise ValueError
    """
    p = 3
    a = la.as_matrix([[1, 2], [2, 1]], p)  # rank 1 mod 3
    assert la.rank(a, p) == 1
    kernel = la.nullspace(a, p)
    assert kernel.shape == (1, 2)
    assert not np.any(la.matmul(a, kernel.T, p))
    left = la.left_nullspace(a, p)
    assert not np.any(la.matmul(left, a, p))
    with pytest.raises(ValueError):
        la.inverse(a, p)

    b = la.as_matrix([[1, 1], [0, 2]], p)
    b_inv = la.inverse(b, p)
    assert np.array_equal(la.matmul(b, b_inv, p), la.identity(2))
    assert np.array_equal(la.matrix_power(b, -1, p), b_inv)
    assert np.array_equal(la.matrix_power(b, 0, p), la.identity(2))
    assert np.array_equal(la.matrix_power(b, 2, p), la.as_matrix([[1, 0], [0, 1]], p))

    assert la.as_matrix([5, -1], p).tolist() == [[2, 2]]
    assert la.rank(la.zeros(0, 0), p) == 0


def _run_subspace_tests():
    """
    Test spans, projective points and the spin of a vector
    * F_3^2 has 4 lines, F_2^3 has 7
    * spin of e0 under a cyclic shift is everything
    """
    p = 3
    basis = la.row_space([[1, 0, 1], [2, 0, 2], [0, 1, 0]], p)
    assert basis.shape == (2, 3)
    assert la.in_span([1, 1, 1], basis, p)
    assert not la.in_span([0, 0, 1], basis, p)
    assert la.in_span([0, 0, 0], la.zeros(0, 3), p)

    assert len(la.projective_points(2, 3)) == 4
    assert len(la.projective_points(3, 2)) == 7
    assert all(v[np.nonzero(v)[0][0]] == 1 for v in la.projective_points(3, 3))

    shift = la.as_matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], p)
    assert la.spin([1, 0, 0], [shift], p).shape[0] == 3
    assert la.spin([1, 1, 1], [shift], p).shape[0] == 1

    assert la.is_nilpotent(la.as_matrix([[0, 1], [0, 0]], p), p)
    assert not la.is_nilpotent(shift, p)
    assert la.is_scalar(la.scalar_matrix(2, 3, p))
    assert not la.is_scalar(shift)


def _run_linear_map_tests():
    """The commutant of a diagonal matrix with distinct entries is the diagonal matrices"""
    p = 5
    d = la.as_matrix([[1, 0], [0, 2]], p)
    solutions = la.solve_linear_maps([[(d, None), (None, (-d) % p)]], (2, 2), p)
    assert len(solutions) == 2
    for x in solutions:
        assert not np.any((la.matmul(d, x, p) - la.matmul(x, d, p)) % p)
    # without constraints every matrix solves
    assert len(la.solve_linear_maps([], (2, 3), p)) == 6


test_reduction = setup_test_for_mode(_run_reduction_tests)
test_subspaces = setup_test_for_mode(_run_subspace_tests)
test_linear_maps = setup_test_for_mode(_run_linear_map_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_reduction()
    test_subspaces()
    test_linear_maps()
