"""Exact integer lattice helpers shared by the combinatorial layers."""
import numpy as np


def _exgcd(a, b):
    """2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0].

    If a divides b, M[0, 1] is 0.
    """
    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign
    M = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while M[1, 0] != 0:
        quotient = M[0, 0] // M[1, 0]
        M[0] -= quotient * M[1]
        M = M[::-1]
    g = M[0, 0]
    M = M[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    if g != 0:
        M[1] = [-b_sign * b // g, a_sign * a // g]
    return M


def _inv_2x2_det1(M):
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=object)


def lattice_normal_form(A):
    """Diagonalize an integer matrix by unimodular row and column operations.

    The diagonal entries are not forced into a divisibility chain.

    Args:
        A (array-like): Integer matrix of shape (m, n).

    Returns:
        tuple: (S, D, T, Sinv, Tinv), object-dtype matrices with A == S @ D @ T, D diagonal of the shape of A, and S @ Sinv, Tinv @ T identities
    """
    A = np.array(A, dtype=object)
    if A.ndim != 2:
        raise ValueError(f"Expected an integer matrix, got shape {A.shape}.")
    D = A.copy()
    m, n = D.shape
    S, T = np.eye(m, dtype=object), np.eye(n, dtype=object)
    Sinv, Tinv = S.copy(), T.copy()

    def clear_row(i):
        if (D[i, i + 1 :] == 0).all():
            return False
        for j in range(i + 1, n):
            M = _exgcd(D[i, i], D[i, j]).T
            D[:, [i, j]] = D[:, [i, j]] @ M
            T[[i, j]] = _inv_2x2_det1(M) @ T[[i, j]]
            Tinv[:, [i, j]] = Tinv[:, [i, j]] @ M
        return True

    def clear_col(i):
        if (D[i + 1 :, i] == 0).all():
            return False
        for j in range(i + 1, m):
            M = _exgcd(D[i, i], D[j, i])
            D[[i, j]] = M @ D[[i, j]]
            S[:, [i, j]] = S[:, [i, j]] @ _inv_2x2_det1(M)
            Sinv[[i, j]] = M @ Sinv[[i, j]]
        return True

    for i in range(min(m, n)):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass
    # make the diagonal non-negative
    for i in range(min(m, n)):
        if D[i, i] < 0:
            D[i] = -D[i]
            S[:, i] = -S[:, i]
            Sinv[i] = -Sinv[i]
    assert (S @ D @ T == A).all()
    return S, D, T, Sinv, Tinv


def sup_norm(vec):
    return max((abs(x) for x in vec), default=0)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def scale(k, a):
    return tuple(k * x for x in a)
