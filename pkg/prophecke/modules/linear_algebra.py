"""
Exact linear algebra over the prime field F_p on numpy integer arrays.

All functions take and return arrays with entries in 0..p-1. Vectors are rows;
a module acts on row vectors from the right, so M(ab) = M(a) M(b).
"""
from itertools import product

import numpy as np
from loguru import logger


def as_matrix(values, p):
    """Integer array reduced mod p, always two dimensional."""
    matrix = np.atleast_2d(np.asarray(values, dtype=np.int64)) % p
    if matrix.ndim != 2:
        raise ValueError("Not a 2 dimensional matrix")
    return matrix


def identity(n):
    return np.eye(n, dtype=np.int64)


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.int64)


def scalar_matrix(c, n, p):
    return identity(n) * (int(c) % p)


def matmul(a, b, p):
    return (a @ b) % p


def matrix_power(a, n, p):
    """a^n for n >= 0; negative n uses the inverse."""
    if n < 0:
        return matrix_power(inverse(a, p), -n, p)
    result = identity(a.shape[0])
    base = a % p
    while n:
        if n & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        n >>= 1
    return result


def _inverse_scalar(c, p):
    return pow(int(c), p - 2, p)


def rref_complete(matrix, p):
    """Row reduced echelon form over F_p.

    Args:
        matrix (np.ndarray): Input matrix.
        p (int): The prime.

    Returns:
        tuple: (pivot columns, reduced matrix, transform with transform @ matrix = reduced, rank)
    """
    reduced = as_matrix(matrix, p).copy()
    rows, cols = reduced.shape
    transform = identity(rows)
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nonzero = np.nonzero(reduced[row:, col])[0]
        if not len(nonzero):
            continue
        k = row + nonzero[0]
        if k != row:
            reduced[[row, k]] = reduced[[k, row]]
            transform[[row, k]] = transform[[k, row]]
        inv = _inverse_scalar(reduced[row, col], p)
        reduced[row] = reduced[row] * inv % p
        transform[row] = transform[row] * inv % p
        for r in range(rows):
            if r != row and reduced[r, col]:
                factor = reduced[r, col]
                reduced[r] = (reduced[r] - factor * reduced[row]) % p
                transform[r] = (transform[r] - factor * transform[row]) % p
        pivots.append(col)
        row += 1
    return pivots, reduced, transform, len(pivots)


def rank(matrix, p):
    if matrix.size == 0:
        return 0
    return rref_complete(matrix, p)[3]


def nullspace(matrix, p):
    """Basis (as rows) of {x : matrix @ x = 0}."""
    matrix = as_matrix(matrix, p)
    cols = matrix.shape[1]
    pivots, reduced, _, r = rref_complete(matrix, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = np.zeros(cols, dtype=np.int64)
        x[f] = 1
        for i, c in enumerate(pivots):
            x[c] = -reduced[i, f] % p
        basis.append(x)
    return np.array(basis, dtype=np.int64).reshape(len(basis), cols)


def left_nullspace(matrix, p):
    """Basis (as rows) of {v : v @ matrix = 0}."""
    return nullspace(as_matrix(matrix, p).T, p)


def inverse(matrix, p):
    """Inverse over F_p.

    Raises:
        ValueError: if the matrix is singular.
    """
    n = matrix.shape[0]
    _, reduced, transform, r = rref_complete(matrix, p)
    if r != n:
        raise ValueError("Matrix is singular over F_p.")
    return transform


def row_space(vectors, p):
    """Reduced basis (as rows) of the span of the given rows."""
    vectors = as_matrix(vectors, p)
    if vectors.size == 0:
        return vectors
    _, reduced, _, r = rref_complete(vectors, p)
    return reduced[:r]


def in_span(vector, basis, p):
    if basis.size == 0:
        return not np.any(np.asarray(vector) % p)
    return rank(np.vstack([basis, vector]), p) == basis.shape[0]


def is_nilpotent(matrix, p):
    return not np.any(matrix_power(matrix, matrix.shape[0], p))


def is_scalar(matrix):
    n = matrix.shape[0]
    return n == 0 or not np.any(matrix - matrix[0, 0] * identity(n))


def projective_points(dim, p):
    """One nonzero vector per line of F_p^dim, with first nonzero entry 1."""
    points = []
    for lead in range(dim):
        for tail in product(range(p), repeat=dim - lead - 1):
            v = np.zeros(dim, dtype=np.int64)
            v[lead] = 1
            v[lead + 1:] = tail
            points.append(v)
    return points


def spin(vector, matrices, p):
    """Reduced basis of the smallest subspace containing vector and stable under the matrices."""
    basis = row_space(vector, p)
    frontier = [np.asarray(vector) % p]
    while frontier:
        v = frontier.pop()
        for m in matrices:
            w = matmul(v, m, p)
            if not in_span(w, basis, p):
                basis = row_space(np.vstack([basis, w]), p)
                frontier.append(w)
    return basis


def solve_linear_maps(constraints, shape, p):
    """All matrices X of the given shape with sum_i A_i X B_i = 0 for every constraint.

    Args:
        constraints (list): Each constraint is a list of (A, B) pairs; A or B may be None for the identity.
        shape (tuple): (rows, cols) of X.
        p (int): The prime.

    Returns:
        list of np.ndarray: A basis of the solution space.
    """
    rows, cols = shape
    columns = []
    for index in range(rows * cols):
        X = zeros(rows, cols)
        X[index // cols, index % cols] = 1
        images = []
        for terms in constraints:
            value = None
            for A, B in terms:
                term = X if A is None else matmul(A, X, p)
                term = term if B is None else matmul(term, B, p)
                value = term if value is None else (value + term) % p
            images.append(value.reshape(-1))
        columns.append(np.concatenate(images) if images else np.zeros(0, dtype=np.int64))
    if not columns:
        return []
    system = np.stack(columns, axis=1)
    if system.shape[0] == 0:
        solutions = [identity(rows * cols)[i] for i in range(rows * cols)]
    else:
        solutions = list(nullspace(system, p))
    logger.debug(f"Linear map system of size {system.shape} has {len(solutions)} solutions")
    return [s.reshape(rows, cols) for s in solutions]
