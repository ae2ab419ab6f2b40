"""Minimal dense complex linear algebra: null-space solve, matrix exponential
action, and Gram-matrix rank.

Vectors and matrices are plain complex numpy arrays.  Eigenvectors of the
non-hermitian shifted operators are found by a null-space solve at the
analytically known eigenvalue, so no general eigensolver is needed.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, EmptyInputError, NullSpaceDimensionError

DEFAULT_PIVOT_TOL = 1e-10


def fix_phase(vec: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rescale so the first entry with |v_i| > tol*max|v| is real positive."""
    vec = np.asarray(vec, dtype=complex)
    mags = np.abs(vec)
    top = mags.max()
    if top == 0.0:
        return vec.copy()
    idx = int(np.argmax(mags > tol * top))
    return vec * (np.conj(vec[idx]) / mags[idx])


def null_space_vector(mat: np.ndarray, lam: complex, tol: float = DEFAULT_PIVOT_TOL) -> np.ndarray:
    """Unit-norm v with (mat - lam*I) v ~ 0, by Gaussian elimination with
    partial pivoting.

    A pivot is declared zero when |pivot| <= tol * (largest magnitude the
    column had initially).  Raises NullSpaceDimensionError unless exactly one
    free column is found.
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatchError(f"expected square matrix, got shape {mat.shape}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = mat.shape[0]
    a = mat - lam * np.eye(n)
    col_scale = np.abs(a).max(axis=0)

    pivot_cols: list[int] = []
    free_cols: list[int] = []
    row = 0
    for col in range(n):
        if row < n:
            sub = np.abs(a[row:, col])
            best = int(np.argmax(sub)) + row
            pivot = a[best, col]
        else:
            pivot = 0.0
        if row >= n or abs(pivot) <= tol * col_scale[col]:
            free_cols.append(col)
            continue
        if best != row:
            a[[row, best]] = a[[best, row]]
        a[row + 1:] -= np.outer(a[row + 1:, col] / a[row, col], a[row])
        pivot_cols.append(col)
        row += 1

    if len(free_cols) != 1:
        raise NullSpaceDimensionError(len(free_cols))

    free = free_cols[0]
    v = np.zeros(n, dtype=complex)
    v[free] = 1.0
    # back-substitute over pivot rows in reverse
    for r in range(len(pivot_cols) - 1, -1, -1):
        c = pivot_cols[r]
        v[c] = -np.dot(a[r, c + 1:], v[c + 1:]) / a[r, c]
    v /= np.linalg.norm(v)
    v = fix_phase(v)
    if not np.isfinite(v).all():
        raise ArithmeticError("non-finite entries in null-space vector")
    return v


def expm_action(mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """e^{mat} @ vec via scaled-and-squared truncated Taylor series."""
    mat = np.asarray(mat, dtype=complex)
    vec = np.asarray(vec, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatchError(f"expected square matrix, got shape {mat.shape}")
    if vec.shape != (mat.shape[0],):
        raise DimensionMismatchError(
            f"vector of length {vec.shape} does not match matrix of shape {mat.shape}"
        )
    norm = np.linalg.norm(mat, np.inf)
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    small = mat / (2.0 ** squarings)

    n = mat.shape[0]
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 40):
        term = term @ small / k
        result += term
        if np.abs(term).max() < 1e-20 * max(1.0, np.abs(result).max()):
            break
    for _ in range(squarings):
        result = result @ result
    out = result @ vec
    if not np.isfinite(out).all():
        raise ArithmeticError("non-finite entries in expm_action result")
    return out


def gram_rank(vectors, tol: float = DEFAULT_PIVOT_TOL) -> int:
    """Numerical rank of the Gram matrix of a list of equal-length vectors.

    Counts elimination pivots above tol times the largest initial Gram entry.
    """
    vectors = [np.asarray(v, dtype=complex) for v in vectors]
    if not vectors:
        raise EmptyInputError("gram_rank needs at least one vector")
    if tol <= 0:
        raise ValueError("tol must be positive")
    dims = {v.shape for v in vectors}
    if len(dims) != 1:
        raise DimensionMismatchError(f"vectors have mixed shapes {dims}")
    stack = np.array(vectors)
    gram = stack.conj() @ stack.T

    k = gram.shape[0]
    scale = np.abs(gram).max()
    if scale == 0.0:
        return 0
    rank = 0
    row = 0
    for col in range(k):
        if row >= k:
            break
        sub = np.abs(gram[row:, col])
        best = int(np.argmax(sub)) + row
        if abs(gram[best, col]) <= tol * scale:
            continue
        if best != row:
            gram[[row, best]] = gram[[best, row]]
        gram[row + 1:] -= np.outer(gram[row + 1:, col] / gram[row, col], gram[row])
        rank += 1
        row += 1
    return rank
