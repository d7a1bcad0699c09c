"""Exact integer linear algebra on small dense matrices.

Matrices are numpy arrays with dtype=object holding Python integers, so all
results are exact regardless of entry growth.  Provided here: fraction-free
determinants, leading principal minors (for definiteness tests), the Smith
normal form with a transformation certificate, and equality of symmetric
matrices up to a simultaneous row/column permutation.
"""

from __future__ import annotations

import numpy as np


def identity(k: int) -> np.ndarray:
    return np.eye(k, dtype=object)


def det(M: np.ndarray) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = M.astype(object).copy()
    k = A.shape[0]
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for s in range(k - 1):
        if A[s, s] == 0:
            for i in range(s + 1, k):
                if A[i, s] != 0:
                    A[[s, i]] = A[[i, s]]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(s + 1, k):
            for j in range(s + 1, k):
                A[i, j] = (A[i, j] * A[s, s] - A[i, s] * A[s, j]) // prev
            A[i, s] = 0
        prev = A[s, s]
    return sign * A[k - 1, k - 1]


def leading_principal_minors(M: np.ndarray) -> list[int]:
    """Determinants of the leading k x k submatrices, k = 1..size."""
    return [det(M[:k, :k]) for k in range(1, M.shape[0] + 1)]


def is_positive_definite(M: np.ndarray) -> bool:
    """Sylvester criterion on an integer symmetric matrix."""
    if (M != M.T).any():
        return False
    return all(m > 0 for m in leading_principal_minors(M))


def smith_normal_form(M: np.ndarray) -> tuple[list[int], np.ndarray, np.ndarray]:
    """Invariant factors d_1 | d_2 | ... and a certificate (U, V).

    U and V are unimodular with U @ M @ V diagonal; the test suite verifies
    the certificate rather than trusting this routine.  Pivots are chosen by
    minimal absolute value to limit entry growth.
    """
    A = M.astype(object).copy()
    rows, cols = A.shape
    U = identity(rows)
    V = identity(cols)
    for s in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(s, rows):
                for j in range(s, cols):
                    if A[i, j] != 0 and (pivot is None or abs(A[i, j]) < abs(A[pivot[0], pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            i, j = pivot
            if i != s:
                A[[s, i]] = A[[i, s]]
                U[[s, i]] = U[[i, s]]
            if j != s:
                A[:, [s, j]] = A[:, [j, s]]
                V[:, [s, j]] = V[:, [j, s]]
            if A[s, s] < 0:
                A[s, :] = -A[s, :]
                U[s, :] = -U[s, :]
            clean = True
            for i in range(s + 1, rows):
                q = A[i, s] // A[s, s]
                if q:
                    A[i, :] -= q * A[s, :]
                    U[i, :] -= q * U[s, :]
                if A[i, s] != 0:
                    clean = False
            for j in range(s + 1, cols):
                q = A[s, j] // A[s, s]
                if q:
                    A[:, j] -= q * A[:, s]
                    V[:, j] -= q * V[:, s]
                if A[s, j] != 0:
                    clean = False
            if clean:
                # Enforce divisibility of the trailing block by the pivot.
                bad = None
                for i in range(s + 1, rows):
                    for j in range(s + 1, cols):
                        if A[i, j] % A[s, s] != 0:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                A[s, :] += A[bad, :]
                U[s, :] += U[bad, :]
        if A[s, s] == 0:
            break
    factors = [int(A[s, s]) for s in range(min(rows, cols))]
    return factors, U, V


def permutation_equivalent(A: np.ndarray, B: np.ndarray) -> list[int] | None:
    """Permutation f with B[f(i), f(j)] = A[i, j], or None.

    Backtracking over index assignments, pruned by row signatures; meant for
    the small symmetric matrices appearing as block Cartan matrices.
    """
    k = A.shape[0]
    if B.shape != A.shape:
        return None

    def signature(M, v):
        return (M[v, v], tuple(sorted(int(x) for x in M[v, :])))

    siga = [signature(A, v) for v in range(k)]
    sigb = [signature(B, v) for v in range(k)]
    if sorted(siga) != sorted(sigb):
        return None

    assignment: list[int] = []
    used = [False] * k

    def extend(v: int) -> bool:
        if v == k:
            return True
        for w in range(k):
            if used[w] or siga[v] != sigb[w]:
                continue
            if any(A[v, u] != B[w, assignment[u]] for u in range(v)):
                continue
            used[w] = True
            assignment.append(w)
            if extend(v + 1):
                return True
            assignment.pop()
            used[w] = False
        return False

    return assignment if extend(0) else None
