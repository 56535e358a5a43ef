"""Exact integer and rational matrix routines.

Matrices are numpy arrays of ``dtype=object`` holding Python ``int`` or
``fractions.Fraction`` entries, so nothing is ever rounded.
"""
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import NotUnimodularError, ShapeError


def int_matrix(rows):
    """Coerce ``rows`` to a 2-D object array of Python ints.

    Accepts nested sequences or numpy arrays; entries that are not integral
    raise ``ValueError``.
    """
    A = np.array(rows, dtype=object)
    if A.ndim == 1 and A.size == 0:
        A = A.reshape(0, 0)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={A.ndim}")
    out = np.empty(A.shape, dtype=object)
    for idx, x in np.ndenumerate(A):
        if isinstance(x, Rational) and not isinstance(x, bool):
            if Fraction(x).denominator != 1:
                raise ValueError(f"non-integral entry {x!r}")
            out[idx] = int(x)
        elif isinstance(x, (int, np.integer)):
            out[idx] = int(x)
        elif isinstance(x, float) and x.is_integer():
            out[idx] = int(x)
        else:
            raise ValueError(f"non-integral entry {x!r}")
    return out


def rat_matrix(rows):
    """Coerce ``rows`` to a 2-D object array of ``Fraction`` entries.

    Strings such as ``"3/4"`` are parsed exactly. Floats are rejected so that
    inexact input cannot slip in silently.
    """
    A = np.array(rows, dtype=object)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={A.ndim}")
    out = np.empty(A.shape, dtype=object)
    for idx, x in np.ndenumerate(A):
        if isinstance(x, float):
            raise ValueError(f"inexact entry {x!r}")
        out[idx] = Fraction(int(x)) if isinstance(x, np.integer) else Fraction(x)
    return out


def identity(n):
    I = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            I[i, j] = int(i == j)
    return I


def _require_square(M):
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {M.shape}")


def det_exact(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    M = int_matrix(M)
    _require_square(M)
    n = M.shape[0]
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def hnf(M):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U @ M == H``, ``U`` unimodular, pivots positive
    and the entries above each pivot reduced into ``[0, pivot)``. Zero rows
    are collected at the bottom of ``H``.
    """
    M = int_matrix(M)
    m, n = M.shape
    A = [list(row) for row in M]
    U = [list(row) for row in identity(m)]

    def addmul(dst, src, q):
        # row_dst -= q * row_src, in both A and U
        if q:
            A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def swap(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    row = 0
    for col in range(n):
        if row == m:
            break
        while True:
            nz = [r for r in range(row, m) if A[r][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(A[r][col]))
            swap(row, piv)
            if len(nz) == 1:
                break
            for r in range(row + 1, m):
                if A[r][col] != 0:
                    addmul(r, row, A[r][col] // A[row][col])
        if row < m and A[row][col] != 0:
            if A[row][col] < 0:
                A[row] = [-a for a in A[row]]
                U[row] = [-a for a in U[row]]
            p = A[row][col]
            for r in range(row):
                addmul(r, row, A[r][col] // p)
            row += 1
    return int_matrix(A).reshape(m, n), int_matrix(U).reshape(m, m)


def is_hnf(H):
    """Shape predicate for the row HNF convention used by :func:`hnf`."""
    H = int_matrix(H)
    last_pivot = -1
    seen_zero = False
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x != 0]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        j = nz[0]
        if j <= last_pivot or row[j] <= 0:
            return False
        for r in range(i):
            if not 0 <= H[r, j] < row[j]:
                return False
        last_pivot = j
    return True


def rank_exact(M):
    H, _ = hnf(M)
    return sum(1 for row in H if any(x != 0 for x in row))


def snf(M):
    """Smith invariant factors ``(d1, d2, ...)``, ``d1 | d2 | ...``.

    The tuple has length ``min(rows, cols)``; zeros (rank deficiency) come
    last.
    """
    A = [list(row) for row in int_matrix(M)]
    m = len(A)
    n = len(A[0]) if m else 0
    k = min(m, n)
    for t in range(k):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j] != 0]
            if not entries:
                return tuple(abs(A[i][i]) for i in range(t)) + (0,) * (k - t)
            _, pi, pj = min(entries)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t] != 0:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j] != 0:
                    done = False
            if not done:
                continue
            # divisibility: fold an offending row into row t and repeat
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p != 0),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
    return tuple(abs(A[i][i]) for i in range(k))


def int_kernel(M):
    """Saturated integer kernel of ``M``.

    Returns a matrix whose rows form a basis (in HNF) of the lattice
    ``{v in Z^n : M v = 0}``. The result has shape ``(n - rank, n)``.
    """
    M = int_matrix(M)
    m, n = M.shape
    if m == 0:
        return identity(n)
    H, U = hnf(M.T)
    rows = [U[i] for i in range(n) if all(x == 0 for x in H[i])]
    if not rows:
        return np.empty((0, n), dtype=object)
    K, _ = hnf(np.array(rows, dtype=object))
    return K


def congruence_diagonalize(G):
    """Rational ``C`` and diagonal ``D`` with ``C @ G @ C.T == diag(D)``.

    Zero pivots are handled by adding a row/column with a nonzero pairing
    into the pivot position.
    """
    G = np.array(G, dtype=object)
    _require_square(G)
    n = G.shape[0]
    A = [[Fraction(x) for x in row] for row in G]
    for i in range(n):
        for j in range(i):
            if A[i][j] != A[j][i]:
                raise ShapeError("matrix is not symmetric")
    C = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        C[i], C[j] = C[j], C[i]

    def add(dst, src, f):
        # row/col dst += f * row/col src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        for row in A:
            row[dst] += f * row[src]
        C[dst] = [a + f * b for a, b in zip(C[dst], C[src])]

    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if A[i][j] != 0), None)
                if j is None:
                    continue
                add(i, j, Fraction(1))
        p = A[i][i]
        for j in range(i + 1, n):
            if A[j][i] != 0:
                add(j, i, -A[j][i] / p)
    D = [A[i][i] for i in range(n)]
    return np.array(C, dtype=object).reshape(n, n), D


def signature(G):
    """``(positive, negative, zero)`` counts of a symmetric form."""
    _, D = congruence_diagonalize(G)
    return (sum(d > 0 for d in D), sum(d < 0 for d in D), sum(d == 0 for d in D))


def inv_rational(M):
    """Exact inverse of a nonsingular integer or rational matrix (Gauss-Jordan)."""
    M = rat_matrix(M)
    _require_square(M)
    n = M.shape[0]
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return rat_matrix([row[n:] for row in A]).reshape(n, n)


def inv_unimodular(M):
    """Exact integer inverse of a matrix with determinant +-1."""
    M = int_matrix(M)
    _require_square(M)
    if abs(det_exact(M)) != 1:
        raise NotUnimodularError("matrix determinant is not +-1")
    return int_matrix(inv_rational(M))


def clear_denominators(row):
    """Smallest positive integer multiple of a rational vector that is integral."""
    from math import lcm

    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def fmt_rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    if isinstance(s, bool):
        raise ValueError("boolean is not a rational")
    if isinstance(s, float):
        raise ValueError(f"inexact entry {s!r}")
    return Fraction(s)
