"""LLL reduction of Gram matrices and complete enumeration of fixed-norm vectors.

Everything here is exact: Gram matrices are integer, Gram-Schmidt data are
``Fraction``. Floats only seed the search range at each level, and every
range endpoint is then corrected against the exact inequality.
"""
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import PreconditionError

LOVASZ = Fraction(3, 4)


@dataclass
class EnumerationStats:
    nodes_visited: int = 0
    lll_swaps: int = 0
    wall_time: float = 0.0

    def as_dict(self):
        return {"nodes_visited": self.nodes_visited, "lll_swaps": self.lll_swaps}


def _require_positive_definite(G):
    p, n, z = linalg.signature(G)
    if n or z:
        raise PreconditionError(f"form is not positive definite (signature {p},{n},{z})")


def lll_reduce(G, delta=LOVASZ, stats=None):
    """LLL-reduce a positive definite Gram matrix.

    Returns ``(T, R)`` with ``T`` unimodular and ``R = T G T^T`` LLL-reduced
    (size-reduced, Lovasz condition with parameter ``delta``). Rows of ``T``
    are the new basis vectors in old coordinates.
    """
    G = linalg.int_matrix(G)
    _require_positive_definite(G)
    n = G.shape[0]
    g = [list(row) for row in G]
    T = [list(row) for row in linalg.identity(n)]
    if n <= 1:
        return linalg.int_matrix(T).reshape(n, n), linalg.int_matrix(g).reshape(n, n)

    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    B[0] = Fraction(g[0][0])
    kmax = 0

    def red(k, l):
        if 2 * abs(mu[k][l]) <= 1:
            return
        q = math.floor(mu[k][l] + Fraction(1, 2))
        T[k] = [a - q * b for a, b in zip(T[k], T[l])]
        g[k] = [a - q * b for a, b in zip(g[k], g[l])]
        for row in g:
            row[k] -= q * row[l]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k):
        T[k], T[k - 1] = T[k - 1], T[k]
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        Bn = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / Bn
        B[k] = B[k - 1] * B[k] / Bn
        B[k - 1] = Bn
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k = 1
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                s = Fraction(g[k][j]) - sum(mu[j][i] * mu[k][i] * B[i] for i in range(j))
                mu[k][j] = s / B[j]
            B[k] = g[k][k] - sum(mu[k][j] ** 2 * B[j] for j in range(k))
        red(k, k - 1)
        if B[k] < (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            swap(k)
            if stats is not None:
                stats.lll_swaps += 1
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return linalg.int_matrix(T).reshape(n, n), linalg.int_matrix(g).reshape(n, n)


def _ldl(R):
    """``q(y) = sum_i d_i (y_i + sum_{j>i} m_ij y_j)^2`` for a positive definite ``R``."""
    n = len(R)
    A = [[Fraction(x) for x in row] for row in R]
    d = [Fraction(0)] * n
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = A[i][i]
        for j in range(i + 1, n):
            m[i][j] = A[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                A[j][k] -= m[i][j] * A[i][k]
    return d, m


def _range(di, c, r):
    """Sorted integers ``y`` with ``di * (y - c)^2 <= r``: by |y|, positive first."""
    if r < 0:
        return []
    s = math.sqrt(float(r / di))
    cf = float(c)
    lo, hi = math.ceil(cf - s), math.floor(cf + s)

    def ok(y):
        return di * (y - c) ** 2 <= r

    while ok(lo - 1):
        lo -= 1
    while lo <= hi and not ok(lo):
        lo += 1
    while ok(hi + 1):
        hi += 1
    while hi >= lo and not ok(hi):
        hi -= 1
    return sorted(range(lo, hi + 1), key=lambda y: (abs(y), -y))


def _search(d, m, target, n, top=None):
    """Depth-first search over levels ``n-1 .. 0``; returns (solutions, nodes)."""
    out = []
    y = [0] * n
    nodes = 0

    def rec(i, budget):
        nonlocal nodes
        c = -sum(m[i][j] * y[j] for j in range(i + 1, n) if y[j])
        cands = _range(d[i], c, budget)
        if i == n - 1 and top is not None:
            cands = [top] if top in cands else []
        for v in cands:
            nodes += 1
            y[i] = v
            rest = budget - d[i] * (v - c) ** 2
            if i == 0:
                if rest == 0:
                    out.append(tuple(y))
            else:
                rec(i - 1, rest)
        y[i] = 0

    rec(n - 1, Fraction(target))
    return out, nodes


def _search_top(args):
    return _search(*args)


def enumerate_norm(G, target, stats=None, jobs=1):
    """All integer vectors ``v`` with ``v^T G v == target`` for positive definite ``G``.

    The search runs in the LLL-reduced basis (Fincke-Pohst with exact
    rational bounds) and the solutions are mapped back to the coordinates of
    ``G``. Output order is deterministic and independent of ``jobs``.
    """
    start = time.perf_counter()
    G = linalg.int_matrix(G)
    if target < 1:
        raise PreconditionError("target norm must be a positive integer")
    n = G.shape[0]
    if n == 0:
        _require_positive_definite(G)
        return []
    own = stats if stats is not None else EnumerationStats()
    T, R = lll_reduce(G, stats=own)
    d, m = _ldl([list(row) for row in R])
    if jobs > 1:
        tops = _range(d[n - 1], Fraction(0), Fraction(target))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_search_top, [(d, m, target, n, t) for t in tops]))
        sols = [s for part, _ in parts for s in part]
        nodes = sum(k for _, k in parts)
    else:
        sols, nodes = _search(d, m, target, n)
    own.nodes_visited += nodes
    Tt = [list(col) for col in T.T]
    out = [tuple(sum(a * b for a, b in zip(row, y) if b) for row in Tt) for y in sols]
    own.wall_time += time.perf_counter() - start
    return out
