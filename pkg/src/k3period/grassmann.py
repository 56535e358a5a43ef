"""Positive planes in ``L (x) R`` and the symmetric-space distance between them.

Plane validation is exact (rational arithmetic). Orthonormal frames and
projectors are floating point; distances are exact up to a final 3x3
eigenproblem.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from . import linalg
from .errors import DegenerateBasisError, LatticeMismatchError, NotPositiveError, ShapeError
from .lattice import U_OFFSET, k3_lattice


class PositivePlane:
    """A positive definite subspace of maximal dimension, given by a rational basis.

    ``basis`` rows are coordinate vectors in the lattice basis. ``oriented``
    records whether the row order carries an orientation that matters to the
    caller; the frame itself is always the one induced by the row order.
    """

    def __init__(self, basis, lattice, oriented=True):
        self.basis = basis
        self.lattice = lattice
        self.oriented = oriented
        self.basis.flags.writeable = False

    @property
    def dim(self):
        return self.basis.shape[0]

    def restricted_gram(self):
        return self.basis.dot(self.lattice.gram).dot(self.basis.T)

    def integral_rows(self):
        """Basis rows scaled by positive integers to clear denominators."""
        return linalg.int_matrix([linalg.clear_denominators(r) for r in self.basis])

    def __repr__(self):
        return f"PositivePlane(dim={self.dim}, oriented={self.oriented})"


@dataclass(frozen=True)
class PlaneDistance:
    value: float
    hyperbolic_angles: tuple


def _leading_minors_positive(A):
    """Exact Sylvester criterion by rational Gaussian elimination."""
    n = A.shape[0]
    M = [[Fraction(x) for x in row] for row in A]
    for k in range(n):
        if M[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            M[i] = [a - f * b for a, b in zip(M[i], M[k])]
    return True


def plane_from_basis(basis, lattice=None, oriented=True):
    """Validate a rational basis and wrap it as a :class:`PositivePlane`.

    The number of rows must equal the positive index of the lattice. Raises
    ``DegenerateBasisError`` for dependent rows and ``NotPositiveError`` when
    the restricted form is not positive definite.
    """
    L = lattice or k3_lattice()
    B = linalg.rat_matrix(basis)
    p = L.signature[0]
    if B.shape != (p, L.rank):
        raise ShapeError(f"expected a {p}x{L.rank} basis, got {B.shape}")
    ints = [linalg.clear_denominators(r) for r in B]
    if linalg.rank_exact(ints) < p:
        raise DegenerateBasisError("basis rows are linearly dependent")
    if not _leading_minors_positive(B.dot(L.gram).dot(B.T)):
        raise NotPositiveError("restricted form is not positive definite")
    return PositivePlane(B, L, oriented)


def reference_rows(lattice):
    """Integer rows spanning the reference positive subspace.

    For the K3 lattice this is ``{e1+f1, e2+f2, e3+f3}``; other lattices use
    the positive directions of an exact congruence diagonalization.
    """
    if lattice == k3_lattice():
        rows = np.zeros((3, lattice.rank), dtype=object)
        rows[:] = 0
        for i in range(3):
            rows[i, U_OFFSET + 2 * i] = rows[i, U_OFFSET + 2 * i + 1] = 1
        return rows
    C, D = linalg.congruence_diagonalize(lattice.gram)
    pos = [linalg.clear_denominators(C[i]) for i, d in enumerate(D) if d > 0]
    return linalg.int_matrix(pos).reshape(len(pos), lattice.rank)


def p0(lattice=None):
    """The reference plane ``span{e1+f1, e2+f2, e3+f3}``."""
    L = lattice or k3_lattice()
    return plane_from_basis(reference_rows(L), L)


def orthonormalize(P):
    """Form-orthonormal frame ``E`` (rows) with ``E G E^T = I``.

    Gram-Schmidt runs in exact arithmetic; only the final normalization takes
    square roots.
    """
    G = P.lattice.gram
    rows = []
    norms = []
    for b in P.basis:
        w = np.array(b, dtype=object)
        for u, nu in zip(rows, norms):
            w = w - (u.dot(G).dot(w) / nu) * u
        rows.append(w)
        norms.append(w.dot(G).dot(w))
    return np.array([np.array(w, dtype=float) / np.sqrt(float(n)) for w, n in zip(rows, norms)])


def projector(P):
    """Matrix of the form-orthogonal projection onto ``P`` (acts on columns)."""
    E = orthonormalize(P)
    G = P.lattice.gram.astype(float)
    return E.T @ E @ G


def _same_lattice(P, Q):
    if P.lattice != Q.lattice:
        raise LatticeMismatchError("planes live in different lattices")


def planes_equal(P, Q, tol=1e-9):
    """Unoriented equality: the projectors agree entrywise within ``tol``."""
    _same_lattice(P, Q)
    return bool(np.max(np.abs(projector(P) - projector(Q))) <= tol)


def oriented_equal(P, Q, tol=1e-9):
    """Equality as oriented planes (frames related by positive determinant)."""
    if not planes_equal(P, Q, tol):
        return False
    G = P.lattice.gram.astype(float)
    A = orthonormalize(Q) @ G @ orthonormalize(P).T
    return bool(np.linalg.det(A) > 0)


def apply(g, P):
    """Image of ``P`` under an isometry ``g`` (rows mapped by ``g``)."""
    if g.lattice != P.lattice:
        raise LatticeMismatchError("isometry and plane live in different lattices")
    return PositivePlane(P.basis.dot(g.matrix.T), P.lattice, P.oriented)


def negative_frame(P):
    """Rows ``F`` spanning the orthogonal complement of ``P`` with ``F G F^T = -I``."""
    G = P.lattice.gram.astype(float)
    E = orthonormalize(P)
    N = scipy.linalg.null_space(E @ G).T
    H = -(N @ G @ N.T)
    L = np.linalg.cholesky((H + H.T) / 2)
    return np.linalg.solve(L, N)


def cross_gram(P, Q):
    """``E_P G E_Q^T`` for the orthonormal frames of two planes."""
    _same_lattice(P, Q)
    G = P.lattice.gram.astype(float)
    return orthonormalize(P) @ G @ orthonormalize(Q).T


def distance(P, Q):
    """Riemannian distance in the symmetric space of positive planes.

    With exact Gram data ``A = (P, P)``, ``B = (Q, Q)``, ``C = (P, Q)`` the
    squared hyperbolic sines of the principal angles are the eigenvalues of
    ``N = C B^-1 C^T - A`` relative to ``A``. ``N`` is formed in rational
    arithmetic, so the result depends only on the Gram data (hence is exactly
    invariant under isometries) and the cancellation for nearby planes costs
    nothing. The exact rank of ``N`` fixes which angles vanish.
    """
    _same_lattice(P, Q)
    G = P.lattice.gram
    A = P.basis.dot(G).dot(P.basis.T)
    B = Q.basis.dot(G).dot(Q.basis.T)
    C = P.basis.dot(G).dot(Q.basis.T)
    N = C.dot(linalg.inv_rational(B)).dot(C.T) - A
    k = A.shape[0]
    r = k - linalg.signature(N)[2]
    if r == 0:
        angles = np.zeros(k)
    else:
        lam = scipy.linalg.eigh(N.astype(float), A.astype(float), eigvals_only=True)
        lam = np.maximum(np.sort(lam)[::-1], 0.0)
        lam[r:] = 0.0
        angles = np.arcsinh(np.sqrt(lam))
    return PlaneDistance(float(np.sqrt(np.sum(angles**2))), tuple(float(a) for a in angles))


def chart_dimension(lattice=None):
    """Real dimension ``p * q`` of the space of positive ``p``-planes."""
    L = lattice or k3_lattice()
    p, q, _ = L.signature
    return p * q


def random_positive_plane(rng, lattice=None, low=-5, high=5):
    """Random integral positive plane of the K3 lattice.

    Draws rows with entries in ``[low, high]`` and adds growing multiples of
    ``e_i + f_i`` to row ``i`` until the restricted form is positive definite.
    """
    L = lattice or k3_lattice()
    R = reference_rows(L)
    rows = rng.integers(low, high + 1, size=R.shape).astype(object)
    base = np.array([[int(x) for x in r] for r in rows], dtype=object)
    m = 1
    while True:
        B = base + m * R
        G = B.dot(L.gram).dot(B.T)
        if _leading_minors_positive(G) and linalg.rank_exact(B) == R.shape[0]:
            return plane_from_basis(B, L)
        m *= 2
