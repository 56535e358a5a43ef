"""Integral isometries, reflections in vectors of norm +-2, and fixed planes."""
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import grassmann, linalg
from .errors import (
    CertificateError,
    LatticeMismatchError,
    NotIsometryError,
    NotReflectionVectorError,
    ShapeError,
)
from .lattice import LatticeVector, inner

DEFAULT_TOL = 1e-9


def is_isometry(m, lattice):
    """True iff ``m^T G m == G`` exactly."""
    M = linalg.int_matrix(m)
    if M.shape != (lattice.rank, lattice.rank):
        raise ShapeError(f"expected a {lattice.rank}x{lattice.rank} matrix, got {M.shape}")
    G = lattice.gram
    return bool((M.T.dot(G).dot(M) == G).all())


class Isometry:
    """An integer matrix acting on column coordinate vectors and preserving the form."""

    def __init__(self, matrix, lattice, check=True):
        M = linalg.int_matrix(matrix)
        if check and not is_isometry(M, lattice):
            raise NotIsometryError("matrix does not preserve the Gram form")
        M.flags.writeable = False
        self.matrix = M
        self.lattice = lattice

    @classmethod
    def identity(cls, lattice):
        return cls(linalg.identity(lattice.rank), lattice, check=False)

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, v):
        if v.lattice != self.lattice:
            raise LatticeMismatchError("vector and isometry live in different lattices")
        return LatticeVector(self.matrix.dot(np.array(v.coords, dtype=object)), self.lattice)

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.lattice == other.lattice and bool((self.matrix == other.matrix).all())

    def __hash__(self):
        return hash(tuple(self.matrix.flat))

    @property
    def det(self):
        return linalg.det_exact(self.matrix)

    def __repr__(self):
        return f"Isometry(rank={self.lattice.rank})"


def compose(g, h):
    """``g . h`` (apply ``h`` first)."""
    if g.lattice != h.lattice:
        raise LatticeMismatchError("isometries live in different lattices")
    return Isometry(g.matrix.dot(h.matrix), g.lattice, check=False)


def inverse(g):
    return Isometry(linalg.inv_unimodular(g.matrix), g.lattice, check=False)


def reflection(delta):
    """Reflection ``x -> x - 2 (x, d) / (d, d) d`` in a vector of norm +-2.

    For norm -2 this is ``x + (x, d) d``; for norm +2 it is ``x - (x, d) d``.
    """
    n = inner(delta, delta)
    if n not in (2, -2):
        raise NotReflectionVectorError(f"reflection vector must have norm +-2, got {n}")
    L = delta.lattice
    d = np.array(delta.coords, dtype=object).reshape(-1, 1)
    # 2 / (d, d) is -+1, so the matrix stays integral
    S = linalg.identity(L.rank) - (2 // n) * d.dot(d.T).dot(L.gram)
    return Isometry(S, L, check=False)


@dataclass(frozen=True)
class ComponentClass:
    """Connected component of ``O(p, q)``: determinant and action on positive orientation."""

    det: int
    orientation: int

    @property
    def preserving(self):
        return self.orientation > 0

    @property
    def special(self):
        return self.det == 1

    def __mul__(self, other):
        return ComponentClass(self.det * other.det, self.orientation * other.orientation)

    def as_dict(self):
        return {
            "det": self.det,
            "pos_orientation": "preserving" if self.preserving else "reversing",
            "special": self.special,
        }


def classify_component(g):
    """Which of the four components of ``O(p, q)`` contains ``g``.

    The orientation sign is the sign of ``det(V^T G g V)`` for the integer
    rows ``V`` of the reference plane; both ``V`` and ``gV`` span maximal
    positive subspaces, so this 3x3 matrix is never singular.
    """
    V = grassmann.reference_rows(g.lattice)
    cross = V.dot(g.lattice.gram).dot(g.matrix).dot(V.T)
    o = linalg.det_exact(cross)
    d = linalg.det_exact(g.matrix)
    return ComponentClass(1 if d > 0 else -1, 1 if o > 0 else -1)


@dataclass(frozen=True)
class FixedPlaneCertificate:
    root: LatticeVector
    plane: grassmann.PositivePlane
    residual: float


def fixed_plane(delta):
    """A positive plane mapped to itself by the reflection in ``delta``.

    Norm -2: three positive directions of ``delta^perp`` (pointwise fixed).
    Norm +2: two positive directions of ``delta^perp`` together with
    ``delta`` (setwise fixed, orientation reversed).
    """
    n = inner(delta, delta)
    if n not in (2, -2):
        raise NotReflectionVectorError(f"reflection vector must have norm +-2, got {n}")
    L = delta.lattice
    p = L.signature[0]
    d = np.array(delta.coords, dtype=object)
    K = linalg.int_kernel(d.dot(L.gram).reshape(1, -1))
    C, D = linalg.congruence_diagonalize(K.dot(L.gram).dot(K.T))
    W = C.dot(K)
    need = p if n == -2 else p - 1
    rows = [linalg.clear_denominators(W[i]) for i, x in enumerate(D) if x > 0][:need]
    if n == 2:
        rows.append(list(delta.coords))
    plane = grassmann.plane_from_basis(rows, L)
    image = grassmann.apply(reflection(delta), plane)
    return FixedPlaneCertificate(delta, plane, grassmann.distance(plane, image).value)


def certify_generators(roots, tol=DEFAULT_TOL):
    """One fixed-plane certificate per reflection vector, in input order."""
    out = []
    for i, r in enumerate(roots):
        try:
            cert = fixed_plane(r)
        except NotReflectionVectorError as exc:
            raise CertificateError(f"root {i}: {exc}", index=i) from exc
        if not cert.residual < tol:
            raise CertificateError(f"root {i}: residual {cert.residual:g} exceeds {tol:g}", index=i)
        out.append(cert)
    return out


class Orbit(NamedTuple):
    vectors: list
    truncated: bool


def orbit(v, gens, cap=10000):
    """Breadth-first closure of ``{v}`` under ``gens`` and their inverses.

    Stops after ``cap`` vectors; ``truncated`` says whether it stopped early.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    moves = []
    for g in gens:
        moves.append(g)
        ginv = inverse(g)
        if ginv != g:
            moves.append(ginv)
    seen = {v}
    order = [v]
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for g in moves:
            y = g(x)
            if y in seen:
                continue
            if len(order) >= cap:
                return Orbit(order, True)
            seen.add(y)
            order.append(y)
            queue.append(y)
    return Orbit(order, False)
