"""Lattices given by integer Gram matrices, and the K3 lattice in particular.

The K3 lattice is ``(-E8) + (-E8) + U + U + U`` with basis order

* 0-7: first ``-E8`` block,
* 8-15: second ``-E8`` block,
* 16-17, 18-19, 20-21: the hyperbolic pairs ``(e1, f1)``, ``(e2, f2)``, ``(e3, f3)``.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import linalg
from .errors import LatticeMismatchError, ShapeError

# Edges of the E8 Dynkin diagram: chain 0-1-2-3-4-5-6, node 7 hangs off node 2.
E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7))

K3_RANK = 22
U_OFFSET = 16


class Lattice:
    """A free Z-module with a symmetric integer bilinear form."""

    def __init__(self, gram, label=None):
        G = linalg.int_matrix(gram) if np.size(gram) else np.empty((0, 0), dtype=object)
        if G.shape[0] != G.shape[1]:
            raise ShapeError(f"Gram matrix must be square, got {G.shape}")
        if not all(G[i, j] == G[j, i] for i in range(G.shape[0]) for j in range(i)):
            raise ShapeError("Gram matrix must be symmetric")
        G.flags.writeable = False
        self.gram = G
        self.label = label

    @property
    def rank(self):
        return self.gram.shape[0]

    @cached_property
    def det(self):
        return linalg.det_exact(self.gram)

    @cached_property
    def signature(self):
        return linalg.signature(self.gram)

    @cached_property
    def even(self):
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    @property
    def unimodular(self):
        return abs(self.det) == 1

    @cached_property
    def _key(self):
        return tuple(tuple(row) for row in self.gram)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __neg__(self):
        label = None
        if self.label:
            label = self.label[1:] if self.label.startswith("-") else "-" + self.label
        return Lattice(-self.gram, label)

    def __repr__(self):
        return f"Lattice({self.label or 'rank %d' % self.rank})"

    def vector(self, coords):
        return LatticeVector(coords, self)

    def basis_vector(self, i):
        c = [0] * self.rank
        c[i] = 1
        return LatticeVector(c, self)


@dataclass(frozen=True, eq=False)
class LatticeVector:
    """Integer coordinates with respect to the basis of ``lattice``."""

    coords: tuple
    lattice: Lattice

    def __post_init__(self):
        coords = tuple(int(x) for x in self.coords)
        if len(coords) != self.lattice.rank:
            raise ShapeError(f"expected {self.lattice.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    def _check(self, other):
        if not isinstance(other, LatticeVector):
            return NotImplemented
        if other.lattice != self.lattice:
            raise LatticeMismatchError("vectors live in different lattices")
        return other

    def __eq__(self, other):
        if not isinstance(other, LatticeVector):
            return NotImplemented
        return self.coords == other.coords and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        self._check(other)
        return LatticeVector([a + b for a, b in zip(self.coords, other.coords)], self.lattice)

    def __sub__(self, other):
        self._check(other)
        return LatticeVector([a - b for a, b in zip(self.coords, other.coords)], self.lattice)

    def __neg__(self):
        return LatticeVector([-a for a in self.coords], self.lattice)

    def __rmul__(self, k):
        return LatticeVector([k * a for a in self.coords], self.lattice)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        label = self.lattice.label or "L"
        return f"LatticeVector({list(self.coords)}, {label})"

    @property
    def norm(self):
        return inner(self, self)


def build_e8():
    """E8 Gram matrix from its Dynkin diagram: 2 on the diagonal, -1 on edges."""
    G = np.zeros((8, 8), dtype=int)
    np.fill_diagonal(G, 2)
    for i, j in E8_EDGES:
        G[i, j] = G[j, i] = -1
    return Lattice(G, "e8")


def build_u():
    return Lattice([[0, 1], [1, 0]], "u")


def build_a1(sign=1):
    return Lattice([[2 * sign]], "a1" if sign > 0 else "-a1")


def direct_sum(*lattices, label=None):
    """Orthogonal direct sum with a block-diagonal Gram matrix."""
    n = sum(L.rank for L in lattices)
    G = np.zeros((n, n), dtype=object)
    G[:] = 0
    k = 0
    for L in lattices:
        G[k : k + L.rank, k : k + L.rank] = L.gram
        k += L.rank
    if label is None and all(L.label for L in lattices):
        label = "+".join(L.label for L in lattices)
    return Lattice(G, label)


@lru_cache(maxsize=None)
def k3_lattice():
    """The K3 lattice ``(-E8) + (-E8) + U^3`` (rank 22, signature (3, 19))."""
    mE8 = -build_e8()
    U = build_u()
    return direct_sum(mE8, mE8, U, U, U, label="k3")


def inner(v, w):
    """The bilinear pairing ``v^T G w``, exact."""
    if v.lattice != w.lattice:
        raise LatticeMismatchError("vectors live in different lattices")
    G = v.lattice.gram
    a, b = v.coords, w.coords
    return sum(a[i] * sum(G[i, j] * b[j] for j in range(len(b)) if b[j]) for i in range(len(a)) if a[i])


def is_root(v):
    """``(is_root, norm)``: roots are the vectors of norm -2."""
    n = inner(v, v)
    return n == -2, n


def k3_e(i, lattice=None):
    """The isotropic vector ``e_i`` (i = 1, 2, 3) of the i-th hyperbolic plane."""
    L = lattice or k3_lattice()
    return L.basis_vector(U_OFFSET + 2 * (i - 1))


def k3_f(i, lattice=None):
    L = lattice or k3_lattice()
    return L.basis_vector(U_OFFSET + 2 * (i - 1) + 1)


def builtin_lattice(name):
    """Lattices addressable by name: k3, e8, -e8, u, a1, -a1."""
    table = {
        "k3": k3_lattice,
        "e8": build_e8,
        "-e8": lambda: -build_e8(),
        "u": build_u,
        "a1": build_a1,
        "-a1": lambda: build_a1(-1),
    }
    try:
        return table[name]()
    except KeyError:
        raise ValueError(f"unknown lattice {name!r}; choose from {sorted(table)}") from None
