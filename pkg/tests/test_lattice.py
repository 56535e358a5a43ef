import numpy as np
import pytest

from k3period import Lattice, build_e8, build_u, direct_sum, inner, is_root, k3_e, k3_f, k3_lattice
from k3period.errors import LatticeMismatchError, ShapeError
from k3period.lattice import E8_EDGES, builtin_lattice
from k3period.linalg import det_exact
from oracles import eigen_signature


def test_e8_gram_entries():
    G = build_e8().gram
    assert G[0, 0] == 2 and G[0, 1] == -1 and G[0, 2] == 0
    # branch node 7 hangs off chain node 2
    assert G[2, 7] == -1 and G[7, 2] == -1
    off = {(i, j) for i in range(8) for j in range(8) if i != j and G[i, j] != 0}
    assert off == {(i, j) for i, j in E8_EDGES} | {(j, i) for i, j in E8_EDGES}
    assert all(G[i, j] == -1 for i, j in off)


def test_e8_invariants():
    E8 = build_e8()
    assert E8.det == 1
    assert E8.signature == (8, 0, 0)
    assert eigen_signature(E8.gram.astype(float)) == (8, 0, 0)
    assert E8.even


def test_u():
    U = build_u()
    assert U.gram.tolist() == [[0, 1], [1, 0]]
    assert U.signature == (1, 1, 0)
    assert U.even
    assert U.det == -1


def test_direct_sums():
    U = build_u()
    assert direct_sum(U, U).rank == 4
    assert direct_sum(U, U).det == 1
    E8 = build_e8()
    empty = Lattice(np.empty((0, 0), dtype=object))
    assert direct_sum(E8, empty) == E8
    assert direct_sum(-E8, U).signature == (1, 9, 0)


def test_direct_sum_multiplicative(rng):
    for _ in range(30):
        blocks = []
        for _ in range(int(rng.integers(1, 4))):
            n = int(rng.integers(1, 4))
            A = rng.integers(-3, 4, size=(n, n))
            blocks.append(Lattice(A + A.T))
        S = direct_sum(*blocks)
        assert S.rank == sum(b.rank for b in blocks)
        prod = 1
        for b in blocks:
            prod *= det_exact(b.gram)
        assert det_exact(S.gram) == prod
        sig = tuple(sum(b.signature[k] for b in blocks) for k in range(3))
        assert S.signature == sig


def test_k3_lattice():
    L = k3_lattice()
    assert L.rank == 22
    assert L.signature == (3, 19, 0)
    assert L.det == -1  # 1 * 1 * (-1)^3
    assert L.even and L.unimodular
    assert (L.gram == L.gram.T).all()
    assert (L.gram[:8, :8] == -build_e8().gram).all()
    assert (L.gram[8:16, 8:16] == -build_e8().gram).all()
    for i in range(3):
        k = 16 + 2 * i
        assert L.gram[k : k + 2, k : k + 2].tolist() == [[0, 1], [1, 0]]


def test_inner_examples():
    L = k3_lattice()
    e1, f1 = k3_e(1), k3_f(1)
    assert inner(e1, f1) == 1
    assert inner(e1 + f1, e1 + f1) == 2
    assert inner(L.basis_vector(0), L.basis_vector(0)) == -2


def test_inner_bilinear_symmetric(rng):
    L = k3_lattice()
    for _ in range(100):
        a, b, c = (L.vector(rng.integers(-5, 6, size=22)) for _ in range(3))
        s, t = (int(x) for x in rng.integers(-4, 5, size=2))
        assert inner(a, b) == inner(b, a)
        assert inner(s * a + t * b, c) == s * inner(a, c) + t * inner(b, c)


def test_inner_mismatch():
    with pytest.raises(LatticeMismatchError):
        inner(k3_e(1), build_u().basis_vector(0))


def test_is_root():
    e1, f1 = k3_e(1), k3_f(1)
    assert is_root(e1 - f1) == (True, -2)
    assert is_root(e1 + f1) == (False, 2)
    assert is_root(e1) == (False, 0)


def test_vector_length_checked():
    with pytest.raises(ShapeError):
        k3_lattice().vector([1, 2, 3])


def test_builtins():
    assert builtin_lattice("-e8").signature == (0, 8, 0)
    assert builtin_lattice("a1").gram.tolist() == [[2]]
    assert builtin_lattice("-a1").gram.tolist() == [[-2]]
    with pytest.raises(ValueError):
        builtin_lattice("d4")


def test_non_symmetric_gram():
    with pytest.raises(ShapeError):
        Lattice([[0, 1], [2, 0]])
