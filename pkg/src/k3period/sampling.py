"""Random vectors, reflections and planes of the K3 lattice for randomized checks."""
import os
from functools import lru_cache

import numpy as np

from .grassmann import random_positive_plane
from .isometry import Isometry, compose, reflection
from .lattice import U_OFFSET, LatticeVector, build_e8, k3_lattice
from .reduction import enumerate_norm

DEFAULT_SEED = 20261015


def rng_from_env(default=DEFAULT_SEED):
    """Generator seeded from ``K3_PERIOD_SEED`` when set."""
    seed = os.environ.get("K3_PERIOD_SEED")
    return np.random.default_rng(int(seed) if seed else default)


@lru_cache(maxsize=None)
def e8_roots():
    """The 240 roots of E8 in simple-root coordinates."""
    return tuple(enumerate_norm(build_e8().gram, 2))


def _divisor(rng, m):
    divs = [d for d in range(1, abs(m) + 1) if m % d == 0]
    return int(rng.choice(divs)) * int(rng.choice([-1, 1]))


def random_reflection_vector(rng, norm=None, lattice=None):
    """A K3 vector of norm +-2 drawn from one of three families.

    * ``u``: hyperbolic-plane vectors ``x e + y f`` spread over the U blocks,
    * ``e8``: a root of one of the two ``-E8`` blocks,
    * ``mixed``: a random ``-E8`` part corrected by a U part to hit the norm.
    """
    L = lattice or k3_lattice()
    if norm is None:
        norm = int(rng.choice([-2, 2]))
    family = rng.choice(["u", "e8", "mixed"]) if norm == -2 else rng.choice(["u", "mixed"])
    c = [0] * L.rank
    roots = e8_roots()
    if family == "e8":
        block = int(rng.integers(2))
        c[8 * block : 8 * block + 8] = roots[int(rng.integers(len(roots)))]
        return LatticeVector(c, L)
    e8_norm = 0
    if family == "mixed":
        for block in range(2):
            for _ in range(int(rng.integers(0, 3))):
                r = roots[int(rng.integers(len(roots)))]
                for k in range(8):
                    c[8 * block + k] += r[k]
        v = LatticeVector(c, L)
        e8_norm = v.norm
    # choose U-block coordinates with 2 * sum(x_i y_i) = norm - e8_norm
    need = (norm - e8_norm) // 2
    i = int(rng.integers(3))
    j = int(rng.integers(3))
    if j != i and rng.random() < 0.5:
        # put an arbitrary product in block j, solve in block i
        a, b = (int(x) for x in rng.integers(-3, 4, size=2))
        c[U_OFFSET + 2 * j], c[U_OFFSET + 2 * j + 1] = a, b
        need -= a * b
    if need == 0:
        x = int(rng.integers(-3, 4))
        c[U_OFFSET + 2 * i] = x
        c[U_OFFSET + 2 * i + 1] = 0
    else:
        x = _divisor(rng, need)
        c[U_OFFSET + 2 * i] = x
        c[U_OFFSET + 2 * i + 1] = need // x
    v = LatticeVector(c, L)
    assert v.norm == norm
    return v


def random_reflection_word(rng, length, lattice=None):
    L = lattice or k3_lattice()
    g = Isometry.identity(L)
    for _ in range(length):
        g = compose(reflection(random_reflection_vector(rng, lattice=L)), g)
    return g


__all__ = [
    "DEFAULT_SEED",
    "e8_roots",
    "random_positive_plane",
    "random_reflection_vector",
    "random_reflection_word",
    "rng_from_env",
]
