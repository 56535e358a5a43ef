"""Smooth-versus-orbifold verdicts for period points.

A positive 3-plane is a smooth point when no (-2)-vector of the lattice is
orthogonal to it. Otherwise the orthogonal roots form an ADE root system
naming the orbifold singularity.
"""
import time
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .ade import ade_classify
from .errors import ExactnessError
from .grassmann import PositivePlane
from .lattice import LatticeVector
from .reduction import EnumerationStats, enumerate_norm


@dataclass(frozen=True)
class OrthoSublattice:
    basis: np.ndarray
    restricted_gram: np.ndarray

    @property
    def rank(self):
        return self.basis.shape[0]


@dataclass
class PeriodVerdict:
    in_T: bool
    roots: list
    ade: list
    root_count: int
    stats: EnumerationStats = field(default_factory=EnumerationStats)

    @property
    def smooth(self):
        return self.in_T


def ortho_sublattice(P):
    """Primitive basis of the lattice vectors orthogonal to ``P``."""
    if not isinstance(P, PositivePlane):
        raise ExactnessError("expected an exact rational PositivePlane")
    L = P.lattice
    M = P.integral_rows().dot(L.gram)
    K = linalg.int_kernel(M)
    RG = K.dot(L.gram).dot(K.T)
    p, q, z = linalg.signature(RG)
    if p or z or K.shape[0] != L.rank - P.dim:
        raise AssertionError(f"orthogonal complement has signature ({p},{q},{z})")
    return OrthoSublattice(K, RG)


def period_check(P, jobs=1):
    """Enumerate the (-2)-roots orthogonal to ``P`` and classify them.

    Exact end to end: every returned root has norm -2 and pairs to zero with
    every basis row of ``P``.
    """
    start = time.perf_counter()
    stats = EnumerationStats()
    S = ortho_sublattice(P)
    L = P.lattice
    if S.rank == 0:
        sols = []
    else:
        sols = enumerate_norm(-S.restricted_gram, 2, stats=stats, jobs=jobs)
    K = S.basis
    roots = [LatticeVector(np.array(y, dtype=object).dot(K), L) for y in sols]
    ade = ade_classify(roots)
    if sum(c.root_count for c in ade) != len(roots):
        raise AssertionError("ADE root count does not match the enumeration")
    stats.wall_time = time.perf_counter() - start
    return PeriodVerdict(not roots, roots, ade, len(roots), stats)
