"""The K3 lattice and its E8 blocks."""
import numpy as np

from k3period import build_e8, enumerate_norm, k3_lattice, ade_classify
from k3period.lattice import LatticeVector

L = k3_lattice()
print("rank:", L.rank)
print("signature (pos, neg, zero):", L.signature)
print("det:", L.det, " even:", L.even, " unimodular:", L.unimodular)

E8 = build_e8()
print()
print("E8 Gram matrix:")
print(np.array(E8.gram, dtype=int))

roots = enumerate_norm(E8.gram, 2)
print("vectors of norm 2 in E8:", len(roots))
print("first few:", roots[:4])

# the same roots classify as a single E8 component
print("ADE type:", ade_classify([LatticeVector(r, E8) for r in roots]))
