"""The symmetric-space distance between positive planes."""
import math

from k3period import apply, distance, p0, plane_from_basis
from k3period.grassmann import random_positive_plane
from k3period.sampling import random_reflection_word, rng_from_env


def row(i, x, y):
    r = [0] * 22
    r[16 + 2 * (i - 1)], r[17 + 2 * (i - 1)] = x, y
    return r


P0 = p0()
Q = plane_from_basis([row(1, 1, 2), row(2, 1, 1), row(3, 1, 1)])
d = distance(P0, Q)
print("d(P0, Q):", d.value)
print("ln(2)/2: ", math.log(2) / 2)
print("hyperbolic angles:", d.hyperbolic_angles)

rng = rng_from_env()
P, R = random_positive_plane(rng), random_positive_plane(rng)
g = random_reflection_word(rng, 5)
print()
print("d(P, R)   :", distance(P, R).value)
print("d(gP, gR) :", distance(apply(g, P), apply(g, R)).value)
print("d(P,Q)+d(Q,R) - d(P,R):", distance(P, Q).value + distance(Q, R).value - distance(P, R).value)
