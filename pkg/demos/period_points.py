"""Which positive planes are orthogonal to (-2)-vectors, and what type of singularity they give."""
from k3period import apply, p0, period_check, plane_from_basis
from k3period.sampling import random_reflection_word, rng_from_env


def row(i, x, y):
    r = [0] * 22
    r[16 + 2 * (i - 1)], r[17 + 2 * (i - 1)] = x, y
    return r


P0 = p0()
v = period_check(P0)
print("P0 smooth:", v.in_T)
print("roots orthogonal to P0:", v.root_count)
print("type:", " + ".join(map(str, v.ade)))
print("nodes visited:", v.stats.nodes_visited, " LLL swaps:", v.stats.lll_swaps)

Q = plane_from_basis([row(1, 1, 2), row(2, 1, 1), row(3, 1, 1)])
w = period_check(Q)
print()
print("e1+2f1 plane:", w.root_count, "roots,", " + ".join(map(str, w.ade)))

# the verdict only depends on the orbit of the plane
rng = rng_from_env()
g = random_reflection_word(rng, 4)
u = period_check(apply(g, P0))
print()
print("image of P0 under a random word:", u.root_count, "roots,", " + ".join(map(str, u.ade)))
