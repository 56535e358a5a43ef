"""ADE type of a finite root system given by its roots (norm +-2 lattice vectors)."""
from typing import NamedTuple

import numpy as np

from .errors import ClassificationError

_TYPE_ORDER = {"E": 0, "D": 1, "A": 2}
_BASES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class ADEComponent(NamedTuple):
    type: str
    rank: int

    @property
    def root_count(self):
        n = self.rank
        if self.type == "A":
            return n * (n + 1)
        if self.type == "D":
            return 2 * n * (n - 1)
        return {6: 72, 7: 126, 8: 240}[n]

    def __str__(self):
        return f"{self.type}{self.rank}"


def _functional(roots):
    """Integer weights ``w`` with ``w . r != 0`` for every root.

    Tries base-``b`` weights ``(1, b, b^2, ...)`` for a fixed list of primes;
    once ``b > 2 max|coord|`` no nonzero vector can vanish, so the search
    always terminates.
    """
    n = roots.shape[1]
    bound = 2 * max((abs(int(x)) for x in roots.flat), default=0) + 1
    bases = list(_BASES)
    while bases[-1] <= bound:
        bases.append(bases[-1] * 2 + 1)
    for b in bases:
        w = np.array([b**k for k in range(n)], dtype=object)
        vals = roots.dot(w)
        if all(v != 0 for v in vals):
            return vals
    raise AssertionError("unreachable")


def simple_roots(roots):
    """Indices (into ``roots``) of the simple roots of the induced positive system."""
    R = np.array([list(r) for r in roots], dtype=object)
    vals = _functional(R)
    pos = [i for i, v in enumerate(vals) if v > 0]
    keyset = {tuple(R[i]) for i in pos}
    decomposable = set()
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            s = tuple(x + y for x, y in zip(R[pos[a]], R[pos[b]]))
            if s in keyset:
                decomposable.add(s)
    return [i for i in pos if tuple(R[i]) not in decomposable]


def _classify_component(nodes, adj):
    k = len(nodes)
    edges = sum(len(adj[v]) for v in nodes) // 2
    if edges != k - 1:
        raise ClassificationError("Dynkin graph contains a cycle")
    branch = [v for v in nodes if len(adj[v]) >= 3]
    if any(len(adj[v]) > 3 for v in nodes) or len(branch) > 1:
        raise ClassificationError("Dynkin graph is not of ADE type")
    if not branch:
        return ADEComponent("A", k)
    c = branch[0]
    legs = []
    for start in adj[c]:
        prev, cur, length = c, start, 1
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs = tuple(sorted(legs))
    if legs[:2] == (1, 1):
        return ADEComponent("D", k)
    if legs in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        return ADEComponent("E", k)
    raise ClassificationError(f"branch legs {legs} are not of ADE type")


def ade_classify(roots, gram=None):
    """ADE decomposition of the root system spanned by ``roots``.

    ``roots`` are lattice vectors (or coordinate tuples with ``gram`` given),
    all of norm -2 or all of norm +2. Simple roots are joined by an edge when
    their pairing is ``-norm/2``. Components come out sorted by rank, largest
    first, with E before D before A at equal rank.
    """
    roots = list(roots)
    if not roots:
        return []
    if gram is None:
        gram = roots[0].lattice.gram
    R = np.array([list(r) for r in roots], dtype=object)
    norms = {int(x) for x in (R.dot(gram) * R).sum(axis=1)}
    if len(norms) != 1 or norms.pop() not in (2, -2):
        raise ClassificationError("roots must all have norm -2 (or all +2)")
    sign = 1 if R[0].dot(gram).dot(R[0]) > 0 else -1
    idx = simple_roots(R)
    S = R[idx]
    P = S.dot(gram).dot(S.T)
    k = len(idx)
    adj = {v: [] for v in range(k)}
    for a in range(k):
        for b in range(a + 1, k):
            x = P[a, b]
            if x == -sign:
                adj[a].append(b)
                adj[b].append(a)
            elif x != 0:
                raise ClassificationError(f"simple roots pair to {x}; input is not a root system")
    seen = set()
    comps = []
    for v in range(k):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(_classify_component(comp, adj))
    return sorted(comps, key=lambda c: (-c.rank, _TYPE_ORDER[c.type]))


def simple_root_rank(roots):
    """Number of simple roots (equals the rank of the root lattice)."""
    R = np.array([list(r) for r in roots], dtype=object)
    return len(simple_roots(R))
