"""RP^3 as the antipodal quotient of the barycentric subdivision of the boundary
of the 4-dimensional cross-polytope, reduced by random bistellar flips."""
import random
import sys
from itertools import combinations, permutations

from homology import betti
from simplicial import closure, is_closed_pseudomanifold, write_scx


def antipodal_quotient():
    # cross-polytope vertices +-e_i encoded as (i, sign)
    verts = [(i, s) for i in range(4) for s in (1, -1)]
    faces = set()
    for k in range(1, 5):
        for sub in combinations(verts, k):
            if len({i for i, _ in sub}) == k:
                faces.add(frozenset(sub))
    neg = lambda f: frozenset((i, -s) for i, s in f)
    # choose a representative of each antipodal pair of faces
    rep = {}
    names = {}
    for f in sorted(faces, key=lambda f: sorted(f)):
        key = min(tuple(sorted(f)), tuple(sorted(neg(f))))
        if key not in names:
            names[key] = len(names)
        rep[f] = names[key]
    tets = set()
    for top in (f for f in faces if len(f) == 4):
        for order in permutations(sorted(top)):
            flag = [frozenset(order[:j]) for j in range(1, 5)]
            tets.add(tuple(sorted(rep[f] for f in flag)))
    return [list(t) for t in tets]


class Complex:
    def __init__(self, facets):
        self.facets = set(tuple(sorted(f)) for f in facets)

    def faces(self, k):
        return {r for f in self.facets for r in combinations(f, k + 1)}

    def star(self, face):
        s = set(face)
        return [f for f in self.facets if s <= set(f)]

    def try_move(self, face):
        st = self.star(face)
        lk_verts = sorted({v for f in st for v in f} - set(face))
        d = 3
        k = d - (len(face) - 1)  # link should be the boundary of a k-simplex
        if len(lk_verts) != k + 1 or len(st) != k + 1:
            return False
        if k == 0:
            return False  # vertex insertion never shrinks the complex
        if tuple(lk_verts) in self.faces(k):
            return False
        new = []
        for r in combinations(face, len(face) - 1):
            new.append(tuple(sorted(set(r) | set(lk_verts))))
        for f in st:
            self.facets.discard(f)
        self.facets.update(new)
        return True


def reduce(facets, seed, target):
    rng = random.Random(seed)
    c = Complex(facets)
    best = c.facets.copy()
    nverts = lambda fs: len({v for f in fs for v in f})
    for step in range(400000):
        verts = sorted({v for f in c.facets for v in f})
        deg = {v: 0 for v in verts}
        for f in c.facets:
            for v in f:
                deg[v] += 1
        if any(c.try_move((v,)) for v in sorted(verts, key=lambda v: deg[v]) if deg[v] == 4):
            continue
        if (nverts(c.facets), len(c.facets)) < (nverts(best), len(best)):
            best = c.facets.copy()
            print(step, nverts(best), len(best), file=sys.stderr)
            if nverts(best) <= target and len(best) <= 40:
                break
        # work on a low-degree vertex: try to remove one of its edges
        lows = sorted(verts, key=lambda v: (deg[v], rng.random()))
        v = lows[0] if rng.random() < 0.8 else rng.choice(lows[:5])
        edges = sorted({tuple(sorted((v, w))) for f in c.star((v,)) for w in f if w != v})
        rng.shuffle(edges)
        if any(c.try_move(e) for e in edges):
            continue
        # unlock: random 2-3 move somewhere in the star of v
        tris = sorted({t for f in c.star((v,)) for t in combinations(f, 3)})
        rng.shuffle(tris)
        for t in tris:
            if c.try_move(t):
                break
    return sorted(best)


if __name__ == "__main__":
    facets = antipodal_quotient()
    assert is_closed_pseudomanifold(facets)
    print("start", len({v for f in facets for v in f}), len(facets), file=sys.stderr)
    red = reduce(facets, int(sys.argv[2]), 11)
    assert is_closed_pseudomanifold(red)
    print("betti F2", betti(red, 2), "F3", betti(red, 3), file=sys.stderr)
    nv = len({v for f in red for v in f})
    relabel = {v: i for i, v in enumerate(sorted({v for f in red for v in f}))}
    red = [tuple(relabel[v] for v in f) for f in red]
    write_scx(sys.argv[1], red, [
        "Real projective 3-space: antipodal quotient of sd(boundary of the 4-cross-polytope),",
        "reduced by bistellar flips to %d vertices, %d tetrahedra." % (nv, len(red)),
    ])
