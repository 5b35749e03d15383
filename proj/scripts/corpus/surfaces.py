"""Spheres, surfaces and products for the bundled corpus."""
import sys
from itertools import combinations

from homology import betti
from simplicial import closure, euler, is_closed_pseudomanifold, link, product, write_scx

OUT = sys.argv[1]


def boundary_simplex(n):
    return list(combinations(range(n + 2), n + 1))


RP2 = [(1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
       (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6)]
RP2 = [tuple(v - 1 for v in f) for f in RP2]

T2 = []
for i in range(7):
    T2.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
    T2.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))


def klein(n):
    """n x n grid of squares, each cut along a diagonal; the vertical sides are
    glued straight and the horizontal sides with a flip."""
    def vid(x, y):
        if x == n:
            x, y = 0, (n - y) % n
        return (x % n) * n + (y % n)
    tris = []
    for x in range(n):
        for y in range(n):
            a, b, c, d = vid(x, y), vid(x + 1, y), vid(x + 1, y + 1), vid(x, y + 1)
            tris.append(tuple(sorted((a, b, c))))
            tris.append(tuple(sorted((a, c, d))))
    return tris


def is_surface(tris):
    if len(set(tris)) != len(tris) or any(len(set(t)) != 3 for t in tris):
        return False
    if not is_closed_pseudomanifold(tris):
        return False
    for v in {v for t in tris for v in t}:
        lk = link(tris, (v,))
        # link must be a single cycle
        adj = {}
        for e in lk:
            for a, b in ((e[0], e[1]), (e[1], e[0])):
                adj.setdefault(a, []).append(b)
        if any(len(x) != 2 for x in adj.values()):
            return False
        start = next(iter(adj))
        seen, prev, cur = {start}, None, start
        while True:
            nxt = [w for w in adj[cur] if w != prev][0]
            if nxt == start:
                break
            seen.add(nxt)
            prev, cur = cur, nxt
        if len(seen) != len(adj):
            return False
    return True


assert is_surface(RP2) and euler(RP2) == 1
assert is_surface(T2) and euler(T2) == 0
K = klein(3)
if not is_surface(K):
    K = klein(4)
assert is_surface(K) and euler(K) == 0
assert betti(K, 2) == [1, 2, 1] and betti(K, 3) == [1, 1, 0]

write_scx(OUT + "/s3.scx", boundary_simplex(3), ["3-sphere: boundary of the 4-simplex."])
write_scx(OUT + "/s4.scx", boundary_simplex(4), ["4-sphere: boundary of the 5-simplex."])
write_scx(OUT + "/rp2.scx", RP2, ["Real projective plane, 6-vertex (hemi-icosahedron)."])
write_scx(OUT + "/t2.scx", T2, ["Torus, 7-vertex (Moebius-Csaszar)."])
write_scx(OUT + "/klein.scx", K, ["Klein bottle, %d-vertex grid with one flipped gluing." % len({v for t in K for v in t})])

S2 = boundary_simplex(2)
s2xs2 = product(S2, S2, 4)
assert is_closed_pseudomanifold(s2xs2)
write_scx(OUT + "/s2xs2.scx", s2xs2,
          ["S^2 x S^2: staircase product of two tetrahedron boundaries; vertex (i,j) -> 4i+j."])
t4 = product(T2, T2, 7)
assert is_closed_pseudomanifold(t4)
write_scx(OUT + "/t4.scx", t4,
          ["4-torus: staircase product of two 7-vertex tori; vertex (i,j) -> 7i+j."])
print("klein vertices", len({v for t in K for v in t}), "s2xs2", len(s2xs2), "t4", len(t4))
