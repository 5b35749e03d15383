"""Search translation-invariant 9-vertex complexes on the affine plane F3^2 for
a combinatorial 4-manifold with the homology of CP^2 (Kuehnel's CP^2_9)."""
import sys
from itertools import combinations

from homology import betti
from simplicial import closure, is_closed_pseudomanifold, link, euler, write_scx


def translate(face, t):
    return tuple(sorted(((v // 3 + t // 3) % 3) * 3 + (v % 3 + t % 3) % 3 for v in face))


orbits = []
seen = set()
for f in combinations(range(9), 5):
    if f in seen:
        continue
    orb = sorted({translate(f, t) for t in range(9)})
    seen.update(orb)
    orbits.append(orb)
print(len(orbits), "orbits", file=sys.stderr)

found = []
for combo in combinations(range(len(orbits)), 4):
    facets = [f for i in combo for f in orbits[i]]
    if not is_closed_pseudomanifold(facets):
        continue
    lk = link(facets, (0,))
    if not is_closed_pseudomanifold(lk):
        continue
    if betti(lk, 2) != [1, 0, 0, 1] or betti(lk, 3) != [1, 0, 0, 1]:
        continue
    if betti(facets, 2) != [1, 0, 1, 0, 1]:
        continue
    found.append(facets)
    print("found", combo, euler(facets), file=sys.stderr)

facets = found[0]
write_scx(sys.argv[1], facets, [
    "Kuehnel's 9-vertex complex projective plane (translation-invariant on F3^2).",
    "f-vector: " + str([sum(1 for f in closure(facets) if len(f) == k + 1) for k in range(5)]),
])
