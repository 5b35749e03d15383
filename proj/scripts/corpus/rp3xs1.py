"""RP^3 x S^1 as the staircase product of the minimal RP^3 with a 3-vertex circle."""
import sys

from simplicial import is_closed_pseudomanifold, product, write_scx


def read_scx(path):
    out = []
    for line in open(path):
        line = line.split("#")[0].split()
        if line and line[0] == "simplex":
            out.append(tuple(int(v) for v in line[1:]))
    return out


rp3 = read_scx(sys.argv[1])
s1 = [(0, 1), (0, 2), (1, 2)]
facets = product(rp3, s1, 3)
assert is_closed_pseudomanifold(facets)
write_scx(sys.argv[2], facets, [
    "RP^3 x S^1: staircase product of the 11-vertex RP^3 with a 3-vertex circle;",
    "vertex (i,j) -> 3i+j.",
])
print(len(facets), "facets")
