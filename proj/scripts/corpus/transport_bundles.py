"""Write the transport problem bundles under corpus/transport/."""
import json
import os
import sys

from simplicial import closure


def read_scx(path):
    facets = []
    for line in open(path):
        line = line.split("#")[0].split()
        if line:
            facets.append(tuple(sorted(int(v) for v in line[1:])))
    return facets


def write_lines(path, header, lines):
    with open(path, "w") as f:
        f.write(f"# {header}\n")
        for line in lines:
            f.write(line + "\n")


def write_complex(path, header, simplices):
    write_lines(path, header, ["simplex " + " ".join(map(str, s)) for s in simplices])


def write_bundle(root, name, x1, n1, x2, n2, g, s1, s2, note):
    d = os.path.join(root, name)
    os.makedirs(d, exist_ok=True)
    faces1, faces2 = closure(x1), closure(x2)
    for s in n1:
        assert tuple(s) in faces1, (name, s)
    for s in n2:
        assert tuple(s) in faces2, (name, s)
    write_complex(os.path.join(d, "X1.scx"), note, x1)
    write_complex(os.path.join(d, "N1.scx"), "subcomplex N1", n1)
    write_complex(os.path.join(d, "X2.scx"), note, x2)
    write_complex(os.path.join(d, "N2.scx"), "subcomplex N2", n2)
    write_lines(os.path.join(d, "g.smap"), "vertex map X1 -> X2",
                [f"map {v} {g[v]}" for v in sorted(g)])
    for fname, offset in (("s1.json", s1), ("s2.json", s2)):
        with open(os.path.join(d, fname), "w") as f:
            json.dump({"torsor": "spinc", "offset": offset}, f, sort_keys=True)
            f.write("\n")


def main(corpus):
    root = os.path.join(corpus, "transport")
    cp2 = read_scx(os.path.join(corpus, "cp2.scx"))
    s2xs2 = read_scx(os.path.join(corpus, "s2xs2.scx"))
    rp3xs1 = read_scx(os.path.join(corpus, "rp3xs1.scx"))
    cycle = [(0, 1), (0, 2), (1, 2)]
    ident9 = {v: v for v in range(9)}

    write_bundle(root, "cp2_identity", cp2, cycle, cp2, cycle, ident9,
                 {"free": [0], "torsion": []}, {"free": [0], "torsion": []},
                 "9-vertex CP^2, identity map")
    write_bundle(root, "cp2_shift", cp2, cycle, cp2, cycle, ident9,
                 {"free": [0], "torsion": []}, {"free": [1], "torsion": []},
                 "9-vertex CP^2, identity map, s2 = s1 + h")

    swap = {4 * i + j: 4 * j + i for i in range(4) for j in range(4)}
    swapped = [tuple(sorted((swap[a], swap[b]))) for a, b in cycle]
    write_bundle(root, "s2xs2_swap", s2xs2, cycle, s2xs2, swapped, swap,
                 {"free": [0, 0], "torsion": []}, {"free": [1, 0], "torsion": []},
                 "S^2 x S^2, factor swap (i,j) -> (j,i)")

    write_bundle(root, "rp3xs1_undersized", rp3xs1, [(0,)], rp3xs1, [(0,)],
                 {v: v for v in range(33)},
                 {"free": [], "torsion": [0]}, {"free": [], "torsion": [1]},
                 "RP^3 x S^1 with N a single vertex (too small)")


if __name__ == "__main__":
    main(sys.argv[1])
