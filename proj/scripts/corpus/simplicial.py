"""Small helpers shared by the corpus generators."""
from itertools import combinations


def closure(facets):
    out = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return out


def f_vector(facets):
    faces = closure(facets)
    dim = max(len(f) for f in faces) - 1
    return [sum(1 for f in faces if len(f) == k + 1) for k in range(dim + 1)]


def euler(facets):
    return sum((-1) ** i * n for i, n in enumerate(f_vector(facets)))


def is_closed_pseudomanifold(facets):
    d = len(facets[0]) - 1
    count = {}
    for f in facets:
        f = tuple(sorted(f))
        for r in combinations(f, d):
            count[r] = count.get(r, 0) + 1
    return all(c == 2 for c in count.values())


def link(facets, face):
    face = set(face)
    return [tuple(sorted(set(f) - face)) for f in facets if face <= set(f)]


def product(facets_a, facets_b, nb):
    """Staircase triangulation of |A| x |B| with vertex (i, j) -> i * nb + j."""
    out = []
    for fa in facets_a:
        fa = sorted(fa)
        for fb in facets_b:
            fb = sorted(fb)
            p, q = len(fa) - 1, len(fb) - 1
            # lattice paths from (0,0) to (p,q)
            for steps in combinations(range(p + q), p):
                i = j = 0
                chain = [(fa[0], fb[0])]
                for s in range(p + q):
                    if s in steps:
                        i += 1
                    else:
                        j += 1
                    chain.append((fa[i], fb[j]))
                out.append(tuple(a * nb + b for a, b in chain))
    return out


def write_scx(path, facets, header):
    with open(path, "w") as fh:
        for line in header:
            fh.write("# " + line + "\n")
        for f in sorted(tuple(sorted(f)) for f in facets):
            fh.write("simplex " + " ".join(map(str, f)) + "\n")
