"""Betti numbers over a prime field, used only to sanity-check generated fixtures."""
from itertools import combinations

import numpy as np

from simplicial import closure


def rank_mod_p(mat, p):
    m = mat.copy() % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        nz = np.nonzero(m[:, c])[0]
        for i in nz:
            if i != r:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        r += 1
        if r == rows:
            break
    return r


def betti(facets, p):
    faces = sorted(closure(facets), key=lambda f: (len(f), f))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    dim = max(by_dim)
    index = {k: {f: i for i, f in enumerate(v)} for k, v in by_dim.items()}
    ranks = {0: 0, dim + 1: 0}
    for k in range(1, dim + 1):
        m = np.zeros((len(by_dim[k - 1]), len(by_dim[k])), dtype=np.int64)
        for j, f in enumerate(by_dim[k]):
            for i in range(len(f)):
                face = f[:i] + f[i + 1:]
                m[index[k - 1][face], j] = (-1) ** i
        ranks[k] = rank_mod_p(m, p)
    return [len(by_dim[k]) - ranks[k] - ranks[k + 1] for k in range(dim + 1)]
