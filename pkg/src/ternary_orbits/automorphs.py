"""Bounded search for proper integral automorphs A^t S A = S.

Used as an oracle: orbit labels must be constant along x -> x A^t.
Columns are matched one at a time: column i must have S-value S_ii and
the prescribed S-inner products with the columns already chosen.
"""

import numpy as np

from .exact_linalg import Unimodular, det3, transform_matrix


def _box(bound):
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    g = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1).reshape(-1, 3)
    return g[np.any(g != 0, axis=1)]


def find_automorphs(S, bound=30, limit=None, proper=True):
    """Automorphs of S with all entries in [-bound, bound] (det +1 unless proper=False)."""
    m = np.array(S.matrix, dtype=np.int64)
    if np.abs(m).max() * 3 * bound * bound > 2**60:
        raise OverflowError("entry bound too large for int64 search")
    V = _box(bound)
    vals = np.einsum("ni,ij,nj->n", V, m, V)
    cands = [V[vals == m[i, i]] for i in range(3)]
    out = []
    for a1 in cands[0]:
        l1 = a1 @ m
        c2 = cands[1][cands[1] @ l1 == m[0, 1]]
        if not c2.size:
            continue
        c3_base = cands[2][cands[2] @ l1 == m[0, 2]]
        for a2 in c2:
            c3 = c3_base[c3_base @ (a2 @ m) == m[1, 2]]
            for a3 in c3:
                A = tuple(zip(a1.tolist(), a2.tolist(), a3.tolist()))
                d = det3(A)
                if d == 1 or (d == -1 and not proper):
                    assert transform_matrix(S, A) == S.matrix
                    out.append(Unimodular(A))
                    if limit is not None and len(out) >= limit:
                        return out
    return out
