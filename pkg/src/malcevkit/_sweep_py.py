"""Pure-Python backend for the exhaustive 4-linear residual sweep.

Works on an integer structure-constant table (``table[i][j][k]`` = integer
coefficient of basis k in the product e_i e_j) and checks, over all basis
4-tuples (a, b, c, d), the multilinear residual

    ((ab)c)d + ((bc)d)a + ((cd)a)b + ((da)b)c - (ac)(bd).

Arbitrary-precision Python integers: this backend never overflows, and it
exploits table sparsity, so it stays usable even without the compiled
extension.  Returns the lexicographically first failing tuple with its
residual vector, or None when the identity holds everywhere.
"""

from __future__ import annotations

from typing import Optional

__all__ = ["mal_witness"]


def _sparsify(table, n):
    return [
        [
            tuple((k, c) for k, c in enumerate(table[i][j]) if c)
            for j in range(n)
        ]
        for i in range(n)
    ]


def mal_witness(table, n: int) -> Optional[tuple]:
    """First basis 4-tuple violating the 4-linear identity, or None."""
    prod = _sparsify(table, n)
    # triple[i][j][k] = sparse coefficient list of ((e_i e_j) e_k)
    triple = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            pij = prod[i][j]
            row = triple[i][j]
            for k in range(n):
                acc = {}
                for m, c in pij:
                    for l, c2 in prod[m][k]:
                        acc[l] = acc.get(l, 0) + c * c2
                row[k] = tuple((l, c) for l, c in acc.items() if c)

    rng = range(n)
    for a in rng:
        tri_a = triple[a]
        prod_a = prod[a]
        for b in rng:
            tri_ab = tri_a[b]
            for c in rng:
                y1 = tri_ab[c]          # ((ab)c)
                y2 = triple[b][c]       # ((bc)d) indexed by d
                ac = prod_a[c]
                for d in rng:
                    buf = [0] * n
                    for m, cc in y1:            # ((ab)c)d
                        for l, c2 in prod[m][d]:
                            buf[l] += cc * c2
                    for m, cc in y2[d]:         # ((bc)d)a
                        for l, c2 in prod[m][a]:
                            buf[l] += cc * c2
                    for m, cc in triple[c][d][a]:   # ((cd)a)b
                        for l, c2 in prod[m][b]:
                            buf[l] += cc * c2
                    for m, cc in triple[d][a][b]:   # ((da)b)c
                        for l, c2 in prod[m][c]:
                            buf[l] += cc * c2
                    bd = prod[b][d]
                    for m, cc in ac:            # -(ac)(bd)
                        for l, c2 in bd:
                            w = cc * c2
                            for q, c3 in prod[m][l]:
                                buf[q] -= w * c3
                    if any(buf):
                        return (a, b, c, d, tuple(buf))
    return None
