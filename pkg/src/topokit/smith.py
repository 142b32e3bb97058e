"""Integer Smith normal form (invariant factors only)."""

from __future__ import annotations

from typing import Sequence


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries d1 | d2 | ... of the Smith form of ``matrix``.

    Entries are positive; their count is the rank over Q.  Arbitrary
    precision ints throughout, pivoting on the smallest absolute value.
    """
    a = [list(row) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < m and t < n:
        # smallest nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t]
                if q:
                    f = q // p
                    if f:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= f * rt[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                q = a[t][j]
                if q:
                    f = q // p
                    if f:
                        for row in a[t:]:
                            row[j] -= f * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the whole trailing block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rb, rt = a[bad], a[t]
                for j in range(t, n):
                    rt[j] += rb[j]
                dirty = True
            # move the smallest remaining entry of row/column t into the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariant_factors(matrix: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Return ``(rank, torsion)`` where torsion lists the factors > 1."""
    d = smith_diagonal(matrix)
    return len(d), [x for x in d if x > 1]
