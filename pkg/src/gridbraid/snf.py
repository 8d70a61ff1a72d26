"""Integer Smith normal form for sparse matrices.

Matrices are dicts {row: {col: value}}.  Unit pivots are eliminated first
(cheap, no fill-in growth in practice for cube complexes); the leftover
block is handled densely with minimal-absolute-value pivoting.
"""

from __future__ import annotations


def _dense_snf(rows: list[list[int]]) -> list[int]:
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    m, n = len(a), len(a[0])
    diag = []
    top = 0
    while top < min(m, n):
        best = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[top], a[i] = a[i], a[top]
        for r in a:
            r[top], r[j] = r[j], r[top]
        while True:
            piv = a[top][top]
            done = True
            for i in range(top + 1, m):
                if a[i][top]:
                    f = a[i][top] // piv
                    a[i] = [x - f * y for x, y in zip(a[i], a[top])]
                    if a[i][top]:
                        done = False
            for j in range(top + 1, n):
                if a[top][j]:
                    f = a[top][j] // piv
                    for r in a:
                        r[j] -= f * r[top]
                    if a[top][j]:
                        done = False
            if done:
                # divisibility condition for the rest of the block
                bad = None
                for i in range(top + 1, m):
                    for j in range(top + 1, n):
                        if a[i][j] % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                a[top] = [x + y for x, y in zip(a[top], a[bad])]
                continue
            # move the smallest nonzero in row/column to the pivot
            cands = [(abs(a[i][top]), i, top) for i in range(top, m) if a[i][top]]
            cands += [(abs(a[top][j]), top, j) for j in range(top, n) if a[top][j]]
            _, i, j = min(cands)
            a[top], a[i] = a[i], a[top]
            for r in a:
                r[top], r[j] = r[j], r[top]
        diag.append(abs(a[top][top]))
        top += 1
    return diag


def smith_diagonal(mat: dict, ncols: int | None = None) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix."""
    rows = {i: dict(r) for i, r in mat.items() if r}
    cols: dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    units = 0
    changed = True
    while changed:
        changed = False
        # short rows first, and the unit entry with the sparsest column, to
        # keep fill-in down
        for i in sorted(rows, key=lambda k: len(rows[k])):
            r = rows.get(i)
            if r is None:
                continue
            units_here = [j for j, x in r.items() if abs(x) == 1]
            if not units_here:
                continue
            piv = min(units_here, key=lambda j: len(cols[j]))
            pv = r[piv]
            # eliminate column piv from other rows
            for k in list(cols[piv]):
                if k == i:
                    continue
                rk = rows[k]
                f = rk[piv] * pv  # pv = +-1 so pv^-1 = pv
                for j, x in r.items():
                    y = rk.get(j, 0) - f * x
                    if y:
                        if j not in rk:
                            cols.setdefault(j, set()).add(k)
                        rk[j] = y
                    elif j in rk:
                        del rk[j]
                        cols[j].discard(k)
                if not rk:
                    del rows[k]
            for j in r:
                cols[j].discard(i)
            del rows[i]
            units += 1
            changed = True
    rest = list(rows.values())
    if not rest:
        return [1] * units
    colset = sorted({j for r in rest for j in r})
    dense = [[r.get(j, 0) for j in colset] for r in rest]
    return [1] * units + _dense_snf(dense)


def rank_and_torsion(mat: dict) -> tuple[int, list[int]]:
    d = smith_diagonal(mat)
    return len(d), sorted(x for x in d if x > 1)
