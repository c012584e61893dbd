"""Smith normal form over the integers, with unimodular transforms."""
from __future__ import annotations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def transpose(a: Matrix, rows: int | None = None, cols: int | None = None) -> Matrix:
    if not a:
        # shape has to come from the caller for empty matrices
        return [[0] * (rows or 0) for _ in range(cols or 0)]
    return [list(r) for r in zip(*a)]


def smith_normal_form(m: Matrix, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, P, Q)`` with ``P @ m @ Q == D`` and ``P``, ``Q`` unimodular.

    ``D`` is diagonal with nonnegative entries, each dividing the next.  Pivots
    are chosen as the first entry of least absolute value (row-major), which
    makes the transforms deterministic.
    """
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    d = [list(r) for r in m]
    p = identity(rows)
    q = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in q:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row[dst] += k * row[src]
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        p[dst] = [x + k * y for x, y in zip(p[dst], p[src])]

    def add_col(src, dst, k):  # col[dst] += k * col[src]
        for r in d:
            r[dst] += k * r[src]
        for r in q:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if d[i][j] and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return d, p, q
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            a = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // a))
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // a))
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i][j] % a),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            p[t] = [-x for x in p[t]]
    return d, p, q


def diagonal(d: Matrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def inverse_unimodular(u: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix (Gauss-Jordan over Z)."""
    n = len(u)
    a = [list(r) + e for r, e in zip(u, identity(n))]
    for c in range(n):
        while True:
            nz = [i for i in range(c, n) if a[i][c]]
            if not nz:
                raise ValueError("matrix is singular")
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[c], a[piv] = a[piv], a[c]
            done = True
            for i in range(n):
                if i != c and a[i][c]:
                    k = a[i][c] // a[c][c]
                    a[i] = [x - k * y for x, y in zip(a[i], a[c])]
                    if i > c and a[i][c]:
                        done = False
            if done:
                break
        if abs(a[c][c]) != 1:
            raise ValueError("matrix is not unimodular")
        if a[c][c] == -1:
            a[c] = [-x for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                k = a[i][c]
                a[i] = [x - k * y for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]
