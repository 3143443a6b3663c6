"""Integer matrix normal forms (pure Python ints, no overflow)."""
from __future__ import annotations

__all__ = ["smith_normal_form", "integer_kernel", "column_hermite", "matmul"]


def matmul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a):
    """Return ``(S, U, V)`` with ``S = U a V`` diagonal, ``U``, ``V`` unimodular.

    Diagonal entries are nonnegative and each divides the next.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    S = [list(row) for row in a]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        if k:
            S[dst] = [x + k * y for x, y in zip(S[dst], S[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        if k:
            for row in S:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            piv = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] and (piv is None or abs(S[i][j]) < abs(S[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return S, U, V
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(t, i, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(t, j, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return S, U, V


def integer_kernel(a, ncols=None):
    """Basis (list of column vectors) of ``{v in Z^n : a v = 0}``."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return [[int(i == j) for i in range(n)] for j in range(n)]
    S, _, V = smith_normal_form(a)
    rank = sum(1 for i in range(min(len(S), n)) if S[i][i])
    return [[V[i][j] for i in range(n)] for j in range(rank, n)]


def column_hermite(vectors, rows):
    """Column-reduce ``vectors`` on the coordinates ``rows``.

    Integer column operations are applied to the whole vectors; the result
    spans the same lattice and is echelon on ``rows`` (pivot entries positive,
    zero-on-``rows`` columns at the end).
    """
    cols = [list(v) for v in vectors]
    out = []
    for r in rows:
        while True:
            nz = [c for c in cols if c[r]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda c: abs(c[r]))
            piv = nz[0]
            for c in nz[1:]:
                k = c[r] // piv[r]
                for i in range(len(c)):
                    c[i] -= k * piv[i]
        piv = next((c for c in cols if c[r]), None)
        if piv is not None:
            cols.remove(piv)
            if piv[r] < 0:
                piv = [-x for x in piv]
            out.append(piv)
    return out + cols
