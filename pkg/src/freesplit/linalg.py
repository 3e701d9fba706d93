"""Exact Gaussian elimination over any object with field-style raw arithmetic.

``ops`` is a :class:`~freesplit.coefficients.Field` or a residue field from
:mod:`freesplit.modules`: anything with ``add, sub, mul, inv, is_zero``.
"""

from __future__ import annotations

__all__ = ["row_reduce", "rank", "solve", "nullspace"]


def row_reduce(ops, rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if not ops.is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ops.inv(m[r][c])
        m[r] = [ops.mul(v, inv) for v in m[r]]
        for i in range(len(m)):
            if i != r and not ops.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [ops.sub(a, ops.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(ops, rows):
    rows = [r for r in rows]
    if not rows or not rows[0]:
        return 0
    return len(row_reduce(ops, rows)[1])


def solve(ops, A, b):
    """One solution ``x`` of ``A x = b`` or ``None``; ``A`` is a list of rows."""
    if not A:
        return []
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    red, pivots = row_reduce(ops, aug)
    if n in pivots:
        return None
    x = [ops.zero] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return x


def nullspace(ops, A, ncols):
    """Basis of ``{x : A x = 0}``."""
    if not A:
        return [[ops.one if i == j else ops.zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = row_reduce(ops, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [ops.zero] * ncols
        x[fc] = ops.one
        for row, pc in zip(red, pivots):
            x[pc] = ops.sub(ops.zero, row[fc])
        basis.append(x)
    return basis
