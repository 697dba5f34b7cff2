"""Exact rational linear algebra (Gaussian elimination over mpq)."""
from __future__ import annotations

from gmpy2 import mpq


def _rref(rows, ncols: int):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    mat = [list(map(mpq, r)) for r in rows if any(r)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows, ncols: int):
    """Deterministic basis of the kernel of the matrix given by `rows`.

    One basis vector per free column, carrying 1 in that column.
    """
    mat, pivots = _rref(rows, ncols)
    pivot_of = dict(zip(pivots, range(len(pivots))))
    free = [c for c in range(ncols) if c not in pivot_of]
    basis = []
    for fc in free:
        v = [mpq(0)] * ncols
        v[fc] = mpq(1)
        for pc, pr in pivot_of.items():
            v[pc] = -mat[pr][fc]
        basis.append(v)
    return basis


def in_span(basis, vec) -> bool:
    """Is vec in the span of the given vectors (all lists of mpq)?"""
    ncols = len(vec)
    mat, pivots = _rref(basis, ncols)
    t = list(map(mpq, vec))
    for row, col in zip(mat, pivots):
        if t[col]:
            f = t[col]
            t = [a - f * b for a, b in zip(t, row)]
    return not any(t)


def same_span(basis1, basis2) -> bool:
    return (
        len(basis1) == len(basis2)
        and all(in_span(basis1, v) for v in basis2)
        and all(in_span(basis2, v) for v in basis1)
    )
