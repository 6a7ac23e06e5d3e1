"""Exact rank and nullspace over Q or a prime field.

Over Q the elimination is fraction-free: rows stay integral and are divided
by their content after every update, which keeps entries small for the
0/1 systems that come up in intertwiner problems.  Over ``GF(p)`` the same
Gauss-Jordan sweep runs on int64 numpy arrays.

``p=None`` selects the rationals everywhere.
"""
from __future__ import annotations

import math
from functools import reduce

import numpy as np

__all__ = ["rref", "rank", "nullspace"]


def _content(row: list[int]) -> int:
    return reduce(math.gcd, row, 0)


def _rref_int(M) -> tuple[list[list[int]], list[int]]:
    rows = [[int(x) for x in r] for r in np.asarray(M).tolist()] if np.size(M) else []
    ncols = np.shape(M)[1] if np.ndim(M) == 2 else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if prow[c] < 0:
            prow[:] = [-x for x in prow]
        a = prow[c]
        for k in range(len(rows)):
            if k == r or rows[k][c] == 0:
                continue
            b = rows[k][c]
            g = math.gcd(a, b)
            fa, fb = a // g, b // g
            new = [fa * x - fb * y for x, y in zip(rows[k], prow)]
            cont = _content(new)
            if cont > 1:
                new = [x // cont for x in new]
            rows[k] = new
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rref_mod(M, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        A = A.reshape(0, 0)
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref(M, p: int | None = None):
    """Row-reduce ``M``; returns ``(nonzero rows, pivot columns)``.

    Over Q each pivot row is scaled to be integral and primitive rather
    than to have a unit pivot.
    """
    if p is None:
        return _rref_int(M)
    return _rref_mod(M, p)


def rank(M, p: int | None = None) -> int:
    if np.size(M) == 0:
        return 0
    return len(rref(M, p)[1])


def nullspace(M, ncols: int | None = None, p: int | None = None) -> np.ndarray:
    """Basis of ``{x : M x = 0}`` as the rows of an integer array.

    Over Q the basis vectors are scaled to be integral.  ``ncols`` is only
    needed when ``M`` has no rows.
    """
    if ncols is None:
        ncols = np.shape(M)[1]
    if np.size(M) == 0:
        return np.eye(ncols, dtype=np.int64 if p is not None else object)
    rows, pivots = rref(M, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    if p is not None:
        basis = np.zeros((len(free), ncols), dtype=np.int64)
        for k, f in enumerate(free):
            basis[k, f] = 1
            for row, c in zip(rows, pivots):
                basis[k, c] = (-int(row[f])) % p
        return basis
    basis = np.zeros((len(free), ncols), dtype=object)
    for k, f in enumerate(free):
        scale = reduce(math.lcm, (row[c] for row, c in zip(rows, pivots) if row[f] != 0), 1)
        vec = [0] * ncols
        vec[f] = scale
        for row, c in zip(rows, pivots):
            if row[f] != 0:
                vec[c] = -row[f] * (scale // row[c])
        cont = _content(vec)
        basis[k] = [x // cont for x in vec]
    return basis
