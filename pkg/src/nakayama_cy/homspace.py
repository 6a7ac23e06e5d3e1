"""Explicit quiver representations of Lambda(n, t)-modules and exact Hom spaces.

``S_i^l`` is realised on the basis ``b_0, ..., b_{l-1}`` with ``b_u`` at
vertex ``i+u mod n``; the arrow ``a_j: j -> j+1`` sends ``b_u`` to
``b_{u+1}`` when ``b_u`` sits at ``j`` and ``u+1 <= l-1``.  ``l = t`` gives the
projective ``P(i)``.

Morphisms ``X -> Y`` are tuples ``(f_j)`` of vertex maps with
``f_{j+1} A_j^X = A_j^Y f_j``; they are solved for exactly, and the maps
factoring through projectives are found as the span of all composites
``X -> P(j) -> Y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from . import linalg
from .algebra import AlgebraParams, IndecModule, IrreducibleMap, StableObject, serre, shift
from .classify import NotCalabiYauError, is_d_cy

__all__ = [
    "MatrixRep",
    "HomReport",
    "NotCalabiYauError",
    "matrix_rep",
    "hom_basis",
    "hom_dim",
    "stable_hom",
    "stable_dim_table",
    "serre_duality_check",
    "cy_dim_symmetry_check",
    "irreducible_map_census",
    "DEFAULT_PRIME",
]

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class MatrixRep:
    module_id: tuple[int, int]
    vertex_dims: np.ndarray
    arrow_maps: tuple[np.ndarray, ...]

    @property
    def n(self) -> int:
        return len(self.vertex_dims)

    @property
    def dim(self) -> int:
        return int(self.vertex_dims.sum())


@dataclass(frozen=True)
class HomReport:
    hom_dim: int
    proj_factor_dim: int

    @property
    def stable_dim(self) -> int:
        return self.hom_dim - self.proj_factor_dim


def matrix_rep(A: AlgebraParams, i: int, l: int) -> MatrixRep:
    if not 1 <= l <= A.t:
        raise ValueError(f"Loewy length must lie in [1, {A.t}], got {l}")
    return _matrix_rep(A.n, A.t, i % A.n, l)


@lru_cache(maxsize=None)
def _matrix_rep(n: int, t: int, i: int, l: int) -> MatrixRep:
    vertex = [(i + u) % n for u in range(l)]
    dims = np.bincount(vertex, minlength=n).astype(np.int64)
    # position of b_u inside its vertex space
    local = [u // n for u in range(l)]
    maps = [np.zeros((dims[(j + 1) % n], dims[j]), dtype=np.int64) for j in range(n)]
    for u in range(l - 1):
        j = vertex[u]
        maps[j][local[u + 1], local[u]] = 1
    for m in maps:
        m.flags.writeable = False
    dims.flags.writeable = False
    return MatrixRep((i, l), dims, tuple(maps))


# ---------------------------------------------------------------------------
# intertwiners


def _offsets(X: MatrixRep, Y: MatrixRep) -> list[int]:
    sizes = [int(Y.vertex_dims[j] * X.vertex_dims[j]) for j in range(X.n)]
    return list(np.concatenate([[0], np.cumsum(sizes)]).astype(int))


def _intertwiner_system(X: MatrixRep, Y: MatrixRep) -> tuple[np.ndarray, int]:
    """Linear system whose kernel is Hom(X, Y); unknowns are the vertex maps, row-major."""
    n = X.n
    dx, dy = X.vertex_dims, Y.vertex_dims
    off = _offsets(X, Y)
    nvars = off[-1]
    eqs = []
    for j in range(n):
        k = (j + 1) % n
        AX, AY = X.arrow_maps[j], Y.arrow_maps[j]
        # f_k AX - AY f_j = 0, entry (r, c) with r < dy[k], c < dx[j]
        for r in range(dy[k]):
            for c in range(dx[j]):
                row = np.zeros(nvars, dtype=np.int64)
                for s in range(dx[k]):
                    if AX[s, c]:
                        row[off[k] + r * dx[k] + s] += AX[s, c]
                for s in range(dy[j]):
                    if AY[r, s]:
                        row[off[j] + s * dx[j] + c] -= AY[r, s]
                if row.any():
                    eqs.append(row)
    if not eqs:
        return np.zeros((0, nvars), dtype=np.int64), nvars
    return np.array(eqs), nvars


def _solve(X: MatrixRep, Y: MatrixRep, p: int | None) -> np.ndarray:
    if X.n != Y.n:
        raise ValueError("representations live on different quivers")
    M, nvars = _intertwiner_system(X, Y)
    basis = linalg.nullspace(M, ncols=nvars, p=p)
    if p is None:
        if basis.size and max(abs(int(x)) for x in basis.flat) >= 2**31:
            raise OverflowError("intertwiner basis entries too large for int64 composition")
        basis = basis.astype(np.int64)
    return basis.reshape(len(basis), nvars)


@lru_cache(maxsize=None)
def _hom_basis_ids(n: int, t: int, x: tuple[int, int], y: tuple[int, int], p: int | None) -> np.ndarray:
    basis = _solve(_matrix_rep(n, t, *x), _matrix_rep(n, t, *y), p)
    basis.flags.writeable = False
    return basis


ModuleLike = Union[MatrixRep, IndecModule, tuple]


def _ids(A: AlgebraParams, X) -> tuple[int, int]:
    i, l = X
    if not 1 <= l <= A.t:
        raise ValueError(f"Loewy length must lie in [1, {A.t}], got {l}")
    return (int(i) % A.n, int(l))


def hom_basis(A: AlgebraParams, X: ModuleLike, Y: ModuleLike, p: int | None = None) -> np.ndarray:
    """Basis of Hom(X, Y) as rows of flattened vertex maps.

    Modules may be given as :class:`MatrixRep` or as ``(i, l)`` pairs with
    ``1 <= l <= t``; the latter are cached.
    """
    if isinstance(X, MatrixRep) or isinstance(Y, MatrixRep):
        X = X if isinstance(X, MatrixRep) else matrix_rep(A, *X)
        Y = Y if isinstance(Y, MatrixRep) else matrix_rep(A, *Y)
        return _solve(X, Y, p)
    return _hom_basis_ids(A.n, A.t, _ids(A, X), _ids(A, Y), p)


def hom_dim(A: AlgebraParams, X: ModuleLike, Y: ModuleLike, p: int | None = None) -> int:
    return len(hom_basis(A, X, Y, p))


def _compose(A: AlgebraParams, h: np.ndarray, g: np.ndarray, x, q, y) -> np.ndarray:
    """All composites ``g_b . h_a`` for bases h of Hom(x, q) and g of Hom(q, y)."""
    dx = _matrix_rep(A.n, A.t, *x).vertex_dims
    dq = _matrix_rep(A.n, A.t, *q).vertex_dims
    dy = _matrix_rep(A.n, A.t, *y).vertex_dims
    oh = np.concatenate([[0], np.cumsum(dq * dx)])
    og = np.concatenate([[0], np.cumsum(dy * dq)])
    blocks = []
    for j in range(A.n):
        if dx[j] == 0 or dy[j] == 0:
            continue
        H = h[:, oh[j]:oh[j + 1]].reshape(len(h), dq[j], dx[j])
        G = g[:, og[j]:og[j + 1]].reshape(len(g), dy[j], dq[j])
        C = np.einsum("brq,aqc->barc", G, H)
        blocks.append(C.reshape(len(g) * len(h), dy[j] * dx[j]))
    if not blocks:
        return np.zeros((0, int((dx * dy).sum())), dtype=np.int64)
    return np.concatenate(blocks, axis=1)


def _stable_report(A: AlgebraParams, x, y, p: int | None) -> HomReport:
    return _stable_report_cached(A.n, A.t, x, y, p)


@lru_cache(maxsize=None)
def _stable_report_cached(n: int, t: int, x, y, p) -> HomReport:
    A = AlgebraParams(n, t)
    full = _hom_basis_ids(n, t, x, y, p)
    if len(full) == 0:
        return HomReport(0, 0)
    composites = []
    for j in range(n):
        q = (j, t)
        h = _hom_basis_ids(n, t, x, q, p)
        g = _hom_basis_ids(n, t, q, y, p)
        if len(h) and len(g):
            composites.append(_compose(A, h, g, x, q, y))
    if not composites:
        return HomReport(len(full), 0)
    stacked = np.concatenate(composites, axis=0)
    if p is not None:
        stacked %= p
    return HomReport(len(full), linalg.rank(stacked, p))


def stable_hom(A: AlgebraParams, X: ModuleLike, Y: ModuleLike, p: int | None = None) -> HomReport:
    """Dimensions of Hom(X, Y), its projectively-factoring part, and the stable quotient."""
    if isinstance(X, MatrixRep):
        X = X.module_id
    if isinstance(Y, MatrixRep):
        Y = Y.module_id
    return _stable_report(A, _ids(A, X), _ids(A, Y), p)


def stable_dim_table(A: AlgebraParams, p: int | None = None) -> np.ndarray:
    """Stable Hom dimensions between all non-projective indecomposables.

    Rows and columns follow :meth:`AlgebraParams.indecomposables`.
    """
    ind = A.indecomposables()
    out = np.zeros((len(ind), len(ind)), dtype=np.int64)
    for a, X in enumerate(ind):
        for b, Y in enumerate(ind):
            out[a, b] = _stable_report(A, tuple(X), tuple(Y), p).stable_dim
    return out


# ---------------------------------------------------------------------------
# duality checks


def serre_duality_check(A: AlgebraParams, X: IndecModule, Y: IndecModule, p: int | None = None) -> bool:
    """Compare dim Hom(X, Y) with dim Hom(Y, FX) in the stable category."""
    X, Y = A.check(IndecModule(*X)), A.check(IndecModule(*Y))
    lhs = stable_hom(A, X, Y, p).stable_dim
    rhs = stable_hom(A, Y, serre(A, X), p).stable_dim
    return lhs == rhs


def cy_dim_symmetry_check(A: AlgebraParams, X: StableObject, d: int, p: int | None = None) -> bool:
    """Dimension shadow of ``Hom(X, -) = D Hom(-, X[d])`` tested against every indecomposable."""
    if len(X) == 0 or not is_d_cy(A, X, d):
        raise NotCalabiYauError(f"{X} is not a {d}-CY object of Lambda{A}")
    for Z in A.indecomposables():
        lhs = sum(stable_hom(A, x, Z, p).stable_dim for x in X)
        rhs = sum(stable_hom(A, Z, shift(A, x, d), p).stable_dim for x in X)
        if lhs != rhs:
            return False
    return True


def irreducible_map_census(A: AlgebraParams, X: IndecModule) -> list[IrreducibleMap]:
    """Irreducible maps ending at ``X``; a ``p(i, t)`` entry starts at a projective."""
    i, l = X
    out = []
    if l >= 2:
        out.append(IrreducibleMap("sigma", (i + 1) % A.n, l - 1))
    if l + 1 <= A.t:
        out.append(IrreducibleMap("p", i % A.n, l + 1))
    return out
