"""Brute-force orbit oracle.

Minimal d-CY objects are direct sums over ``G_d``-orbits of indecomposables,
with ``G_d = Omega^{d+1} N``.  Everything here is computed by iterating the
object-level functors, independently of the closed forms in
:mod:`nakayama_cy.classify`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraParams,
    IndecModule,
    StableObject,
    ar_translate,
    g_functor,
    serre,
    shift,
)
from .classify import NotCalabiYauError, is_d_cy

__all__ = [
    "OrbitRecord",
    "ArTriangleShape",
    "orbit",
    "all_orbits",
    "minimal_cy_from_orbits",
    "canonical_order",
    "check_minimality",
    "ar_triangle_shape",
    "ar_triangle_check",
    "middle_term_cy_check",
]


@dataclass(frozen=True)
class OrbitRecord:
    d: int
    representative: IndecModule
    elements: tuple[IndecModule, ...]

    def __len__(self):
        return len(self.elements)

    def as_object(self) -> StableObject:
        return StableObject(self.elements)


@dataclass(frozen=True)
class ArTriangleShape:
    """``tau Z -> middle -> Z -> (tau Z)[1]`` with projective summands of the middle term dropped."""

    end: IndecModule
    start: IndecModule
    middle: StableObject


def orbit(A: AlgebraParams, X: IndecModule, d: int) -> OrbitRecord:
    X = A.check(IndecModule(*X))
    elements = [X]
    cur = g_functor(A, X, d)
    while cur != X:
        elements.append(cur)
        cur = g_functor(A, cur, d)
    return OrbitRecord(d, X, tuple(elements))


def all_orbits(A: AlgebraParams, d: int) -> list[OrbitRecord]:
    """Partition of the indecomposables into ``G_d``-orbits.

    Each orbit starts at its least ``(l, i)`` member.
    """
    seen: set[IndecModule] = set()
    out = []
    for X in A.indecomposables():
        if X in seen:
            continue
        rec = orbit(A, X, d)
        seen.update(rec.elements)
        out.append(rec)
    return out


def minimal_cy_from_orbits(A: AlgebraParams, d: int) -> list[StableObject]:
    return [rec.as_object() for rec in all_orbits(A, d)]


def canonical_order(A: AlgebraParams, X: StableObject, d: int) -> list[IndecModule] | None:
    """Cyclic order ``X_1, ..., X_r`` with ``F(X_j) = X_{j+1}[d]``, or None if there is none."""
    summands = list(X)
    if not summands or not X.is_multiplicity_free():
        return None
    pool = set(summands)
    start = min(summands, key=IndecModule.sort_key)
    order = [start]
    cur = start
    while True:
        target = serre(A, cur)
        nxt = next((y for y in pool if shift(A, y, d) == target), None)
        if nxt is None:
            return None
        if nxt == start:
            break
        if nxt in order:
            return None
        order.append(nxt)
        cur = nxt
    return order if len(order) == len(summands) else None


def check_minimality(A: AlgebraParams, X: StableObject, d: int) -> bool:
    """Multiplicity-free and admitting a canonical cyclic order."""
    return canonical_order(A, X, d) is not None


def ar_triangle_shape(A: AlgebraParams, X: IndecModule) -> ArTriangleShape:
    i, l = A.check(IndecModule(*X))
    middle = []
    if l + 1 <= A.t - 1:
        middle.append(IndecModule(i, l + 1))
    if l - 1 >= 1:
        middle.append(IndecModule((i + 1) % A.n, l - 1))
    return ArTriangleShape(X, ar_translate(A, X), StableObject(middle))


def ar_triangle_check(A: AlgebraParams, X: IndecModule, d: int) -> bool:
    """Whether the AR triangle ending at ``X`` starts at ``X[d-1]``."""
    return ar_translate(A, X) == shift(A, X, d - 1)


def middle_term_cy_check(A: AlgebraParams, X: IndecModule, d: int) -> bool:
    """Whether the middle term of the AR triangle ending at a d-CY ``X`` is again d-CY.

    An empty middle term (``t = 2``) is skipped and reported as passing.
    """
    if not is_d_cy(A, StableObject.of(X), d):
        raise NotCalabiYauError(f"{X} is not a {d}-CY object of Lambda{A}")
    shape = ar_triangle_shape(A, X)
    if len(shape.middle) == 0:
        return True
    return is_d_cy(A, shape.middle, d)
