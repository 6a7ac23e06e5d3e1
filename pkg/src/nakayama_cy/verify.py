"""Cross-checks run by ``nakayama-cy verify`` at one parameter point."""
from __future__ import annotations

from collections import Counter
from functools import partial

from . import homspace
from .algebra import AlgebraParams, StableObject, relative_order, shift, shift_order_global
from .classify import (
    CASE_EVEN_T_N_ODD,
    category_report,
    cy_dimension,
    cy_dimension_lower_bound,
    is_d_cy,
    minimal_cy_modules,
)
from .orbits import ar_triangle_check, check_minimality, middle_term_cy_check, minimal_cy_from_orbits

SCHEMA_VERSION = "1"

CHECKS = ("oracle_equal", "minimality", "ar_triangle", "middle_term", "bound", "serre_duality")


def bound_holds(A: AlgebraParams, M: StableObject) -> bool:
    """``lower(c(M)) <= CYdim(M) < o([1]_M) <= 2n`` for a minimal d-CY object ``M``.

    The lower estimate only applies when ``M`` is still minimal at its own
    CY dimension; a minimal d-CY object can split at ``CYdim(M)`` (e.g.
    ``S[0,1]+S[1,1]+S[2,1]`` over Lambda(3,2)), and then only the upper
    chain is checked.
    """
    cyd = cy_dimension(A, M)
    o_M = relative_order(A, M, partial(shift, A, k=1))
    if cyd is None or not (cyd < o_M <= 2 * A.n):
        return False
    if not check_minimality(A, M, cyd):
        return True
    lb = cy_dimension_lower_bound(A, len(M))
    return lb is not None and lb <= cyd


def _check_classification(A: AlgebraParams, d: int, problems: list[str]) -> dict:
    result = minimal_cy_modules(A, d)
    closed = result.minimal_objects
    oracle = minimal_cy_from_orbits(A, d)
    out = {"case_tag": result.case_tag, "bigN": result.bigN, "num_minimal": len(closed)}

    out["oracle_equal"] = set(closed) == set(oracle) and len(set(closed)) == len(closed)
    if not out["oracle_equal"]:
        missing = sorted(set(oracle) - set(closed))
        extra = sorted(set(closed) - set(oracle))
        problems.append(
            f"closed form != orbits: missing {[str(x) for x in missing[:3]]}, extra {[str(x) for x in extra[:3]]}"
        )

    ok = True
    seen = Counter()
    for M in closed:
        seen.update(M)
        if not (M.is_multiplicity_free() and check_minimality(A, M, d) and is_d_cy(A, M, d)):
            ok = False
            problems.append(f"{M} fails the minimality check at d={d}")
    if any(c > 1 for c in seen.values()):
        ok = False
        problems.append("minimal objects share a summand")
    sizes = {len(M) for M in closed}
    allowed = [{result.bigN}, {2 * result.bigN}]
    if result.case_tag == CASE_EVEN_T_N_ODD:
        allowed.append({result.bigN, 2 * result.bigN})
    if closed and sizes not in allowed:
        ok = False
        problems.append(f"summand counts {sorted(sizes)} do not fit N={result.bigN}")
    out["minimality"] = ok

    bound_ok = True
    for M in closed:
        if not bound_holds(A, M):
            bound_ok = False
            problems.append(f"CY dimension bound fails for {M}")
    out["bound"] = bound_ok
    return out


def _check_triangles(A: AlgebraParams, d: int, problems: list[str]) -> tuple[bool, bool]:
    tri_ok = mid_ok = True
    for X in A.indecomposables():
        cy = is_d_cy(A, StableObject.of(X), d)
        if ar_triangle_check(A, X, d) != cy:
            tri_ok = False
            problems.append(f"AR-triangle criterion disagrees with F(X)=X[d] for {X}, d={d}")
        if cy and not middle_term_cy_check(A, X, d):
            mid_ok = False
            problems.append(f"middle term of the AR triangle ending at {X} is not {d}-CY")
    return tri_ok, mid_ok


def _check_serre_duality(A: AlgebraParams, problems: list[str]) -> bool:
    ind = A.indecomposables()
    ok = True
    for p in (None, homspace.DEFAULT_PRIME):
        for X in ind:
            for Y in ind:
                if not homspace.serre_duality_check(A, X, Y, p):
                    ok = False
                    problems.append(f"Serre duality fails for ({X}, {Y}) over {'Q' if p is None else f'GF({p})'}")
    return ok


def verify_point(n: int, t: int, degrees=None, hom_max: int = 8) -> list[dict]:
    """Run every check at ``(n, t)`` for the given degrees (default: one full shift period).

    Returns one self-contained record per degree.  The Hom-space checks do
    not depend on ``d`` and are attached to the ``d = 0`` record, and only
    when ``n, t <= hom_max``.
    """
    A = AlgebraParams(n, t)
    o = shift_order_global(A)
    if degrees is None:
        degrees = range(o)
    cat = category_report(A)
    records = []
    for d in degrees:
        problems: list[str] = []
        rec = {
            "n": n,
            "t": t,
            "d": d,
            "schema_version": SCHEMA_VERSION,
            "o_shift": o,
            "is_cy_category": cat.is_cy_category,
            "cydim_category": cat.cydim,
        }
        rec.update(_check_classification(A, d, problems))
        rec["ar_triangle"], rec["middle_term"] = _check_triangles(A, d, problems)
        if d == 0 and n <= hom_max and t <= hom_max:
            rec["serre_duality"] = _check_serre_duality(A, problems)
        else:
            rec["serre_duality"] = None
        rec["discrepancies"] = problems
        records.append(rec)
    return records
