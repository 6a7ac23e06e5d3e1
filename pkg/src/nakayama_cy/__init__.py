"""Calabi-Yau objects in the stable module categories of self-injective Nakayama algebras."""
from .algebra import (
    AlgebraParams,
    IndecModule,
    IrreducibleMap,
    StableObject,
    all_arrows,
    apply_functor_to_arrow,
    apply_to_object,
    ar_translate,
    functor_permutation,
    g_functor,
    make_algebra,
    nakayama,
    omega_pow,
    relative_order,
    serre,
    shift,
    shift_order_global,
    stable_arrows,
)
from .classify import (
    CategoryReport,
    ClassificationResult,
    CyParams,
    NotCalabiYauError,
    category_report,
    cy_dimension,
    cy_dimension_lower_bound,
    cy_params,
    indecomposable_cy_dimension,
    indecomposable_cy_report,
    is_d_cy,
    minimal_cy_modules,
    naturality_check,
    normalize_degree,
)
from .orbits import (
    ArTriangleShape,
    OrbitRecord,
    all_orbits,
    ar_triangle_check,
    ar_triangle_shape,
    canonical_order,
    check_minimality,
    middle_term_cy_check,
    minimal_cy_from_orbits,
    orbit,
)

__version__ = "0.1.0"
