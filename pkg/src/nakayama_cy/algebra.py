"""Index-level model of the stable module category of Lambda(n, t).

Lambda(n, t) is the path algebra of the cyclic quiver with ``n`` vertices
(arrows ``a_i: i -> i+1``) truncated at paths of length ``t``.  Its
non-projective indecomposables are the uniserial modules ``S_i^l`` with top
``S(i)`` and Loewy length ``1 <= l <= t-1``; ``S_i^t`` is the projective
``P(i)`` and has no place in the stable category.

Every functor used here (syzygy, Nakayama, AR translate, Serre functor) acts
on indecomposables by an affine map of the indices, so objects are handled
as ``(i, l)`` pairs and functors as closed-form index maps.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple

import numpy as np

__all__ = [
    "AlgebraParams",
    "IndecModule",
    "StableObject",
    "IrreducibleMap",
    "make_algebra",
    "omega_pow",
    "nakayama",
    "shift",
    "ar_translate",
    "serre",
    "g_functor",
    "shift_order_global",
    "apply_to_object",
    "relative_order",
    "stable_arrows",
    "all_arrows",
    "apply_functor_to_arrow",
    "functor_permutation",
]


@dataclass(frozen=True, order=True)
class AlgebraParams:
    """The pair ``(n, t)`` defining Lambda(n, t)."""

    n: int
    t: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise TypeError(f"n must be an integer, got {self.n!r}")
        if isinstance(self.t, bool) or not isinstance(self.t, (int, np.integer)):
            raise TypeError(f"t must be an integer, got {self.t!r}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.t < 2:
            raise ValueError(f"t must be >= 2, got {self.t}")

    @property
    def is_symmetric(self) -> bool:
        return (self.t - 1) % self.n == 0

    @property
    def num_indecomposables(self) -> int:
        """Number of non-projective indecomposables, ``n(t-1)``."""
        return self.n * (self.t - 1)

    def module(self, i: int, l: int) -> IndecModule:
        """Build ``S_i^l`` with ``i`` reduced mod ``n``; rejects projectives."""
        if not 1 <= l <= self.t - 1:
            raise ValueError(f"Loewy length must lie in [1, {self.t - 1}], got {l}")
        return IndecModule(i % self.n, l)

    def check(self, X: IndecModule) -> IndecModule:
        if not (0 <= X.i < self.n and 1 <= X.l <= self.t - 1):
            raise ValueError(f"{X} is not a non-projective indecomposable of Lambda{self}")
        return X

    def indecomposables(self) -> list[IndecModule]:
        """All non-projective indecomposables, ordered by ``(l, i)``."""
        return [IndecModule(i, l) for l in range(1, self.t) for i in range(self.n)]

    def index(self, X: IndecModule) -> int:
        """Position of ``X`` in :meth:`indecomposables`."""
        return (X.l - 1) * self.n + X.i

    def __str__(self):
        return f"({self.n},{self.t})"


def make_algebra(n: int, t: int) -> AlgebraParams:
    return AlgebraParams(n, t)


class IndecModule(NamedTuple):
    """The uniserial module ``S_i^l``: top ``S(i)``, Loewy length ``l``.

    Build instances through :meth:`AlgebraParams.module` so that ``i`` is
    reduced mod ``n``.
    """

    i: int
    l: int

    def socle(self, A: AlgebraParams) -> int:
        return (self.i + self.l - 1) % A.n

    def sort_key(self) -> tuple[int, int]:
        return (self.l, self.i)

    def __str__(self):
        return f"S[{self.i},{self.l}]"


class StableObject:
    """A finite direct sum of indecomposables, up to isomorphism.

    Krull-Schmidt makes an object the multiset of its summands, so equality
    and hashing go through the sorted summand tuple.
    """

    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[IndecModule] = ()):
        items = [x if type(x) is IndecModule else IndecModule(*x) for x in summands]
        items.sort()
        object.__setattr__(self, "summands", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("StableObject is immutable")

    @classmethod
    def of(cls, *summands: IndecModule) -> StableObject:
        return cls(summands)

    def __iter__(self) -> Iterator[IndecModule]:
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __eq__(self, other):
        if not isinstance(other, StableObject):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __lt__(self, other: StableObject):
        return self.sort_key() < other.sort_key()

    def __add__(self, other: StableObject) -> StableObject:
        return StableObject(self.summands + other.summands)

    def sort_key(self):
        return tuple(sorted(x.sort_key() for x in self.summands))

    def multiplicities(self) -> Counter:
        return Counter(self.summands)

    def is_multiplicity_free(self) -> bool:
        return len(set(self.summands)) == len(self.summands)

    def __str__(self):
        if not self.summands:
            return "0"
        return "+".join(str(x) for x in self.summands)

    def __repr__(self):
        return f"StableObject({str(self)})"


# ---------------------------------------------------------------------------
# functors on indecomposables


def omega_pow(A: AlgebraParams, X: IndecModule, k: int) -> IndecModule:
    """Apply the ``k``-th power of the syzygy functor (``k`` may be negative).

    Writing ``k = -2m`` gives ``S_{i-mt}^l``; writing ``k = -(2m-1)`` gives
    ``S_{i+l-mt}^{t-l}``.  Both hold for every integer ``m``.
    """
    n, t = A.n, A.t
    if k % 2 == 0:
        m = -k // 2
        return IndecModule((X.i - m * t) % n, X.l)
    m = (1 - k) // 2
    return IndecModule((X.i + X.l - m * t) % n, t - X.l)


def nakayama(A: AlgebraParams, X: IndecModule) -> IndecModule:
    return IndecModule((X.i + 1 - A.t) % A.n, X.l)


def shift(A: AlgebraParams, X: IndecModule, k: int = 1) -> IndecModule:
    """Suspension ``X[k]``; the shift of the stable category is ``Omega^{-1}``."""
    return omega_pow(A, X, -k)


def ar_translate(A: AlgebraParams, X: IndecModule) -> IndecModule:
    """``tau = Omega^2 N``, which lands on ``S_{i+1}^l``."""
    return omega_pow(A, nakayama(A, X), 2)


def serre(A: AlgebraParams, X: IndecModule) -> IndecModule:
    """Serre functor ``F = [1] tau``; equal to ``Omega N`` on objects."""
    return shift(A, ar_translate(A, X), 1)


def g_functor(A: AlgebraParams, X: IndecModule, d: int) -> IndecModule:
    """``G_d = Omega^{d+1} N = [-d] F``, whose finite orbits are the minimal d-CY objects."""
    return omega_pow(A, nakayama(A, X), d + 1)


def shift_order_global(A: AlgebraParams) -> int:
    """Order of ``[1]`` acting on objects: ``n`` if ``t = 2``, else ``2m`` with ``n | mt``."""
    if A.t == 2:
        return A.n
    return 2 * (A.n // math.gcd(A.n, A.t))


# ---------------------------------------------------------------------------
# objects


Step = Callable[[IndecModule], IndecModule]


def apply_to_object(X: StableObject, step: Step) -> StableObject:
    return StableObject(step(x) for x in X)


def relative_order(A: AlgebraParams, X: StableObject | IndecModule, step: Step) -> int | float:
    """Smallest ``r >= 1`` with ``step^r(X) = X``; ``math.inf`` if ``X`` never returns.

    ``step`` acts summand-wise.  The functors of this module are bijections
    on indecomposables, so the answer is always finite for them.
    """
    if isinstance(X, IndecModule):
        X = StableObject.of(X)
    seen = set()
    cur = X
    r = 0
    while True:
        cur = apply_to_object(cur, step)
        r += 1
        if cur == X:
            return r
        if cur in seen:
            return math.inf
        seen.add(cur)


# ---------------------------------------------------------------------------
# irreducible maps


@dataclass(frozen=True, order=True)
class IrreducibleMap:
    """``sigma(i, l): S_i^l -> S_{i-1}^{l+1}`` (inclusion) or ``p(i, l): S_i^l -> S_i^{l-1}``.

    Endpoints may be projective (``l = t``), in which case the map vanishes
    in the stable category; see :func:`stable_arrows`.
    """

    kind: str
    i: int
    l: int

    def __post_init__(self):
        if self.kind not in ("sigma", "p"):
            raise ValueError(f"kind must be 'sigma' or 'p', got {self.kind!r}")

    def domain(self, A: AlgebraParams) -> tuple[int, int]:
        return (self.i % A.n, self.l)

    def codomain(self, A: AlgebraParams) -> tuple[int, int]:
        if self.kind == "sigma":
            return ((self.i - 1) % A.n, self.l + 1)
        return (self.i % A.n, self.l - 1)

    def is_valid(self, A: AlgebraParams) -> bool:
        if not 0 <= self.i < A.n:
            return False
        if self.kind == "sigma":
            return 1 <= self.l <= A.t - 1
        return 2 <= self.l <= A.t

    def is_stable(self, A: AlgebraParams) -> bool:
        """Both endpoints non-projective, so the map survives in the stable category."""
        if not self.is_valid(A):
            return False
        return self.l <= A.t - 2 if self.kind == "sigma" else self.l <= A.t - 1

    def __str__(self):
        return f"{self.kind}[{self.i},{self.l}]"


def all_arrows(A: AlgebraParams) -> list[IrreducibleMap]:
    """Every irreducible map of Lambda-mod, including those touching projectives."""
    out = [IrreducibleMap("sigma", i, l) for l in range(1, A.t) for i in range(A.n)]
    out += [IrreducibleMap("p", i, l) for l in range(2, A.t + 1) for i in range(A.n)]
    return out


def stable_arrows(A: AlgebraParams) -> list[IrreducibleMap]:
    return [f for f in all_arrows(A) if f.is_stable(A)]


def _cosyzygy_arrow(A: AlgebraParams, f: IrreducibleMap) -> IrreducibleMap:
    kind = "p" if f.kind == "sigma" else "sigma"
    return IrreducibleMap(kind, (f.i + f.l - A.t) % A.n, A.t - f.l)


def _syzygy_arrow(A: AlgebraParams, f: IrreducibleMap) -> IrreducibleMap:
    kind = "p" if f.kind == "sigma" else "sigma"
    return IrreducibleMap(kind, (f.i + f.l) % A.n, A.t - f.l)


def _nakayama_arrow(A: AlgebraParams, f: IrreducibleMap) -> IrreducibleMap:
    return IrreducibleMap(f.kind, (f.i + 1 - A.t) % A.n, f.l)


def _nakayama_inverse_arrow(A: AlgebraParams, f: IrreducibleMap) -> IrreducibleMap:
    return IrreducibleMap(f.kind, (f.i - 1 + A.t) % A.n, f.l)


def apply_functor_to_arrow(A: AlgebraParams, f: IrreducibleMap, which: str, k: int = 1) -> IrreducibleMap:
    """Image of a stable irreducible map under ``Omega^k`` or ``N^k``.

    ``which`` is ``"omega"`` or ``"nakayama"``.  Powers are computed by
    iterating the one-step rules; negative ``k`` uses the inverse step.
    """
    if not f.is_stable(A):
        raise ValueError(f"{f} is not an irreducible map of the stable category of Lambda{A}")
    if which == "omega":
        step = _syzygy_arrow if k > 0 else _cosyzygy_arrow
    elif which == "nakayama":
        step = _nakayama_arrow if k > 0 else _nakayama_inverse_arrow
    else:
        raise ValueError(f"unknown functor {which!r}")
    for _ in range(abs(k)):
        f = step(A, f)
    assert f.is_stable(A), f
    return f


# ---------------------------------------------------------------------------
# permutation form, for vectorised sweeps


def functor_permutation(A: AlgebraParams, func: Step) -> np.ndarray:
    """Encode an object map as an index array over :meth:`AlgebraParams.indecomposables`."""
    return np.array([A.index(func(X)) for X in A.indecomposables()], dtype=np.int64)
