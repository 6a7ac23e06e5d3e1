"""Independent reference computations used by the tests.

Nothing here calls the closed-form index maps in :mod:`nakayama_cy.algebra`;
everything is rebuilt from the single cosyzygy step
``Omega^{-1}(S_i^l) = S_{i+l-t}^{t-l}``, the Nakayama step
``N(S_i^l) = S_{i+1-t}^l``, brute-force inversion, and counting.
"""
from __future__ import annotations


def cosyzygy_step(n, t, X):
    i, l = X
    return ((i + l - t) % n, t - l)


def nakayama_step(n, t, X):
    i, l = X
    return ((i + 1 - t) % n, l)


def all_modules(n, t):
    return [(i, l) for l in range(1, t) for i in range(n)]


def invert(n, t, func, Y):
    """Unique preimage of ``Y`` under ``func``, by search."""
    pre = [X for X in all_modules(n, t) if func(X) == Y]
    assert len(pre) == 1, (Y, pre)
    return pre[0]


def omega_power(n, t, X, k):
    """``Omega^k`` by repeating the one-step cosyzygy or its brute-force inverse."""
    for _ in range(max(-k, 0)):
        X = cosyzygy_step(n, t, X)
    for _ in range(max(k, 0)):
        X = invert(n, t, lambda Z: cosyzygy_step(n, t, Z), X)
    return X


def serre_obj(n, t, X):
    return omega_power(n, t, nakayama_step(n, t, X), 1)


def g_obj(n, t, X, d):
    return omega_power(n, t, nakayama_step(n, t, X), d + 1)


def shift_order(n, t):
    """Least ``r >= 1`` with ``[r] = id`` on every module, by iteration."""
    mods = all_modules(n, t)
    cur = list(mods)
    r = 0
    while True:
        cur = [cosyzygy_step(n, t, X) for X in cur]
        r += 1
        if cur == mods:
            return r


def g_orbits(n, t, d):
    """Orbit partition under ``G_d`` as a set of frozensets (order-free)."""
    G = {X: g_obj(n, t, X, d) for X in all_modules(n, t)}
    left = set(G)
    out = set()
    while left:
        X = min(left)
        orb = [X]
        Y = G[X]
        while Y != X:
            orb.append(Y)
            Y = G[Y]
        left -= set(orb)
        out.add(frozenset(orb))
    return out


def cy_dimension_search(n, t, summands):
    """Least ``d`` in ``[0, o([1]))`` with ``F(X) = X[d]`` as multisets, else None."""
    o = shift_order(n, t)
    lhs = sorted(serre_obj(n, t, X) for X in summands)
    for d in range(o):
        rhs = sorted(omega_power(n, t, X, -d) for X in summands)
        if lhs == rhs:
            return d
    return None


def hom_dim_overlap(n, X, Y):
    """dim Hom(S_i^l, S_j^m) by counting image lengths.

    A map with image of length ``k`` identifies the length-``k`` quotient of
    ``X`` (top ``i``) with the length-``k`` submodule of ``Y`` (top
    ``j+m-k``); each admissible ``k`` contributes one dimension.
    """
    (i, l), (j, m) = X, Y
    return sum(1 for k in range(1, min(l, m) + 1) if (i - (j + m - k)) % n == 0)


def stable_dim_overlap(n, t, X, Y):
    """Stable Hom dimension: image lengths ``k > l + m - t`` survive modulo projectives."""
    (i, l), (j, m) = X, Y
    lo = max(1, l + m - t + 1)
    return sum(1 for k in range(lo, min(l, m) + 1) if (i - (j + m - k)) % n == 0)
