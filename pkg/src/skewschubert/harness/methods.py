"""Structure constants c^w_{uv} by three independent routes."""

from __future__ import annotations

from functools import lru_cache

from ..nilcox import path_sum_constants
from ..perm import Perm, all_perms, bruhat_lower, embed, length
from ..poly import eta
from ..schubert import SchubExpansion, constants_by_product
from ..skewop import constants_by_skew

METHODS = ("product", "skew", "paths")


def by_product(u: Perm, v: Perm, n: int) -> SchubExpansion:
    return constants_by_product(u, v, n)


def by_skew(u: Perm, v: Perm, n: int) -> SchubExpansion:
    u, v = embed(u, n), embed(v, n)
    target = length(u) + length(v)
    out = {}
    for w in all_perms(n):
        if length(w) == target and v in bruhat_lower(w):
            c = constants_by_skew(u, v, w, n)
            if c:
                out[w] = c
    return out


@lru_cache(maxsize=None)
def _paths(w: Perm, u: Perm, n: int):
    return path_sum_constants(w, u, n)


def by_paths(u: Perm, v: Perm, n: int) -> SchubExpansion:
    u, v = embed(u, n), embed(v, n)
    out = {}
    for w in all_perms(n):
        c = eta(_paths(w, u, n)[v])
        if c:
            out[w] = c
    return out


_DISPATCH = {"product": by_product, "skew": by_skew, "paths": by_paths}


def constants(u: Perm, v: Perm, n: int, method: str) -> SchubExpansion:
    return _DISPATCH[method](u, v, n)


def compare_methods(u: Perm, v: Perm, n: int) -> tuple[dict[str, SchubExpansion], list[Perm]]:
    """All three expansions and the permutations w on which any two disagree."""
    results = {m: constants(u, v, n, m) for m in METHODS}
    keys = set().union(*results.values())
    bad = sorted(w for w in keys if len({r.get(w, 0) for r in results.values()}) > 1)
    return results, bad
