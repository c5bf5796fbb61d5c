"""
Schubert polynomials, expansion in the Schubert basis, and the quotient by I_n.

I_n is the ideal generated by the symmetric polynomials in x1..xn without
constant term.  The coefficient of S_v in f (mod I_n) is ``eta(∂_v f)``;
`reduce_mod_ideal` gives the independent normal-form route.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Mapping, Sequence

from .divdiff import ddiff, ddiff_w, isobaric_pi_w
from .perm import (
    Perm, code, compose, embed, identity, inverse,
    longest_element, trim,
)
from .poly import Mono, Poly, const, eta, monomial, x_delta

__all__ = [
    "SchubExpansion", "schubert_poly", "all_ddiffs", "expand_mod_ideal",
    "reduce_mod_ideal", "constants_by_product", "pairing", "sorting_perm",
    "key_poly", "skew_key_poly", "block_expand", "schubert_coefficients",
    "recompose", "expansion_to_json", "expansion_from_json", "h_poly",
]

SchubExpansion = dict[Perm, int]


@lru_cache(maxsize=None)
def schubert_poly(w: Perm) -> Poly:
    """S_w = ∂_{w^-1 w0}(x^δ)."""
    n = w.n
    return ddiff_w(x_delta(n), compose(inverse(w), longest_element(n)))


def all_ddiffs(f: Poly, n: int) -> dict[Perm, Poly]:
    """Every nonzero ∂_v f for v in S_n, built up one left factor at a time."""
    e = identity(n)
    out = {e: f} if f else {}
    frontier = list(out)
    seen = set(frontier)
    while frontier:
        nxt = []
        for u in frontier:
            g = out[u]
            pos = {val: k for k, val in enumerate(u.images)}
            for i in range(1, n):
                if pos[i] > pos[i + 1]:
                    continue
                # s_i * u swaps the values i, i+1 and is one longer
                im = list(u.images)
                im[pos[i]], im[pos[i + 1]] = i + 1, i
                v = Perm(im)
                if v in seen:
                    continue
                seen.add(v)
                h = ddiff(g, i)
                if h:
                    out[v] = h
                    nxt.append(v)
        frontier = nxt
    return out


def expand_mod_ideal(f: Poly, n: int) -> SchubExpansion:
    if f.nvars() > n:
        raise ValueError(f"polynomial uses variables beyond x{n}")
    return {v: c for v, g in all_ddiffs(f, n).items() if (c := eta(g))}


def h_poly(k: int, nvars: int, offset: int = 0) -> Poly:
    """Complete homogeneous h_k in x_{offset+1}..x_{offset+nvars}."""
    if k < 0:
        return const(0)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(nvars), k):
        e = [0] * (offset + nvars)
        for idx in combo:
            e[offset + idx] += 1
        terms[tuple(e)] = 1
    return Poly(terms)


@lru_cache(maxsize=None)
def _ideal_tails(n: int) -> tuple[tuple[int, Poly], ...]:
    # g_i = h_{n-i+1}(x1..xi) has leading term x_i^(n-i+1) when x_n > ... > x_1 in lex
    tails = []
    for i in range(1, n + 1):
        k = n - i + 1
        g = h_poly(k, i)
        lead = monomial((0,) * (i - 1) + (k,))
        tails.append((k, g - lead))
    return tuple(tails)


def reduce_mod_ideal(f: Poly, n: int) -> Poly:
    """Normal form of f modulo I_n; every exponent vector of the result lies under δ_n."""
    if f.nvars() > n:
        raise ValueError(f"polynomial uses variables beyond x{n}")
    tails = _ideal_tails(n)
    work = dict(f.terms)
    done: dict[Mono, int] = {}

    def order(m: Mono):
        return tuple(reversed(m + (0,) * (n - len(m))))

    while work:
        m = max(work, key=order)
        c = work.pop(m)
        e = m + (0,) * (n - len(m))
        bad = next((i for i in range(n, 0, -1) if e[i - 1] >= n - i + 1), None)
        if bad is None:
            done[m] = done.get(m, 0) + c
            continue
        k, tail = tails[bad - 1]
        q = list(e)
        q[bad - 1] -= k
        for tm, tc in tail.terms.items():
            t = tuple(a + b for a, b in itertools.zip_longest(q, tm, fillvalue=0))
            while t and t[-1] == 0:
                t = t[:-1]
            s = work.get(t, 0) - c * tc
            if s:
                work[t] = s
            else:
                work.pop(t, None)
    return Poly(done)


def constants_by_product(u: Perm, v: Perm, n: int) -> SchubExpansion:
    """Structure constants c^w_{uv}: the Schubert expansion of S_u S_v mod I_n."""
    u, v = embed(u, n), embed(v, n)
    return expand_mod_ideal(schubert_poly(u) * schubert_poly(v), n)


def pairing(f: Poly, g: Poly, n: int) -> int:
    return eta(ddiff_w(f * g, longest_element(n)))


def sorting_perm(alpha: Sequence[int]) -> Perm:
    """Shortest w with alpha[w(i)] = lambda(alpha)[i] for all i (a stable sort)."""
    order = sorted(range(len(alpha)), key=lambda j: -alpha[j])
    return Perm(j + 1 for j in order)


def key_poly(alpha: Sequence[int]) -> Poly:
    alpha = tuple(alpha)
    lam = sorted(alpha, reverse=True)
    return isobaric_pi_w(monomial(lam), sorting_perm(alpha))


def skew_key_poly(alpha: Sequence[int], v: Perm) -> Poly:
    from .skewop import skew_op

    alpha = tuple(alpha)
    lam = sorted(alpha, reverse=True)
    w = sorting_perm(alpha)
    return skew_op(w, embed(v, w.n), isobaric=True).apply(monomial(lam))


def schubert_coefficients(g: Poly) -> dict[Perm, int]:
    """Expansion of any polynomial in the Schubert basis; keys are trimmed perms."""
    if not g:
        return {}
    m = max(g.nvars(), 1)
    rank = m + max(g.degree(), 0) + 1
    return {trim(v): c for v, c in expand_mod_ideal(g, rank).items()}


def block_expand(w: Perm, mu: Sequence[int]) -> dict[tuple[Perm, ...], int]:
    """
    Coefficients d with S_w(X) = sum d[u1..up] * prod_j S_{u_j}(X_j).

    X is split into consecutive blocks of sizes mu.  Each block is peeled in
    turn: its variables are shifted to x1.., the block polynomial is expanded
    in the Schubert basis, and the remaining variables ride along in the
    coefficients.
    """
    mu = tuple(mu)
    if not mu or any(m <= 0 for m in mu):
        raise ValueError(f"invalid composition {mu}")
    c = code(w)
    if any(c[sum(mu):]):
        raise ValueError(f"code of {w} does not fit in {sum(mu)} variables")
    return _block_rec(schubert_poly(w), mu, 0)


def _block_rec(f: Poly, mu: tuple[int, ...], offset: int) -> dict[tuple[Perm, ...], int]:
    if not mu:
        return {(): eta(f)} if f else {}
    m = mu[0]
    groups: dict[Mono, dict[Mono, int]] = {}
    for mono, c in f.terms.items():
        block = mono[offset:offset + m]
        rest = mono[:offset] + (0,) * len(block) + mono[offset + m:]
        groups.setdefault(rest, {})[block] = c
    by_perm: dict[Perm, Poly] = {}
    for rest, block_terms in groups.items():
        for u, d in schubert_coefficients(Poly(block_terms)).items():
            by_perm[u] = by_perm.get(u, const(0)) + monomial(rest, d)
    out = {}
    for u, coeff in by_perm.items():
        for key, d in _block_rec(coeff, mu[1:], offset + m).items():
            out[(u,) + key] = d
    return {k: d for k, d in out.items() if d}


def recompose(expansion: Mapping[tuple[Perm, ...], int], mu: Sequence[int]) -> Poly:
    """Rebuild sum d * prod S_{u_j}(X_j) from a block expansion."""
    total = const(0)
    for us, d in expansion.items():
        term = const(d)
        offset = 0
        for u, m in zip(us, mu):
            s = schubert_poly(u)
            term = term * Poly({(0,) * offset + e: c for e, c in s.terms.items()})
            offset += m
        total = total + term
    return total


def expansion_to_json(coeffs: Mapping[Perm, int], n: int) -> dict:
    items = sorted(coeffs.items(), key=lambda kv: kv[0].images)
    return {"n": n, "coeffs": [{"perm": list(p.images), "c": c} for p, c in items]}


def expansion_from_json(data: Mapping) -> tuple[int, SchubExpansion]:
    return int(data["n"]), {Perm(t["perm"]): int(t["c"]) for t in data["coeffs"]}
