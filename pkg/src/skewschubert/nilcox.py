"""
The nilCoxeter algebra NC_n with polynomial coefficients.

NC_n has generators e_1..e_n and basis e_w, w in S_{n+1}; e_u e_v = e_{uv}
when lengths add and 0 otherwise.  The Schubert expression
``sum_w S_w e_w`` factors as A_1(x1) ... A_n(xn).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .divdiff import ddiff_xy
from .perm import (
    EQUAL, Perm, all_perms, bruhat_leq, compose, cover_transposition, identity,
    length, lower_covers, simple,
)
from .poly import Poly, const, var
from .schubert import schubert_poly

__all__ = [
    "NilCoxElem", "StepFactor", "nc_mul", "one", "generator", "a_factor",
    "schubert_expression", "schubert_expression_sum", "theorem1_scan",
    "e_step", "path_sum_constants",
]


class NilCoxElem:
    """A finite sum of Poly * e_w over w in S_{n+1}."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Perm, Poly | int] | None = None):
        self.n = n
        clean = {}
        for w, c in (coeffs or {}).items():
            if w.n != n + 1:
                raise ValueError(f"{w} is not in S_{n + 1}")
            c = const(c) if isinstance(c, int) else c
            if c:
                clean[w] = c
        self.coeffs = clean

    def __mul__(self, other: NilCoxElem) -> NilCoxElem:
        return nc_mul(self, other)

    def __add__(self, other: NilCoxElem) -> NilCoxElem:
        _check_rank(self, other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, const(0)) + c
        return NilCoxElem(self.n, out)

    def __neg__(self) -> NilCoxElem:
        return NilCoxElem(self.n, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: NilCoxElem) -> NilCoxElem:
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, NilCoxElem) and self.n == other.n and self.coeffs == other.coeffs

    def __getitem__(self, w: Perm) -> Poly:
        return self.coeffs.get(w, const(0))

    def map_coeffs(self, fn) -> NilCoxElem:
        return NilCoxElem(self.n, {w: fn(c) for w, c in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: (length(kv[0]), kv[0].images))
        return " + ".join(f"({c})*e[{w}]" for w, c in items)

    __repr__ = __str__

    def to_json(self) -> dict:
        items = sorted(self.coeffs.items(), key=lambda kv: kv[0].images)
        return {"n": self.n, "coeffs": [{"perm": list(w.images), "c": c.to_json()} for w, c in items]}


def _check_rank(a: NilCoxElem, b: NilCoxElem) -> None:
    if a.n != b.n:
        raise ValueError(f"rank mismatch: NC_{a.n} vs NC_{b.n}")


def nc_mul(a: NilCoxElem, b: NilCoxElem) -> NilCoxElem:
    _check_rank(a, b)
    out: dict[Perm, Poly] = {}
    for u, p in a.coeffs.items():
        lu = length(u)
        for v, q in b.coeffs.items():
            uv = compose(u, v)
            if length(uv) == lu + length(v):
                out[uv] = out.get(uv, const(0)) + p * q
    return NilCoxElem(a.n, out)


def one(n: int) -> NilCoxElem:
    return NilCoxElem(n, {identity(n + 1): 1})


def generator(i: int, n: int, coeff: Poly | int = 1) -> NilCoxElem:
    if not 1 <= i <= n:
        raise ValueError(f"e_{i} is not a generator of NC_{n}")
    return NilCoxElem(n, {simple(i, n + 1): coeff})


def a_factor(i: int, x: int | Poly, n: int) -> NilCoxElem:
    """
    A_i(x) = (1 + x e_n)(1 + x e_{n-1}) ... (1 + x e_i).

    `x` is a variable index, or any Poly to substitute for the variable.
    """
    if not 1 <= i <= n:
        raise ValueError(f"A_{i} undefined in NC_{n}")
    xp = var(x) if isinstance(x, int) else x
    result = one(n)
    for j in range(n, i - 1, -1):
        result = result * (one(n) + generator(j, n, xp))
    return result


def schubert_expression(n: int) -> NilCoxElem:
    """A_1(x1) ... A_n(xn) in NC_n."""
    result = one(n)
    for i in range(1, n + 1):
        result = result * a_factor(i, i, n)
    return result


def schubert_expression_sum(n: int) -> NilCoxElem:
    """sum over w in S_{n+1} of S_w e_w, straight from the definition."""
    return NilCoxElem(n, {w: schubert_poly(w) for w in all_perms(n + 1)})


def theorem1_scan(n: int) -> list[tuple[Perm, int, int, Poly]]:
    """All (w, i, j, ∂_ij S_w) with w in S_{n+1} where ∂_ij S_w has a negative coefficient."""
    bad = []
    for w in all_perms(n + 1):
        s = schubert_poly(w)
        for i in range(1, n + 2):
            for j in range(i + 1, n + 2):
                d = ddiff_xy(s, i, j)
                if not d.is_nonnegative():
                    bad.append((w, i, j, d))
    return bad


@dataclass(frozen=True)
class StepFactor:
    """0, 1, +e_letter or -e_letter."""

    coeff: int
    letter: int | None = None

    def to_elem(self, n: int) -> NilCoxElem:
        if self.letter is None:
            return NilCoxElem(n, {identity(n + 1): self.coeff})
        return generator(self.letter, n, self.coeff)

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.letter is None:
            return "1"
        return f"{'+' if self.coeff > 0 else '-'}e{self.letter}"


ZERO = StepFactor(0)
ONE = StepFactor(1)


def e_step(i: int, s: int, w: Perm, v: Perm, n: int) -> StepFactor:
    """Weight of the step w -> v in factor (1 + x_s e_{n-i}); w, v in S_n."""
    tr = cover_transposition(w, v)
    if tr == EQUAL:
        return ONE
    if tr is None:
        if not bruhat_leq(v, w) or length(w) - length(v) > 1:
            raise ValueError(f"{w} -> {v} is not a step of length <= 1")
        return ZERO
    a, b = tr
    if a == s:
        return StepFactor(1, n - i)
    if b == s:
        return StepFactor(-1, n - i)
    return ZERO


def path_sum_constants(w: Perm, u: Perm, n: int) -> NilCoxElem:
    """
    sum_v c^w_{uv} e_v as a weighted sum over chains in Bruhat order.

    Chains w = v_0 >= v_1 >= ... >= v_N = u drop length by at most one per
    step; the factors (1 + x_s e_{n-i}) are taken with s increasing and i
    increasing within each s, and the step weights multiply left to right.
    The sum over chains is accumulated one step at a time, grouping
    partial chains by their current endpoint.
    """
    if w.n != n or u.n != n:
        raise ValueError(f"w and u must lie in S_{n}")
    rank = n - 1
    factors = [(s, i) for s in range(1, n) for i in range(1, n - s + 1)]
    lu = length(u)
    states: dict[Perm, NilCoxElem] = {w: one(rank)} if bruhat_leq(u, w) else {}
    for step, (s, i) in enumerate(factors):
        remaining = len(factors) - step - 1
        nxt: dict[Perm, NilCoxElem] = {}
        for cur, acc in states.items():
            for low in [cur] + [c for c, _ in lower_covers(cur)]:
                f = e_step(i, s, cur, low, n)
                if f.coeff == 0:
                    continue
                if length(low) - lu > remaining or not bruhat_leq(u, low):
                    continue
                prod = acc if f.letter is None else acc * f.to_elem(rank)
                if not prod.coeffs:
                    continue
                nxt[low] = nxt[low] + prod if low in nxt else prod
        states = nxt
    return states.get(u, NilCoxElem(rank))
