"""
Skew divided difference operators ∂_{w/v}.

For a reduced word a of w, ∂_{w/v} is ``v^-1 * sum_b prod_i phi_i`` where b runs
over the position subsets of a spelling a reduced word of v, and phi_i is the
reflection s_{a_i} at positions in b and ∂_{a_i} elsewhere.  The leading v^-1
is stored as the first (so last applied) step of each term.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .divdiff import ACT, NABLA, PI, SWAP, OpWord, apply_opword
from .perm import (
    Perm, Word, bruhat_leq, canonical_reduced_word, compose, embed, inverse,
    length, longest_element, simple,
)
from .poly import Poly, const, eta, x_delta
from .schubert import schubert_poly

__all__ = [
    "SkewOperator", "Verdict", "reduced_subwords", "skew_op", "skew_apply",
    "constants_by_skew", "skew_schubert", "conjecture1_check",
]


def reduced_subwords(a: Sequence[int], v: Perm) -> Iterator[tuple[int, ...]]:
    """Position subsets (0-based, increasing) of `a` whose letters spell a reduced word of v."""
    n = v.n
    target = length(v)
    p = len(a)

    def rec(k: int, cur: Perm, chosen: tuple[int, ...]):
        if len(chosen) == target:
            if cur == v:
                yield chosen
            return
        if p - k < target - len(chosen):
            return
        for i in range(k, p):
            letter = a[i]
            if cur.images[letter - 1] < cur.images[letter]:
                yield from rec(i + 1, compose(cur, simple(letter, n)), chosen + (i,))

    yield from rec(0, Perm(range(1, n + 1)), ())


@dataclass(frozen=True)
class SkewOperator:
    w: Perm
    v: Perm
    word: Word
    terms: tuple[OpWord, ...]

    def apply(self, f: Poly) -> Poly:
        total = const(0)
        for t in self.terms:
            total = total + apply_opword(t, f)
        return total

    __call__ = apply

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.terms)


def skew_op(w: Perm, v: Perm, word: Sequence[int] | None = None, isobaric: bool = False) -> SkewOperator:
    """
    Build ∂_{w/v} from `word` (default: the canonical reduced word of w).

    With ``isobaric=True`` every ∂_i is replaced by π_i, giving π_{w/v}.
    """
    if v.n != w.n:
        raise ValueError(f"rank mismatch: S_{w.n} vs S_{v.n}")
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in Bruhat order")
    a = tuple(canonical_reduced_word(w) if word is None else word)
    op = PI if isobaric else NABLA
    lead = (ACT, inverse(v))
    terms = []
    for chosen in reduced_subwords(a, v):
        marks = set(chosen)
        steps = [lead] + [(SWAP, x) if i in marks else (op, x) for i, x in enumerate(a)]
        terms.append(OpWord(tuple(steps)))
    return SkewOperator(w, v, a, tuple(terms))


@lru_cache(maxsize=4096)
def _default_op(w: Perm, v: Perm) -> SkewOperator:
    return skew_op(w, v)


def skew_apply(w: Perm, v: Perm, f: Poly) -> Poly:
    return _default_op(w, v).apply(f)


def constants_by_skew(u: Perm, v: Perm, w: Perm, n: int) -> int:
    """c^w_{uv} as the degree-0 value of ∂_{w/v} S_u."""
    u, v, w = embed(u, n), embed(v, n), embed(w, n)
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in Bruhat order")
    if length(u) + length(v) != length(w):
        raise ValueError("need length(u) + length(v) == length(w)")
    result = skew_apply(w, v, schubert_poly(u))
    if result.degree() > 0:
        raise ArithmeticError(f"∂_{{w/v}} S_u has positive degree: {result}")
    return eta(result)


def skew_schubert(w: Perm, v: Perm) -> Poly:
    """S_{w/v} = ∂_{v^-1 w0 / w^-1 w0}(x^δ)."""
    n = w.n
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in Bruhat order")
    w0 = longest_element(n)
    top = compose(inverse(v), w0)
    bottom = compose(inverse(w), w0)
    return skew_apply(top, bottom, x_delta(n))


@dataclass(frozen=True)
class Verdict:
    positive: bool
    witness: Poly | None = None

    def __bool__(self) -> bool:
        return self.positive


def conjecture1_check(w: Perm, v: Perm, u: Perm) -> Verdict:
    """Is ∂_{w/v} S_u a polynomial with nonnegative coefficients?"""
    result = skew_apply(w, v, schubert_poly(embed(u, w.n)))
    if result.is_nonnegative():
        return Verdict(True)
    return Verdict(False, result)
