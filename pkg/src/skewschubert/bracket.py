"""
The bracket algebra E_n^0 on generators [ij], i < j.

Relations:
  [ij]^2 = 0
  [ij][jk] = [jk][ik] + [ik][ij],  [jk][ij] = [ik][jk] + [ij][ik]    (i < j < k)
  [ij][kl] = [kl][ij]                                                 ({i,j}, {k,l} disjoint)

Sending [ij] to ∂_ij is a representation on polynomials.  Whether it is
faithful is not known here, so every equality this module certifies is
equality of the represented operators.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence, Union

from .divdiff import ddiff_xy
from .perm import Perm, bruhat_leq, canonical_reduced_word, compose, identity, inverse, simple
from .poly import Poly, const, monomials_below
from .skewop import reduced_subwords

__all__ = [
    "Pair", "BracketWord", "BracketElem", "CrossedTerm", "normalize_crossed",
    "bracket_skew", "represent", "rewrite_moves", "rewrite_search",
    "certify", "parse_bracket",
]

Pair = tuple[int, int]
BracketWord = tuple[Pair, ...]


class BracketElem:
    """An integer combination of words in the generators [ij]."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping[Sequence[Pair], int] | None = None):
        clean: dict[BracketWord, int] = {}
        for word, c in (terms or {}).items():
            word = tuple(tuple(p) for p in word)
            for i, j in word:
                if not i < j:
                    raise ValueError(f"generator [{i}{j}] must have i < j")
            clean[word] = clean.get(word, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}
        self._key = None

    @classmethod
    def word(cls, *pairs: Pair) -> BracketElem:
        return cls({tuple(pairs): 1})

    def __add__(self, other: BracketElem) -> BracketElem:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return BracketElem(out)

    def __neg__(self) -> BracketElem:
        return BracketElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: BracketElem) -> BracketElem:
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, BracketElem) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def max_index(self) -> int:
        return max((j for w in self.terms for _, j in w), default=1)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (word, c) in enumerate(sorted(self.terms.items(), key=lambda t: (-t[1] > 0, t[0]))):
            body = "".join(f"[{i}{j}]" if max(i, j) < 10 else f"[{i},{j}]" for i, j in word) or "1"
            mag = abs(c)
            if mag != 1:
                body = f"{mag}*{body}"
            if k == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    __repr__ = __str__


def parse_bracket(text: str) -> BracketElem:
    """Parse e.g. ``"[14][34][23] - 2*[12][34]"`` (use [i,j] for indices >= 10)."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return BracketElem()
    if text[0] not in "+-":
        text = "+" + text
    terms: dict[BracketWord, int] = {}
    for m in re.finditer(r"([+-])(\d+\*?)?((?:\[\d+,?\d*\])+|1)", text):
        sgn = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2).rstrip("*")) if m.group(2) else 1
        word = []
        for g in re.findall(r"\[([\d,]+)\]", m.group(3)):
            if "," in g:
                i, j = map(int, g.split(","))
            else:
                i, j = int(g[0]), int(g[1:])
            word.append((i, j))
        terms[tuple(word)] = terms.get(tuple(word), 0) + sgn * mag
    rebuilt = "".join(m.group(0) for m in re.finditer(r"([+-])(\d+\*?)?((?:\[\d+,?\d*\])+|1)", text))
    if rebuilt != text:
        raise ValueError(f"cannot parse bracket element {text!r}")
    return BracketElem(terms)


Factor = Union[Pair, Perm]


@dataclass(frozen=True)
class CrossedTerm:
    """
    ``sign * perm * factors`` in the crossed product of E_n^0 by S_n.

    `factors` mixes generator pairs (in any order, [ji] meaning -[ij]) and
    permutations.
    """

    perm: Perm
    factors: tuple[Factor, ...]
    sign: int = 1


def normalize_crossed(t: CrossedTerm) -> tuple[int, BracketWord]:
    """
    Move every permutation to the right using w [ij] = [w(i) w(j)] w.

    Returns the sign and the word in ordered generators.  When the term
    carries permutations among its factors the one left over at the right
    end must be the identity.  A term made of generators only is read as
    the action of `perm` on that word.
    """
    cur = t.perm
    sgn = t.sign
    word = []
    mixed = False
    for f in t.factors:
        if isinstance(f, Perm):
            cur = compose(cur, f)
            mixed = True
            continue
        i, j = cur(f[0]), cur(f[1])
        if i > j:
            i, j, sgn = j, i, -sgn
        word.append((i, j))
    if mixed and cur != identity(cur.n):
        raise ArithmeticError(f"residual permutation {cur} is not the identity")
    return sgn, tuple(word)


def bracket_skew(w: Perm, v: Perm, word: Sequence[int] | None = None) -> BracketElem:
    """[w/v]: the skew operator's subword sum with ∂_{a} replaced by [a, a+1]."""
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in Bruhat order")
    n = w.n
    a = tuple(canonical_reduced_word(w) if word is None else word)
    total: dict[BracketWord, int] = {}
    for chosen in reduced_subwords(a, v):
        marks = set(chosen)
        factors = tuple(simple(x, n) if k in marks else (x, x + 1) for k, x in enumerate(a))
        sgn, bw = normalize_crossed(CrossedTerm(inverse(v), factors))
        total[bw] = total.get(bw, 0) + sgn
    return BracketElem(total)


def represent(e: BracketElem) -> Callable[[Poly], Poly]:
    """The operator obtained from [ij] -> ∂_ij; words act rightmost letter first."""
    terms = list(e.terms.items())

    def op(f: Poly) -> Poly:
        total = const(0)
        for word, c in terms:
            g = f
            for i, j in reversed(word):
                if not g:
                    break
                g = ddiff_xy(g, i, j)
            total = total + g * c
        return total

    return op


def certify(a: BracketElem, b: BracketElem, n: int | None = None) -> bool:
    """a and b represent the same operator on every monomial under δ_{n+1}."""
    if n is None:
        n = max(a.max_index(), b.max_index())
    ra, rb = represent(a), represent(b)
    return all(ra(m) == rb(m) for m in monomials_below(range(n, -1, -1)))


def _three_term(p: Pair, q: Pair) -> list[tuple[int, BracketWord]] | None:
    """If pq is a monomial of a 3-term relation, return pq rewritten via the other two."""
    idx = sorted(set(p) | set(q))
    if len(idx) != 3:
        return None
    i, j, k = idx
    ij, jk, ik = (i, j), (j, k), (i, k)
    # each relation reads  m0 = m1 + m2
    for rel in (((ij, jk), (jk, ik), (ik, ij)), ((jk, ij), (ik, jk), (ij, ik))):
        if (p, q) == rel[0]:
            return [(1, rel[1]), (1, rel[2])]
        if (p, q) == rel[1]:
            return [(1, rel[0]), (-1, rel[2])]
        if (p, q) == rel[2]:
            return [(1, rel[0]), (-1, rel[1])]
    return None


def rewrite_moves(e: BracketElem) -> Iterator[BracketElem]:
    """Every element reachable from e by one relation applied at one spot of one term."""
    for word, c in sorted(e.terms.items()):
        for pos in range(len(word) - 1):
            p, q = word[pos], word[pos + 1]
            pre, post = word[:pos], word[pos + 2:]
            if p == q:
                replacement = []
            elif not set(p) & set(q):
                replacement = [(1, (q, p))]
            else:
                replacement = _three_term(p, q)
                if replacement is None:
                    continue
            new = dict(e.terms)
            del new[word]
            for s, pair in replacement:
                w2 = pre + pair + post
                new[w2] = new.get(w2, 0) + s * c
            yield BracketElem(new)


def rewrite_search(e: BracketElem, max_steps: int = 10_000) -> BracketElem | None:
    """
    Breadth-first search for a nonnegative form of e.

    Explores at most `max_steps` states; returns None when the budget runs
    out.  A result is always checked against e through the representation.
    """
    if e.is_nonnegative():
        return e
    seen = {e.key()}
    queue = deque([e])
    explored = 0
    while queue and explored < max_steps:
        cur = queue.popleft()
        explored += 1
        for nxt in rewrite_moves(cur):
            k = nxt.key()
            if k in seen:
                continue
            seen.add(k)
            if nxt.is_nonnegative():
                if not certify(e, nxt):
                    raise ArithmeticError(f"rewrite produced an inequivalent element {nxt}")
                return nxt
            queue.append(nxt)
    return None
