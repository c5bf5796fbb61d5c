"""
Permutations of {1..n} in one-line notation.

Products are function composition, ``(u*v)(i) = u(v(i))``.  A word
``(a_1, ..., a_p)`` stands for ``s_{a_1} * ... * s_{a_p}``, so the
rightmost reflection acts first:

>>> from_word((2, 1), 3)
Perm(3, 1, 2)
>>> compose(simple(2, 3), simple(1, 3))
Perm(3, 1, 2)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Perm", "Word", "EQUAL",
    "identity", "simple", "transposition", "compose", "inverse", "length",
    "sign", "code", "from_code", "from_word", "reduced_words",
    "canonical_reduced_word", "is_reduced", "bruhat_leq", "bruhat_leq_tableau",
    "bruhat_lower", "lower_covers", "cover_transposition", "longest_element",
    "embed", "trim", "all_perms", "parse_perm", "format_perm",
]

Word = tuple[int, ...]

# returned by `cover_transposition` when w == v
EQUAL = "equal"


class Perm:
    """A permutation of {1..n}, stored as the tuple (w(1), ..., w(n))."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._hash = hash(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Perm{self.images}" if self.n != 1 else f"Perm({self.images[0]})"

    def __str__(self) -> str:
        return format_perm(self)

    def __reduce__(self):
        return (Perm, (self.images,))


def identity(n: int) -> Perm:
    return Perm(range(1, n + 1))


def simple(i: int, n: int) -> Perm:
    """The adjacent transposition s_i = (i, i+1) in S_n."""
    return transposition(i, i + 1, n)


def transposition(a: int, b: int, n: int) -> Perm:
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ValueError(f"invalid transposition ({a},{b}) in S_{n}")
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Perm(images)


def compose(u: Perm, v: Perm) -> Perm:
    if u.n != v.n:
        raise ValueError(f"rank mismatch: S_{u.n} vs S_{v.n}")
    ui = u.images
    return Perm(ui[j - 1] for j in v.images)


def inverse(w: Perm) -> Perm:
    images = [0] * w.n
    for i, wi in enumerate(w.images, 1):
        images[wi - 1] = i
    return Perm(images)


def length(w: Perm) -> int:
    im = w.images
    return sum(1 for i, j in itertools.combinations(range(len(im)), 2) if im[i] > im[j])


def sign(w: Perm) -> int:
    return -1 if length(w) % 2 else 1


def code(w: Perm) -> tuple[int, ...]:
    """Lehmer code c_i = #{j > i : w(j) < w(i)}, one entry per position."""
    im = w.images
    return tuple(sum(1 for b in im[i + 1:] if b < a) for i, a in enumerate(im))


def from_code(c: Sequence[int], n: int | None = None) -> Perm:
    """Inverse of `code`; the result lives in the smallest S_m that fits, or S_n."""
    c = list(c)
    m = max([i + 1 + ci for i, ci in enumerate(c)] + [len(c), 1])
    if n is not None:
        if n < m:
            raise ValueError(f"code {tuple(c)} does not fit in S_{n}")
        m = n
    c += [0] * (m - len(c))
    avail = list(range(1, m + 1))
    images = []
    for ci in c:
        if ci >= len(avail):
            raise ValueError(f"invalid code {tuple(c)}")
        images.append(avail.pop(ci))
    return Perm(images)


def from_word(letters: Sequence[int], n: int) -> Perm:
    w = list(range(1, n + 1))
    # right-multiplying by s_a swaps positions a, a+1
    for a in letters:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range for S_{n}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return Perm(w)


def is_reduced(letters: Sequence[int], n: int) -> bool:
    return length(from_word(letters, n)) == len(letters)


@lru_cache(maxsize=None)
def reduced_words(w: Perm) -> frozenset[Word]:
    """All reduced words of w, found by peeling right descents."""
    im = w.images
    descents = [i for i in range(1, w.n) if im[i - 1] > im[i]]
    if not descents:
        return frozenset({()})
    out = set()
    for i in descents:
        for word in reduced_words(compose(w, simple(i, w.n))):
            out.add(word + (i,))
    return frozenset(out)


@lru_cache(maxsize=None)
def canonical_reduced_word(w: Perm) -> Word:
    """Lexicographically smallest reduced word of w."""
    word = []
    cur = list(w.images)
    pos = {v: i for i, v in enumerate(cur)}
    while True:
        # left descent i: i+1 stands before i in one-line notation
        for i in range(1, w.n):
            if pos[i + 1] < pos[i]:
                break
        else:
            return tuple(word)
        word.append(i)
        a, b = pos[i], pos[i + 1]
        cur[a], cur[b] = i + 1, i
        pos[i], pos[i + 1] = b, a


@lru_cache(maxsize=None)
def bruhat_lower(w: Perm) -> frozenset[Perm]:
    """The lower Bruhat interval [id, w], as products of reduced subwords."""
    n = w.n
    reach = {identity(n)}
    for a in canonical_reduced_word(w):
        s = simple(a, n)
        reach |= {compose(p, s) for p in reach if p.images[a - 1] < p.images[a]}
    return frozenset(reach)


def bruhat_leq(v: Perm, w: Perm) -> bool:
    if v.n != w.n:
        raise ValueError(f"rank mismatch: S_{v.n} vs S_{w.n}")
    return v in bruhat_lower(w)


def bruhat_leq_tableau(v: Perm, w: Perm) -> bool:
    """Tableau criterion: sorted prefixes of v are dominated by those of w."""
    if v.n != w.n:
        raise ValueError(f"rank mismatch: S_{v.n} vs S_{w.n}")
    for k in range(1, v.n):
        a = sorted(v.images[:k])
        b = sorted(w.images[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


@lru_cache(maxsize=None)
def lower_covers(w: Perm) -> tuple[tuple[Perm, tuple[int, int]], ...]:
    """Pairs (v, (a, b)) with w = v * t_ab and length(v) = length(w) - 1."""
    n = w.n
    lw = length(w)
    out = []
    for a, b in itertools.combinations(range(1, n + 1), 2):
        if w(a) > w(b):
            v = compose(w, transposition(a, b, n))
            if length(v) == lw - 1:
                out.append((v, (a, b)))
    return tuple(out)


def cover_transposition(w: Perm, v: Perm) -> tuple[int, int] | str | None:
    """
    (a, b) with a < b if w = v * t_ab covers v, `EQUAL` if w == v, else None.

    Right multiplication by t_ab swaps the entries in positions a and b.
    """
    if w.n != v.n:
        raise ValueError(f"rank mismatch: S_{w.n} vs S_{v.n}")
    if w == v:
        return EQUAL
    if length(w) != length(v) + 1:
        return None
    diff = [i for i in range(1, w.n + 1) if w(i) != v(i)]
    if len(diff) != 2:
        return None
    a, b = diff
    if compose(v, transposition(a, b, w.n)) != w:
        return None
    return (a, b)


def longest_element(n: int) -> Perm:
    return Perm(range(n, 0, -1))


def embed(w: Perm, m: int) -> Perm:
    if m < w.n:
        raise ValueError(f"cannot embed S_{w.n} into S_{m}")
    return Perm(w.images + tuple(range(w.n + 1, m + 1)))


def trim(w: Perm) -> Perm:
    """Drop trailing fixed points (never below rank 1)."""
    im = list(w.images)
    while len(im) > 1 and im[-1] == len(im):
        im.pop()
    return Perm(im)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """S_n sorted by length, then one-line notation."""
    perms = [Perm(p) for p in itertools.permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=lambda p: (length(p), p.images)))


def parse_perm(text: str, n: int | None = None) -> Perm:
    """
    Parse "4,3,1,2" (one-line) or "s:2,1,3,2,1" (word form).

    Word form needs a rank; without `n` the smallest fitting one is used.
    One-line input shorter than `n` is padded with fixed points.
    """
    text = text.strip()
    if text.startswith("s:"):
        body = text[2:].strip()
        letters = tuple(int(t) for t in body.split(",") if t.strip()) if body else ()
        rank = n if n is not None else (max(letters) + 1 if letters else 1)
        return from_word(letters, rank)
    if "," in text:
        images = [int(t) for t in text.split(",")]
    else:
        images = [int(ch) for ch in text]
    w = Perm(images)
    if n is not None:
        w = embed(w, n)
    return w


def format_perm(w: Perm) -> str:
    if w.n < 10:
        return "".join(map(str, w.images))
    return ",".join(map(str, w.images))
