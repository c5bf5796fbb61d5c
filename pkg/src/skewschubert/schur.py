"""
Skew Schur polynomials and Littlewood-Richardson numbers.

Two independent routes to s_{λ/μ}(x1..xn): the Jacobi-Trudi determinant in
the h_k, and the sum over semistandard tableaux.  LR numbers count tableaux
whose reverse reading word is a lattice word.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .perm import Perm, sign
from .poly import Poly, const
from .schubert import h_poly

__all__ = [
    "Partition", "partition", "contains", "partitions_in_box",
    "skew_schur_jt", "skew_tableaux", "skew_schur_tableaux", "lr_numbers",
    "schur_poly", "is_grassmannian", "grassmannian_descent",
    "grassmannian_partition", "parse_partition",
]

Partition = tuple[int, ...]


def partition(parts: Sequence[int]) -> Partition:
    p = list(parts)
    if any(a < b for a, b in zip(p, p[1:])) or any(a < 0 for a in p):
        raise ValueError(f"not a partition: {tuple(parts)}")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return partition([int(t) for t in text.split(",")])


def contains(lam: Partition, mu: Partition) -> bool:
    """mu ⊆ lam as Young diagrams."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    for p in itertools.product(range(cols + 1), repeat=rows):
        if all(a >= b for a, b in zip(p, p[1:])):
            yield partition(p)


def _check_shape(lam: Partition, mu: Partition, n: int) -> None:
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")


def skew_schur_jt(lam: Sequence[int], mu: Sequence[int], n: int) -> Poly:
    """det(h_{λ_i - μ_j - i + j}) over 1 <= i, j <= n, expanded over S_n."""
    lam, mu = partition(lam), partition(mu)
    _check_shape(lam, mu, n)
    L = list(lam) + [0] * (n - len(lam))
    M = list(mu) + [0] * (n - len(mu))
    h = {}

    def entry(i: int, j: int) -> Poly:
        k = L[i] - M[j] - i + j
        if k not in h:
            h[k] = h_poly(k, n) if k > 0 else const(1 if k == 0 else 0)
        return h[k]

    total = const(0)
    for p in itertools.permutations(range(n)):
        term = const(sign(Perm(q + 1 for q in p)))
        for i in range(n):
            term = term * entry(i, p[i])
            if not term:
                break
        total = total + term
    return total


def skew_tableaux(lam: Sequence[int], mu: Sequence[int], n: int) -> Iterator[list[list[int]]]:
    """
    Semistandard fillings of λ/μ with entries 1..n, row by row.

    Row r holds the cells mu[r] .. lam[r]-1; rows weakly increase left to
    right and columns strictly increase downward.
    """
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    M = list(mu) + [0] * (len(lam) - len(mu))
    rows = [(M[r], lam[r]) for r in range(len(lam))]
    grid: list[dict[int, int]] = [dict() for _ in rows]

    def fill(r: int, c: int) -> Iterator[list[list[int]]]:
        if r == len(rows):
            yield [[grid[k][col] for col in range(a, b)] for k, (a, b) in enumerate(rows)]
            return
        a, b = rows[r]
        if c == b:
            yield from fill(r + 1, rows[r + 1][0] if r + 1 < len(rows) else 0)
            return
        lo = grid[r][c - 1] if c > a else 1
        if r > 0 and c in grid[r - 1]:
            lo = max(lo, grid[r - 1][c] + 1)
        for val in range(lo, n + 1):
            grid[r][c] = val
            yield from fill(r, c + 1)
        grid[r].pop(c, None)

    if not rows:
        yield []
        return
    yield from fill(0, rows[0][0])


def skew_schur_tableaux(lam: Sequence[int], mu: Sequence[int], n: int) -> Poly:
    lam, mu = partition(lam), partition(mu)
    _check_shape(lam, mu, n)
    terms: dict[tuple[int, ...], int] = {}
    for t in skew_tableaux(lam, mu, n):
        e = [0] * n
        for row in t:
            for val in row:
                e[val - 1] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return Poly(terms)


def _is_lattice(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for a in word:
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def lr_numbers(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """
    c^λ_{μν}: tableaux of shape λ/μ and weight ν whose reading word is a lattice word.

    The reading word runs right to left along each row, rows taken top to bottom.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    weight = list(nu)
    count = 0
    for t in skew_tableaux(lam, mu, max(len(nu), 1)):
        word = [x for row in t for x in reversed(row)]
        w = [0] * len(weight)
        for x in word:
            w[x - 1] += 1
        if w == weight and _is_lattice(word):
            count += 1
    return count


def schur_poly(lam: Sequence[int], n: int) -> Poly:
    return skew_schur_jt(lam, (), n)


def grassmannian_descent(w: Perm) -> int | None:
    """The unique descent of w, 0 for the identity, None if w has several."""
    des = [i for i in range(1, w.n) if w(i) > w(i + 1)]
    if not des:
        return 0
    return des[0] if len(des) == 1 else None


def is_grassmannian(w: Perm) -> bool:
    return grassmannian_descent(w) is not None


def grassmannian_partition(w: Perm, k: int) -> Partition:
    """λ_i = w(k+1-i) - (k+1-i), the partition of w with descent at (or before) k."""
    des = grassmannian_descent(w)
    if des is None or (des and des != k):
        raise ValueError(f"{w} is not Grassmannian with descent {k}")
    return partition([w(k + 1 - i) - (k + 1 - i) for i in range(1, k + 1)])
