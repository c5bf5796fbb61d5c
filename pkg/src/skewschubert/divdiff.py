"""
Divided difference operators and their isobaric variants.

In a written operator product the rightmost factor is applied first, so
``ddiff_word(f, (a1, ..., ap))`` means ``∂_{a1}(...(∂_{ap} f))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .perm import Perm, canonical_reduced_word
from .poly import Mono, Poly, act, var

__all__ = [
    "ddiff_xy", "ddiff", "ddiff_word", "ddiff_w", "swap", "isobaric_pi",
    "isobaric_pi_w", "Step", "OpWord", "apply_opword",
    "SWAP", "NABLA", "NABLA_PAIR", "ACT", "PI",
]


def _swap_mono(m: Mono, i: int, j: int) -> Mono:
    width = max(len(m), i, j)
    e = list(m) + [0] * (width - len(m))
    e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def ddiff_xy(f: Poly, i: int, j: int) -> Poly:
    """(f - t_ij f) / (x_i - x_j), computed monomial by monomial."""
    if i == j:
        raise ValueError("ddiff_xy needs two distinct variables")
    if i < 1 or j < 1:
        raise ValueError(f"variable indices must be >= 1, got ({i},{j})")
    sgn = 1
    if i > j:
        i, j, sgn = j, i, -1
    out: dict[Mono, int] = {}
    width = j
    for m, c in f.terms.items():
        e = list(m) + [0] * (width - len(m))
        a, b = e[i - 1], e[j - 1]
        if a == b:
            continue
        if a < b:
            a, b, c = b, a, -c
        c *= sgn
        # x_i^a x_j^b - x_i^b x_j^a = (x_i x_j)^b (x_i^d - x_j^d)(...), d = a - b
        for k in range(a - b):
            e[i - 1] = b + k
            e[j - 1] = a - 1 - k
            t = list(e)
            while t and t[-1] == 0:
                t.pop()
            key = tuple(t)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
    return Poly._raw(out)


def ddiff(f: Poly, i: int) -> Poly:
    """∂_i = ∂_{x_i, x_{i+1}}."""
    return ddiff_xy(f, i, i + 1)


def swap(f: Poly, i: int, j: int) -> Poly:
    """Interchange x_i and x_j."""
    return Poly._raw({_swap_mono(m, i, j): c for m, c in f.terms.items()})


def ddiff_word(f: Poly, letters: Sequence[int]) -> Poly:
    for a in reversed(letters):
        if not f:
            break
        f = ddiff(f, a)
    return f


def ddiff_w(f: Poly, w: Perm) -> Poly:
    return ddiff_word(f, canonical_reduced_word(w))


def isobaric_pi(f: Poly, i: int) -> Poly:
    """π_i f = ∂_i(x_i f)."""
    return ddiff(var(i) * f, i)


def isobaric_pi_w(f: Poly, w: Perm) -> Poly:
    for a in reversed(canonical_reduced_word(w)):
        f = isobaric_pi(f, a)
    return f


# Atomic steps of an OpWord.  ACT carries a Perm, NABLA_PAIR a pair i < j,
# the others a single index.
SWAP = "swap"
NABLA = "nabla"
NABLA_PAIR = "nabla_pair"
ACT = "act"
PI = "pi"

Step = Union[tuple[str, int], tuple[str, int, int], tuple[str, Perm]]


@dataclass(frozen=True)
class OpWord:
    """A signed product of atomic steps; ``steps[-1]`` is applied first."""

    steps: tuple[Step, ...]
    sign: int = 1

    def __post_init__(self):
        for st in self.steps:
            if st[0] == NABLA_PAIR and not st[1] < st[2]:
                raise ValueError(f"nabla_pair needs i < j, got {st}")
            if st[0] not in (SWAP, NABLA, NABLA_PAIR, ACT, PI):
                raise ValueError(f"unknown step {st!r}")

    def nabla_count(self) -> int:
        return sum(1 for st in self.steps if st[0] in (NABLA, NABLA_PAIR))

    def __call__(self, f: Poly) -> Poly:
        return apply_opword(self, f)

    def __str__(self) -> str:
        parts = []
        for st in self.steps:
            kind = st[0]
            if kind == SWAP:
                parts.append(f"s{st[1]}")
            elif kind == NABLA:
                parts.append(f"∂{st[1]}")
            elif kind == NABLA_PAIR:
                parts.append(f"∂{st[1]}{st[2]}")
            elif kind == PI:
                parts.append(f"π{st[1]}")
            else:
                parts.append(f"[{st[1]}]")
        body = "·".join(parts) if parts else "1"
        return body if self.sign > 0 else f"-{body}"


def apply_step(step: Step, f: Poly) -> Poly:
    kind = step[0]
    if kind == NABLA:
        return ddiff(f, step[1])
    if kind == SWAP:
        return swap(f, step[1], step[1] + 1)
    if kind == NABLA_PAIR:
        return ddiff_xy(f, step[1], step[2])
    if kind == PI:
        return isobaric_pi(f, step[1])
    w = step[1]
    if f.nvars() > w.n:
        raise ValueError(f"S_{w.n} cannot act on {f}")
    return act(w, f)


def apply_opword(op: OpWord, f: Poly) -> Poly:
    for st in reversed(op.steps):
        if not f:
            return f
        f = apply_step(st, f)
    return f if op.sign == 1 else f * op.sign
