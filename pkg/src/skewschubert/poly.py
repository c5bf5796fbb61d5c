"""
Sparse polynomials in x1, x2, ... with exact integer coefficients.

Terms are stored as ``{exponents: coeff}`` where ``exponents`` is a tuple with
trailing zeros trimmed.  Coefficients are Python integers, so arithmetic never
wraps around.
"""

from __future__ import annotations

import ast
import itertools
from typing import Iterable, Mapping

from .perm import Perm

__all__ = [
    "Mono", "Poly", "add", "mul", "scale", "act", "eta", "var", "const",
    "monomial", "parse_poly", "monomials_below", "x_delta",
]

Mono = tuple[int, ...]


def _trim(e: Iterable[int]) -> Mono:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_mono(a: Mono, b: Mono) -> Mono:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in itertools.zip_longest(a, b, fillvalue=0))


class Poly:
    """An immutable polynomial; ``terms`` maps exponent tuples to nonzero ints."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Mono, int] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError(f"coefficient must be an int, got {c!r}")
                if c:
                    m = _trim(e)
                    clean[m] = clean.get(m, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Mono, int]) -> Poly:
        # caller guarantees trimmed keys and nonzero values
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return scale(self, other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _add_mono(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = const(1)
        for _ in range(k):
            result = result * self
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection -------------------------------------------------------

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def nvars(self) -> int:
        """Index of the highest variable that occurs."""
        return max((len(m) for m in self.terms), default=0)

    def coeff(self, exponents: Iterable[int]) -> int:
        return self.terms.get(_trim(exponents), 0)

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        """Terms in graded lex order, x1 > x2 > ...; largest first."""
        width = self.nvars()
        def key(item):
            m = item[0]
            return (-sum(m), tuple(-e for e in m + (0,) * (width - len(m))))
        return sorted(self.terms.items(), key=key)

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            factors = [f"x{k}" if e == 1 else f"x{k}^{e}" for k, e in enumerate(m, 1) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"coeff": c, "exp": list(m)} for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> Poly:
        return cls({tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]})


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return const(x)
    return NotImplemented


def var(i: int) -> Poly:
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return Poly._raw({(0,) * (i - 1) + (1,): 1})


def const(c: int) -> Poly:
    return Poly._raw({(): c} if c else {})


def monomial(exponents: Iterable[int], c: int = 1) -> Poly:
    return Poly({tuple(exponents): c})


def x_delta(n: int) -> Poly:
    """x1^(n-1) * x2^(n-2) * ... * x_{n-1}."""
    return monomial(range(n - 1, -1, -1))


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def scale(f: Poly, c: int) -> Poly:
    if not c:
        return const(0)
    return Poly._raw({m: c * v for m, v in f.terms.items()})


def act(w: Perm, f: Poly) -> Poly:
    """Substitute x_i -> x_{w(i)}."""
    if f.nvars() > w.n:
        raise ValueError(f"S_{w.n} cannot act on a polynomial in {f.nvars()} variables")
    im = w.images
    out = {}
    for m, c in f.terms.items():
        e = [0] * w.n
        for i, a in enumerate(m):
            e[im[i] - 1] = a
        out[_trim(e)] = c
    return Poly._raw(out)


def eta(f: Poly) -> int:
    """The constant term, i.e. f evaluated at x = 0."""
    return f.terms.get((), 0)


def monomials_below(bound: Iterable[int]) -> list[Poly]:
    """All monomials x^a with a <= bound componentwise."""
    bound = tuple(bound)
    return [monomial(e) for e in itertools.product(*(range(b + 1) for b in bound))]


_BINOPS = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b, ast.Mult: lambda a, b: a * b}


def parse_poly(text: str) -> Poly:
    """
    Parse expressions like ``"x1^3*x2^2 - 2*x3 + (x1+x2)^2"``.

    Accepts +, -, *, ^ (or **), integer literals, parentheses and variables x1, x2, ...
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc

    def walk(node) -> Poly:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
                return walk(node.left) ** exp.value
            op = _BINOPS.get(type(node.op))
            if op is None:
                raise ValueError(f"unsupported operator in {text!r}")
            return op(walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp):
            if isinstance(node.op, ast.USub):
                return -walk(node.operand)
            if isinstance(node.op, ast.UAdd):
                return walk(node.operand)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return const(node.value)
        if isinstance(node, ast.Name) and node.id[:1] == "x" and node.id[1:].isdigit():
            return var(int(node.id[1:]))
        raise ValueError(f"unsupported syntax in {text!r}")

    return walk(tree)

