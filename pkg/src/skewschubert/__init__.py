"""
Exact computations with divided differences, Schubert polynomials and
skew divided difference operators.

Modules: `perm` (symmetric groups, Bruhat order), `poly` (sparse integer
polynomials), `divdiff`, `schubert`, `skewop`, `nilcox`, `bracket`,
`schur`, and the `harness` package (CLI, identity suites, scans).
"""

from .perm import Perm, parse_perm
from .poly import Poly, parse_poly
from .schubert import schubert_poly
from .skewop import skew_apply, skew_op, skew_schubert

__version__ = "0.1.0"

__all__ = ["Perm", "Poly", "parse_perm", "parse_poly", "schubert_poly",
           "skew_apply", "skew_op", "skew_schubert"]
