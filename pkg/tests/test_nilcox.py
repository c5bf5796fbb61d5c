import itertools

import pytest

from skewschubert.nilcox import (
    NilCoxElem, a_factor, e_step, generator, one, path_sum_constants,
    schubert_expression, schubert_expression_sum, theorem1_scan,
)
from skewschubert.perm import Perm, all_perms, identity, simple
from skewschubert.poly import const, parse_poly, var
from skewschubert.schubert import constants_by_product


def P(s):
    return Perm(int(c) for c in s)


def test_relations():
    e1, e2, e3 = (generator(i, 3) for i in (1, 2, 3))
    assert e1 * e1 == NilCoxElem(3)
    assert e1 * e3 == e3 * e1
    assert e1 * e2 * e1 == e2 * e1 * e2
    assert (one(3) * e2) == e2


def test_a_factor_expansion():
    e1, e2 = generator(1, 2), generator(2, 2)
    x1 = var(1)
    expected = one(2) + e2.map_coeffs(lambda c: c * x1) + e1.map_coeffs(lambda c: c * x1) \
        + (e2 * e1).map_coeffs(lambda c: c * x1 * x1)
    assert a_factor(1, 1, 2) == expected


def test_schubert_expression_n2():
    expr = schubert_expression(2)
    want = {"123": "1", "213": "x1", "132": "x1+x2", "312": "x1^2", "231": "x1*x2", "321": "x1^2*x2"}
    assert expr == NilCoxElem(2, {P(k): parse_poly(v) for k, v in want.items()})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_factorization(n):
    assert schubert_expression(n) == schubert_expression_sum(n)


def test_commutation_and_recursion():
    x, y = var(1), var(2)
    for i in (1, 2, 3):
        assert a_factor(i, x, 3) * a_factor(i, y, 3) == a_factor(i, y, 3) * a_factor(i, x, 3)
    for i in (1, 2):
        assert a_factor(i, x, 3) == a_factor(i + 1, x, 3) * (one(3) + generator(i, 3, x))
    for a, b in itertools.product(range(4), repeat=2):
        ca, cb = const(a), const(b)
        assert a_factor(1, ca, 3) * a_factor(1, cb, 3) == a_factor(1, cb, 3) * a_factor(1, ca, 3)


def test_pair_ddiff_positivity_rank3():
    assert theorem1_scan(3) == []


def test_e_step_rule():
    n = 3
    assert str(e_step(1, 1, P("312"), P("312"), n)) == "1"
    # 312 -> 213 swaps positions 1 and 3
    assert str(e_step(1, 1, P("312"), P("213"), n)) == "+e2"
    assert str(e_step(1, 3, P("312"), P("213"), n)) == "-e2"
    assert str(e_step(1, 2, P("312"), P("213"), n)) == "0"
    with pytest.raises(ValueError):
        e_step(1, 1, P("321"), identity(3), n)


def test_path_sum_example():
    got = path_sum_constants(P("312"), P("213"), 3)
    assert got == NilCoxElem(2, {P("213"): 1, P("132"): 1})


def test_path_sums_match_products_s3():
    perms = all_perms(3)
    for w, u in itertools.product(perms, repeat=2):
        ps = path_sum_constants(w, u, 3)
        for v in perms:
            assert ps[v] == const(constants_by_product(u, v, 3).get(w, 0))


def test_rank_mismatch():
    with pytest.raises(ValueError):
        generator(1, 2) * generator(1, 3)
    with pytest.raises(ValueError):
        NilCoxElem(2, {simple(1, 4): 1})
