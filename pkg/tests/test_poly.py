import pytest
from hypothesis import given

from conftest import perms, polys
from skewschubert.perm import Perm, compose
from skewschubert.poly import (
    Poly, act, const, eta, monomial, monomials_below, parse_poly, var, x_delta,
)


def test_arithmetic_and_normalization():
    x1, x2 = var(1), var(2)
    assert (x1 + x2) ** 2 == x1 ** 2 + 2 * x1 * x2 + x2 ** 2
    assert x1 - x1 == 0
    assert not Poly({(1, 0, 0): 0})
    assert Poly({(1, 0, 0): 3}) == Poly({(1,): 3})
    assert x_delta(3) == monomial((2, 1))


def test_render():
    f = var(1) ** 2 + var(1) * var(4) + var(4) ** 2
    assert str(f) == "x1^2 + x1*x4 + x4^2"
    assert str(const(0)) == "0"
    assert str(-2 * var(3) + 1) == "-2*x3 + 1"


def test_action_example():
    f = var(1) ** 2 * var(2)
    assert act(Perm((3, 1, 2)), f) == var(3) ** 2 * var(1)


def test_eta_and_degree():
    f = parse_poly("x1^2*x2 + 3*x3^3 + 5")
    assert eta(f) == 5
    assert f.degree() == 3
    assert not f.is_homogeneous()
    assert parse_poly("x1*x2 - x3^2").is_homogeneous()


def test_monomials_below():
    assert len(monomials_below((2, 1, 0))) == 6


@pytest.mark.parametrize("bad", ["x1 +", "y1", "x1^x2", "x1/2", "2.5*x1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


@given(polys(4, 4, 6))
def test_text_roundtrip(f):
    assert parse_poly(str(f)) == f


@given(polys(4, 4, 6))
def test_json_roundtrip(f):
    assert Poly.from_json(f.to_json()) == f


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f


@given(perms(3), perms(3), polys(), polys())
def test_action_is_left_and_multiplicative(u, w, f, g):
    assert act(u, act(w, f)) == act(compose(u, w), f)
    assert act(w, f * g) == act(w, f) * act(w, g)


def test_big_integers_do_not_wrap():
    f = (var(1) + var(2)) ** 40
    assert f.coeff((20, 20)) == 137846528820
    assert ((f * (2 ** 70)).coeff((20, 20))) == 137846528820 * 2 ** 70
