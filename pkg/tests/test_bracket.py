import itertools

import pytest

from skewschubert.bracket import (
    BracketElem, CrossedTerm, bracket_skew, certify, normalize_crossed, parse_bracket,
    represent, rewrite_moves, rewrite_search,
)
from skewschubert.perm import Perm, all_perms, bruhat_lower, lower_covers, simple
from skewschubert.poly import monomials_below, parse_poly
from skewschubert.skewop import skew_op

W, V = Perm((4, 3, 1, 2)), Perm((3, 1, 2, 4))
B = BracketElem.word
STAIR5 = monomials_below((4, 3, 2, 1, 0))


def test_parse_and_print():
    e = parse_bracket("[34][23][12] - [12][34][13] - [13][23][14]")
    assert str(e) == "[34][23][12] - [12][34][13] - [13][23][14]"
    assert parse_bracket("2*[1,12][3,4]") == BracketElem({((1, 12), (3, 4)): 2})
    with pytest.raises(ValueError):
        parse_bracket("[12]x")
    with pytest.raises(ValueError):
        B((2, 1))


def test_normalize_moves_perms_right():
    sgn, word = normalize_crossed(CrossedTerm(Perm((1, 2, 3)), (simple(2, 3), (1, 2), simple(2, 3))))
    assert (sgn, word) == (1, ((1, 3),))
    sgn, word = normalize_crossed(CrossedTerm(Perm((2, 1, 3)), ((1, 2),)))
    assert (sgn, word) == (-1, ((1, 2),))
    with pytest.raises(ArithmeticError):
        normalize_crossed(CrossedTerm(Perm((1, 2, 3)), (simple(1, 3), (1, 2))))


def test_example_element():
    assert bracket_skew(W, V) == parse_bracket("[34][23][12] - [12][34][13] - [13][23][14]")


def test_example_rewrites_to_single_word():
    found = rewrite_search(bracket_skew(W, V), max_steps=10_000)
    assert found == B((1, 4), (3, 4), (2, 3))
    assert represent(found)(parse_poly("x1^3*x2^2")) == parse_poly("x1^2 + x1*x4 + x4^2")


def test_covers_give_single_generator():
    for w in all_perms(4):
        for v, pair in lower_covers(w):
            assert bracket_skew(w, v) == B(pair)


def test_representation_matches_skew_operator():
    for w in all_perms(4):
        for v in bruhat_lower(w):
            rep, op = represent(bracket_skew(w, v)), skew_op(w, v)
            assert all(rep(m) == op(m) for m in STAIR5)


def test_relations_are_sound():
    for i, j, k in itertools.combinations(range(1, 5), 3):
        ij, jk, ik = (i, j), (j, k), (i, k)
        assert certify(B(ij, jk), B(jk, ik) + B(ik, ij), 4)
        assert certify(B(jk, ij), B(ik, jk) + B(ij, ik), 4)
    assert certify(B((1, 2), (1, 2)), BracketElem(), 4)
    assert certify(B((1, 2), (3, 4)), B((3, 4), (1, 2)), 4)


def test_certify_detects_difference():
    assert not certify(B((1, 2), (2, 3)), B((2, 3), (1, 2)), 3)


def test_rewrite_moves_preserve_operator():
    e = bracket_skew(W, V)
    for nxt in rewrite_moves(e):
        assert certify(e, nxt, 4)


def test_search_budget_exhaustion_returns_none():
    e = bracket_skew(W, V)
    assert rewrite_search(e, max_steps=1) is None
