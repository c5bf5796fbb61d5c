import itertools

import pytest

from skewschubert.perm import Perm, all_perms
from skewschubert.poly import parse_poly
from skewschubert.schubert import constants_by_product, schubert_poly
from skewschubert.schur import (
    contains, grassmannian_descent, grassmannian_partition, is_grassmannian, lr_numbers,
    parse_partition, partition, partitions_in_box, schur_poly, skew_schur_jt,
    skew_schur_tableaux, skew_tableaux,
)


def test_examples():
    assert skew_schur_jt((2, 1), (1,), 2) == parse_poly("(x1+x2)^2")
    assert skew_schur_tableaux((2, 1), (1,), 2) == parse_poly("x1^2 + 2*x1*x2 + x2^2")
    assert skew_schur_tableaux((1, 1), (), 2) == parse_poly("x1*x2")
    assert len(list(skew_tableaux((2, 1), (1,), 2))) == 4


def test_lr_examples():
    assert lr_numbers((2, 1), (1,), (1, 1)) == 1
    assert lr_numbers((2, 1), (1,), (2,)) == 1
    assert lr_numbers((2, 2), (1,), (2, 1)) == 1
    assert lr_numbers((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_numbers((2,), (1,), (1, 1)) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_determinant_equals_tableaux(n):
    box = list(partitions_in_box(n, 3))
    for lam, mu in itertools.product(box, repeat=2):
        if contains(lam, mu):
            assert skew_schur_jt(lam, mu, n) == skew_schur_tableaux(lam, mu, n)


def test_partition_helpers():
    assert partition((2, 1, 0, 0)) == (2, 1)
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("") == ()
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        skew_schur_jt((1,), (2,), 2)


def test_grassmannian_schubert_is_schur():
    for k in (1, 2, 3):
        for w in all_perms(4):
            if grassmannian_descent(w) == k:
                lam = grassmannian_partition(w, k)
                assert schubert_poly(w) == schur_poly(lam, k)
    assert not is_grassmannian(Perm((3, 2, 1)))


def test_grassmannian_constants_are_lr():
    for k in (1, 2, 3):
        grass = [w for w in all_perms(4) if grassmannian_descent(w) in (0, k)]
        for u, v in itertools.product(grass, repeat=2):
            prod = constants_by_product(u, v, 4)
            for w in grass:
                lr = lr_numbers(grassmannian_partition(w, k), grassmannian_partition(u, k),
                                grassmannian_partition(v, k))
                assert prod.get(w, 0) == lr
