from fractions import Fraction

import pytest

from polydecomp import enumerate_weighted, multinomial, norm, power_product, weight

from helpers import brute_weighted


def test_norm_and_weight():
    assert norm((1, 0, 2)) == 3
    assert weight((1, 0, 2)) == 1 + 6
    assert norm(()) == 0
    assert weight(()) == 0


def test_multinomial_examples():
    assert multinomial(2, (2,)) == 1
    assert multinomial(3, (1, 1)) == 6
    assert multinomial(5, ()) == 1
    assert multinomial(4, (2, 1)) == 12


def test_multinomial_norm_too_large():
    with pytest.raises(ValueError):
        multinomial(2, (2, 1))


def test_enumerate_weighted_examples():
    assert enumerate_weighted(1, 2, 3) == [(2,)]
    assert enumerate_weighted(2, 2, 2) == [(2, 0), (0, 1)]
    assert enumerate_weighted(0, 1, 5) == []
    assert enumerate_weighted(0, 0, 5) == [()]


def test_enumerate_weighted_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_weighted(-1, 2, 2)


def test_enumerate_weighted_against_brute_force():
    for k in range(1, 5):
        for target in range(0, 9):
            for max_norm in range(0, 5):
                produced = enumerate_weighted(k, target, max_norm)
                assert produced == brute_weighted(k, target, max_norm)
                assert len(set(produced)) == len(produced)


def test_power_product_zero_to_the_zero():
    values = (Fraction(0), Fraction(3))
    assert power_product(values, (0, 2)) == 9
    assert power_product(values, (0, 0)) == 1
    assert power_product(values, (1, 1)) == 0
