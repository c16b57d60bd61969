import random
from fractions import Fraction

import pytest

from polydecomp import (
    Generator,
    NotInFreeMonoidError,
    NotUnitaryError,
    UnitaryMap,
    factor_word,
    parse_poly,
    peel,
    recover_head,
    strip_head,
    word_product,
)

from helpers import rand_word


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator(0, Fraction(1))
    with pytest.raises(ValueError):
        Generator(2, Fraction(0))
    assert Generator(1, Fraction(1)).poly() == parse_poly("x + x^2")


def test_word_product_examples():
    assert word_product([Generator(1, Fraction(1))]).poly == parse_poly("x + x^2")
    two = word_product([Generator(1, Fraction(1)), Generator(2, Fraction(1))])
    assert two.poly == parse_poly("x + x^2 + x^3 + 3*x^4 + 3*x^5 + x^6")
    assert word_product([]) == UnitaryMap.identity()


def test_recover_head_examples():
    f = parse_poly("x + x^2 + x^3 + 3*x^4 + 3*x^5 + x^6")
    gen, m = recover_head(f)
    assert gen == Generator(1, Fraction(1))
    assert m == 3

    gen, m = recover_head(parse_poly("x + 5*x^4"))
    assert gen == Generator(3, Fraction(5))
    assert m == 1

    with pytest.raises(NotInFreeMonoidError, match="head"):
        recover_head(parse_poly("x + x^2 + x^5"))


def test_recover_head_input_validation():
    with pytest.raises(NotUnitaryError):
        recover_head(parse_poly("x^2 + x^4"))
    with pytest.raises(ValueError, match="degree"):
        recover_head(parse_poly("x"))


def test_strip_head_examples():
    f = parse_poly("x + x^2 + x^3 + 3*x^4 + 3*x^5 + x^6")
    assert strip_head(f, Generator(1, Fraction(1))) == parse_poly("x + x^3")

    g = Generator(2, Fraction(3))
    assert strip_head(g.poly(), g) == parse_poly("x")

    with pytest.raises(NotInFreeMonoidError, match="strip"):
        strip_head(parse_poly("x + x^2 + x^4"), Generator(1, Fraction(1)))


def test_factor_word_examples():
    word = factor_word(UnitaryMap(parse_poly("x + x^2 + x^3 + 3*x^4 + 3*x^5 + x^6")))
    assert word == [Generator(1, Fraction(1)), Generator(2, Fraction(1))]

    word = factor_word(UnitaryMap(parse_poly("x + 2*x^2 + 2*x^3 + x^4")))
    assert word == [Generator(1, Fraction(1)), Generator(1, Fraction(1))]

    with pytest.raises(NotInFreeMonoidError):
        factor_word(UnitaryMap(parse_poly("x + x^2 + x^4")))

    assert factor_word(UnitaryMap.identity()) == []


def test_word_round_trip_random():
    rng = random.Random(67)
    for _ in range(40):
        word = rand_word(rng, rng.randint(1, 5))
        assert factor_word(word_product(word)) == word


def test_distinct_words_distinct_products():
    rng = random.Random(71)
    seen = set()
    pairs = 0
    while pairs < 40:
        w1 = tuple(rand_word(rng, rng.randint(1, 3), max_n=3))
        w2 = tuple(rand_word(rng, rng.randint(1, 3), max_n=3))
        if w1 == w2 or (w1, w2) in seen:
            continue
        seen.add((w1, w2))
        pairs += 1
        assert word_product(list(w1)) != word_product(list(w2))


def test_word_products_have_two_unit_top_terms():
    rng = random.Random(73)
    for _ in range(20):
        word = rand_word(rng, rng.randint(1, 4))
        poly = word_product(word).poly
        (_, lead), (_, prelead) = poly.leading_and_preleading()
        assert lead != 0 and prelead != 0


def test_head_consistent_with_peel():
    rng = random.Random(79)
    for _ in range(20):
        word = rand_word(rng, rng.randint(2, 4), max_n=3)
        product = word_product(word)
        result = peel(product, word[0].n + 1)
        assert result.sigma.poly == word[0].poly()
