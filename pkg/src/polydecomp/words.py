"""Factorization over the free monoid of single-term generators.

The maps x -> x + lam*x^(n+1) (n >= 1, lam != 0) generate a free submonoid:
every product of them determines its generator word uniquely.  The innermost
generator can be read off the leading and pre-leading terms, and dividing it
out is a change of basis into powers of the generator polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from polydecomp.errors import NotInFreeMonoidError, NotUnitaryError
from polydecomp.polynomials import Poly, as_rat
from polydecomp.unitary import UnitaryMap


@dataclass(frozen=True)
class Generator:
    """The map x -> x + lam*x^(n+1); degree n+1 >= 2."""

    n: int
    lam: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_rat(self.lam))
        if self.n < 1:
            raise ValueError("generator exponent offset must be at least 1")
        if self.lam == 0:
            raise ValueError("generator scale must be nonzero")

    def poly(self) -> Poly:
        return Poly.x() + Poly.monomial(self.n + 1, self.lam)

    def to_map(self) -> UnitaryMap:
        return UnitaryMap(self.poly())


def word_product(word: Sequence[Generator]) -> UnitaryMap:
    """Left-to-right monoid product; the leftmost generator acts innermost.

    The empty word gives the identity.
    """
    out = UnitaryMap.identity()
    for gen in word:
        out = out * gen.to_map()
    return out


def recover_head(f: Poly) -> tuple[Generator, int]:
    """Read the innermost generator candidate off the top two terms of f.

    With leading term (d1, c1) and pre-leading term (d2, c2):
    n = d1 - d2, m = d1/(n+1) and lam = m*c1/c2.  Returns the generator and
    the cofactor degree m.  Raises ``NotInFreeMonoidError`` when n+1 does not
    divide the degree; malformed (non-unitary) input raises
    ``NotUnitaryError`` instead.
    """
    mapping = UnitaryMap(f)
    if mapping.degree < 2:
        raise ValueError("degree must be at least 2 to have a head generator")
    (d1, c1), (d2, c2) = f.leading_and_preleading()
    n = d1 - d2
    if d1 % (n + 1):
        raise NotInFreeMonoidError(
            "head",
            f"not in free monoid (head): degree {d1} is not a multiple of {n + 1}",
        )
    m = d1 // (n + 1)
    return Generator(n=n, lam=m * c1 / c2), m


def strip_head(f: Poly, gen: Generator) -> Poly:
    """The unique h with h(gen.poly()) == f, if it exists.

    Extracts h's coefficients from the top down: the x^(i*(n+1)) coefficient
    of the running remainder is forced to be h_i * lam^i.  A nonzero final
    remainder, or a non-unitary quotient, means f is not in the free monoid.
    """
    span = gen.n + 1
    d = f.degree
    if d is None or d % span:
        raise ValueError(f"degree must be a multiple of {span}")
    quotient_degree = d // span
    g = gen.poly()
    powers = [Poly.one()]
    for _ in range(quotient_degree):
        powers.append(powers[-1] * g)
    remainder = f
    coeffs = [Fraction(0)] * (quotient_degree + 1)
    for i in range(quotient_degree, -1, -1):
        c = remainder.coeff(i * span) / gen.lam**i
        if c:
            coeffs[i] = c
            remainder = remainder - c * powers[i]
    if not remainder.is_zero():
        raise NotInFreeMonoidError(
            "strip", "not in free monoid (strip): nonzero remainder"
        )
    h = Poly(coeffs)
    try:
        UnitaryMap(h)
    except NotUnitaryError as exc:
        raise NotInFreeMonoidError(
            "strip", f"not in free monoid (strip): quotient {exc}"
        ) from exc
    return h


def factor_word(f: UnitaryMap) -> list[Generator]:
    """The unique generator word multiplying to f; [] for the identity.

    Raises ``NotInFreeMonoidError`` when f is not a product of generators.
    The head is forced by the top two terms at every step, so no backtracking
    is ever needed.
    """
    word: list[Generator] = []
    current = f.poly
    while (current.degree or 0) > 1:
        gen, _ = recover_head(current)
        word.append(gen)
        current = strip_head(current, gen)
    return word
