"""The monoid of unitary polynomial maps under composition.

A unitary map sends x to x + c2*x^2 + ... + cd*x^d with cd != 0.  These maps
form a monoid: the product of two of them is again unitary and degrees
multiply.  The product convention is pinned package-wide: the *left* factor
is the *inner* polynomial, i.e. ``(sigma * tau).poly == tau.poly(sigma.poly)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from polydecomp.errors import NotUnitaryError
from polydecomp.multiindex import iter_simplex, multinomial, norm, power_product, weight
from polydecomp.polynomials import Poly, as_rat


class UnitaryMap:
    """A polynomial map x -> x + c2*x^2 + ... + cd*x^d (cd != 0, d >= 1)."""

    __slots__ = ("poly",)

    def __init__(self, poly: Poly) -> None:
        if poly.is_zero():
            raise NotUnitaryError("not unitary: zero polynomial")
        if poly.coeff(0) != 0:
            raise NotUnitaryError("not unitary: constant term must be 0")
        if poly.coeff(1) != 1:
            raise NotUnitaryError("not unitary: linear coefficient must be 1")
        self.poly = poly

    @classmethod
    def identity(cls) -> "UnitaryMap":
        return cls(Poly.x())

    @property
    def degree(self) -> int:
        d = self.poly.degree
        assert d is not None
        return d

    @property
    def is_identity(self) -> bool:
        return self.degree == 1

    def __mul__(self, other: "UnitaryMap") -> "UnitaryMap":
        """Monoid product; the left factor acts as the inner polynomial."""
        if not isinstance(other, UnitaryMap):
            return NotImplemented
        return UnitaryMap(other.poly.compose(self.poly))

    def __pow__(self, exponent: int) -> "UnitaryMap":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = UnitaryMap.identity()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitaryMap):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __repr__(self) -> str:
        return f"UnitaryMap({self.poly!s})"

    def __str__(self) -> str:
        return str(self.poly)

    def level(self) -> int | None:
        """The largest n such that every nonlinear term sits at an exponent
        congruent to 1 mod n; ``None`` (unbounded) for the identity."""
        offsets = [i - 1 for i, c in enumerate(self.poly.coeffs) if i >= 2 and c != 0]
        if not offsets:
            return None
        return math.gcd(*offsets)

    def in_level(self, n: int) -> bool:
        """Whether self - x is supported on exponents 1 + n*i only."""
        if n < 1:
            raise ValueError("level must be positive")
        g = self.level()
        return g is None or g % n == 0

    def ratio_form(self) -> "RatioForm":
        """Leading-coefficient normalization of a non-identity map.

        For degree n+1 with coefficients c_k of x^k this is lam = c_{n+1}
        and a_i = c_{n+1-i} / c_{n+1} for i = 1..n-1.
        """
        d = self.degree
        if d < 2:
            raise ValueError("identity has no ratio form")
        n = d - 1
        lam = self.poly.coeff(d)
        a = tuple(self.poly.coeff(n + 1 - i) / lam for i in range(1, n))
        return RatioForm(n=n, lam=lam, a=a)


@dataclass(frozen=True)
class RatioForm:
    """Normalized coefficient data (lam, a_1..a_{n-1}) of a degree-(n+1) map."""

    n: int
    lam: Fraction
    a: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_rat(self.lam))
        object.__setattr__(self, "a", tuple(as_rat(v) for v in self.a))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.lam == 0:
            raise ValueError("leading ratio must be nonzero")
        if len(self.a) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} tail entries, got {len(self.a)}")

    def to_poly(self) -> Poly:
        coeffs = [Fraction(0)] * (self.n + 2)
        coeffs[1] = Fraction(1)
        coeffs[self.n + 1] = self.lam
        for i in range(1, self.n):
            coeffs[self.n + 1 - i] = self.lam * self.a[i - 1]
        return Poly(coeffs)

    def to_map(self) -> UnitaryMap:
        return UnitaryMap(self.to_poly())

    def power_image(self, m: int) -> Poly:
        """The image of x^m under the map, expanded term by term.

        Exponents land at m + i*n - weight(alpha); the result always equals
        composing x^m with the map's polynomial, which tests use as an oracle.
        """
        if m < 1:
            raise ValueError("m must be positive")
        n, lam, a = self.n, self.lam, self.a
        acc: dict[int, Fraction] = {m: Fraction(1)}
        for i in range(1, m + 1):
            base = math.comb(m, i) * lam**i
            acc[m + i * n] = acc.get(m + i * n, Fraction(0)) + base
            for alpha in iter_simplex(n - 1, i):
                if norm(alpha) == 0:
                    continue
                exponent = m - weight(alpha) + i * n
                term = base * multinomial(i, alpha) * power_product(a, alpha)
                acc[exponent] = acc.get(exponent, Fraction(0)) + term
        coeffs = [Fraction(0)] * (max(acc) + 1)
        for exponent, value in acc.items():
            coeffs[exponent] = value
        return Poly(coeffs)
