"""Dense univariate polynomial arithmetic over exact rationals.

Coefficients are :class:`fractions.Fraction` values throughout, so every
operation in the package is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


def as_rat(value: RatLike) -> Fraction:
    """Coerce ints and ``"p/q"`` strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x^i.

    The representation is canonical: trailing zero coefficients are trimmed,
    so the zero polynomial stores nothing and has degree ``None`` (degree is
    undefined for zero, never a plain integer).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()) -> None:
        items = [as_rat(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(items)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, exponent: int, coeff: RatLike = 1) -> "Poly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Poly", RatLike]) -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return Poly(out)
        scalar = as_rat(other)
        return Poly(c * scalar for c in self.coeffs)

    def __rmul__(self, other: RatLike) -> "Poly":
        return self * other

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def compose(self, other: "Poly") -> "Poly":
        """Return self(other(x)), evaluated by Horner's rule."""
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * other + Poly((c,))
        return result

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def integral(self) -> "Poly":
        """The unique antiderivative vanishing at zero."""
        out = [Fraction(0)]
        out.extend(c / (i + 1) for i, c in enumerate(self.coeffs))
        return Poly(out)

    def leading_and_preleading(self) -> tuple[tuple[int, Fraction], tuple[int, Fraction]]:
        """The two highest-degree nonzero monomials as (exponent, coefficient).

        Raises ``ValueError`` when the polynomial has fewer than two nonzero
        terms.
        """
        found: list[tuple[int, Fraction]] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                found.append((i, self.coeffs[i]))
                if len(found) == 2:
                    return found[0], found[1]
        raise ValueError("no pre-leading term")


def format_poly(p: Poly) -> str:
    """Canonical text form: ascending powers, explicit signs, reduced fractions.

    The output re-parses to the same polynomial.
    """
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            xpart = "x" if i == 1 else f"x^{i}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
