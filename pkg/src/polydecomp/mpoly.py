"""Sparse multivariate polynomials over exact rationals.

Terms map exponent tuples to nonzero coefficients; the variable count is
fixed per instance.  Instances are treated as immutable: every operation
returns a fresh polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from polydecomp.errors import InternalInvariantError
from polydecomp.polynomials import RatLike, as_rat

Exponents = tuple[int, ...]
TermsLike = Union[Mapping[Exponents, RatLike], Iterable[tuple[Exponents, RatLike]]]


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: TermsLike = ()) -> None:
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            value = as_rat(coeff)
            if value == 0:
                continue
            key = tuple(exps)
            if len(key) != nvars or any(e < 0 for e in key):
                raise ValueError(f"bad exponent tuple {key} for {nvars} variables")
            total = clean.get(key, Fraction(0)) + value
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: RatLike) -> "MPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(exps) for exps in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self.terms!r})"

    def __str__(self) -> str:
        return format_mpoly(self, [f"x{i + 1}" for i in range(self.nvars)])

    def _require_same_vars(self, other: "MPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            return NotImplemented
        self._require_same_vars(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = out.get(exps, Fraction(0)) + coeff
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        result = MPoly(self.nvars)
        result.terms = out
        return result

    def __sub__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            return NotImplemented
        self._require_same_vars(other)
        if not self.terms or not other.terms:
            return MPoly(self.nvars)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                total = out.get(key, Fraction(0)) + c1 * c2
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        result = MPoly(self.nvars)
        result.terms = out
        return result

    def scale(self, value: RatLike) -> "MPoly":
        factor = as_rat(value)
        if factor == 0:
            return MPoly(self.nvars)
        return MPoly(self.nvars, {e: c * factor for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = MPoly.const(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def partial(self, index: int) -> "MPoly":
        """Partial derivative with respect to variable ``index`` (0-based)."""
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range")
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1 :]
            out[key] = out.get(key, Fraction(0)) + coeff * e
        result = MPoly(self.nvars)
        result.terms = {k: v for k, v in out.items() if v}
        return result

    def eval(self, point: Sequence[RatLike]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        values = [as_rat(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v**e
            total += term
        return total


PowerMemo = dict[tuple[int, int], MPoly]


def substitute(p: MPoly, images: Sequence[MPoly], memo: PowerMemo | None = None) -> MPoly:
    """Apply the algebra map x_i -> images[i] to p.

    All images must share a variable count, which becomes the result's.
    ``memo`` caches powers of the images across calls.
    """
    if len(images) != p.nvars:
        raise ValueError(f"expected {p.nvars} images, got {len(images)}")
    if p.nvars == 0:
        return MPoly(0, dict(p.terms))
    target = images[0].nvars
    for img in images:
        if img.nvars != target:
            raise ValueError("images must share a variable count")
    if memo is None:
        memo = {}

    def image_power(index: int, exponent: int) -> MPoly:
        key = (index, exponent)
        cached = memo.get(key)
        if cached is None:
            cached = images[index] ** exponent
            memo[key] = cached
        return cached

    total = MPoly.zero(target)
    for exps, coeff in p.terms.items():
        term = MPoly.const(target, coeff)
        for index, e in enumerate(exps):
            if e:
                term = term * image_power(index, e)
        total = total + term
    return total


def _exact_div(num: MPoly, den: MPoly) -> MPoly:
    """Divide num by den, which must divide exactly (fraction-free pivots do)."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return MPoly(num.nvars)
    if den.is_constant():
        return num.scale(Fraction(1) / den.constant_value())
    den_lead = max(den.terms)
    den_coeff = den.terms[den_lead]
    remainder = num
    quotient: dict[Exponents, Fraction] = {}
    while not remainder.is_zero():
        lead = max(remainder.terms)
        exps = tuple(a - b for a, b in zip(lead, den_lead))
        if any(e < 0 for e in exps):
            raise InternalInvariantError("inexact polynomial division in elimination")
        coeff = remainder.terms[lead] / den_coeff
        quotient[exps] = coeff
        remainder = remainder - MPoly(num.nvars, {exps: coeff}) * den
    return MPoly(num.nvars, quotient)


def det(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    """Determinant of a square MPoly matrix by fraction-free elimination."""
    k = len(rows)
    if k == 0:
        raise ValueError("empty matrix")
    nvars = rows[0][0].nvars
    m = [list(row) for row in rows]
    if any(len(row) != k for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    previous = MPoly.const(nvars, 1)
    for r in range(k - 1):
        if m[r][r].is_zero():
            for below in range(r + 1, k):
                if not m[below][r].is_zero():
                    m[r], m[below] = m[below], m[r]
                    sign = -sign
                    break
            else:
                return MPoly.zero(nvars)
        for i in range(r + 1, k):
            for j in range(r + 1, k):
                m[i][j] = _exact_div(m[r][r] * m[i][j] - m[i][r] * m[r][j], previous)
            m[i][r] = MPoly.zero(nvars)
        previous = m[r][r]
    result = m[k - 1][k - 1]
    return result if sign > 0 else -result


def format_mpoly(p: MPoly, names: Sequence[str]) -> str:
    """Readable text form, terms ordered by total degree then exponents."""
    if p.is_zero():
        return "0"
    if len(names) != p.nvars:
        raise ValueError("one name per variable required")
    pieces: list[str] = []
    for exps in sorted(p.terms, key=lambda e: (sum(e), e)):
        coeff = p.terms[exps]
        mag = -coeff if coeff < 0 else coeff
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag), *factors])
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)
