"""Triangular polynomial automorphisms and their closed-form inverses.

The automorphism attached to a split shape (n, m) acts on k = n-1 variables
by x_j -> m*x_j + (multinomial terms in x_1..x_{j-1}); it encodes the
triangular system for the inner factor's tail coefficients.  Twisted partial
derivatives, the truncated series operators built from them, and the
resulting expansion of each x_j in the image coordinates give closed-form
expressions for those coefficients directly from coefficient ratios.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from polydecomp.errors import (
    STAGE_LAMBDA,
    InternalInvariantError,
    NoFactorError,
)
from polydecomp.mpoly import MPoly, PowerMemo, det, substitute
from polydecomp.multiindex import (
    MultiIndex,
    enumerate_weighted,
    iter_simplex,
    multinomial,
    norm,
    power_product,
)
from polydecomp.polynomials import RatLike, as_rat


class TriangularAuto:
    """The triangular substitution x_j -> m*x_j + lower-variable terms.

    ``images[j-1]`` is the image of x_j; it involves x_1..x_j only, so the
    Jacobian matrix is lower triangular with constant diagonal m and the
    Jacobian determinant is m^(n-1) exactly.

    Instances are externally immutable; internal dictionaries only memoize
    idempotent recomputations.
    """

    def __init__(self, n: int, m: int, images: tuple[MPoly, ...], jacobian_det: Fraction) -> None:
        self.n = n
        self.m = m
        self.images = images
        self.jacobian_det = jacobian_det
        self.nvars = n - 1
        self._cofactors = self._cofactor_grid()
        self._xprime_powers: dict[tuple[int, int], MPoly] = {}
        self._image_power_memo: PowerMemo = {}
        self._preimage_power_memo: PowerMemo = {}
        self._pyramids: dict[int, dict[MultiIndex, MPoly]] = {}
        self._preimages: tuple[MPoly, ...] | None = None

    def __repr__(self) -> str:
        return f"TriangularAuto(n={self.n}, m={self.m})"

    def _jacobian(self) -> list[list[MPoly]]:
        k = self.nvars
        return [[self.images[i].partial(j) for j in range(k)] for i in range(k)]

    def _cofactor_grid(self) -> list[list[MPoly]]:
        k = self.nvars
        if k == 1:
            return [[MPoly.const(1, 1)]]
        jac = self._jacobian()
        grid: list[list[MPoly]] = []
        for i in range(k):
            row: list[MPoly] = []
            for j in range(k):
                minor = [
                    [jac[r][c] for c in range(k) if c != j]
                    for r in range(k)
                    if r != i
                ]
                value = det(minor)
                row.append(-value if (i + j) % 2 else value)
            grid.append(row)
        return grid

    def apply(self, p: MPoly) -> MPoly:
        """The image of p under the substitution."""
        return substitute(p, self.images, self._image_power_memo)

    def _xprime_power(self, index0: int, exponent: int) -> MPoly:
        key = (index0, exponent)
        cached = self._xprime_powers.get(key)
        if cached is None:
            cached = self.images[index0] ** exponent
            self._xprime_powers[key] = cached
        return cached

    def _pyramid(self, j: int) -> dict[MultiIndex, MPoly]:
        """Iterated twisted derivatives of x_j over the first j variables.

        Keys are multi-indices alpha in N^j, built layer by layer; generation
        stops at the first layer whose entries all vanish (their descendants
        vanish too, since each step applies a derivation).
        """
        cached = self._pyramids.get(j)
        if cached is not None:
            return cached
        store: dict[MultiIndex, MPoly] = {}
        root: MultiIndex = (0,) * j
        store[root] = MPoly.variable(self.nvars, j - 1)
        current = [root]
        layers = 0
        while current:
            layers += 1
            if layers > j + 2:
                raise InternalInvariantError(
                    "derivative pyramid exceeded its degree bound"
                )
            next_layer: list[MultiIndex] = []
            any_nonzero = False
            for parent in current:
                parent_value = store[parent]
                first = next((t for t, e in enumerate(parent) if e), j - 1)
                for t in range(first + 1):
                    child = parent[:t] + (parent[t] + 1,) + parent[t + 1 :]
                    if parent_value.is_zero():
                        value = MPoly.zero(self.nvars)
                    else:
                        value = dprime(self, t + 1, parent_value)
                    store[child] = value
                    next_layer.append(child)
                    if not value.is_zero():
                        any_nonzero = True
            if not any_nonzero:
                break
            current = next_layer
        self._pyramids[j] = store
        return store

    def generator_preimages(self) -> tuple[MPoly, ...]:
        """Preimages of the variables, via the expansion into image coordinates.

        The coefficient of x^alpha is the full operator chain applied to the
        alpha-th twisted derivative of x_j, divided by alpha!; summing the
        surviving terms reconstructs the preimage of x_j in the original
        variables.
        """
        if self._preimages is not None:
            return self._preimages
        k = self.nvars
        out: list[MPoly] = []
        for j in range(1, k + 1):
            total = MPoly.zero(k)
            for alpha, value in self._pyramid(j).items():
                if value.is_zero():
                    continue
                factorial = 1
                for e in alpha:
                    factorial *= math.factorial(e)
                q = value.scale(Fraction(1, factorial))
                for i in range(j, 0, -1):
                    q = phi_full(self, i, q)
                    if q.is_zero():
                        break
                if q.is_zero():
                    continue
                if not q.is_constant():
                    raise InternalInvariantError(
                        "operator chain did not collapse to a constant"
                    )
                exps = alpha + (0,) * (k - j)
                total = total + MPoly(k, {exps: q.constant_value()})
            out.append(total)
        self._preimages = tuple(out)
        return self._preimages


def build_automorphism(n: int, m: int) -> TriangularAuto:
    """Construct the shape-(n, m) triangular automorphism on n-1 variables.

    Requires n >= 2 (for n = 1 there are no tail variables; callers take the
    scalar path) and m >= 2.  The Jacobian determinant is computed by
    elimination and asserted to equal m^(n-1).
    """
    if n < 2:
        raise ValueError("degenerate shape: no tail variables; use the scalar path")
    if m < 2:
        raise ValueError("outer degree m must be at least 2")
    k = n - 1
    images: list[MPoly] = []
    for j in range(1, k + 1):
        terms: dict[tuple[int, ...], Fraction] = {}
        unit = tuple(1 if t == j - 1 else 0 for t in range(k))
        terms[unit] = Fraction(m)
        for alpha in enumerate_weighted(j - 1, j, m):
            exps = alpha + (0,) * (k - (j - 1))
            coeff = Fraction(multinomial(m, alpha))
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        images.append(MPoly(k, terms))
    auto = TriangularAuto(n, m, tuple(images), Fraction(m) ** k)
    jac_det = det(auto._jacobian())
    if not jac_det.is_constant() or jac_det.constant_value() != Fraction(m) ** k:
        raise InternalInvariantError(
            f"jacobian determinant is not m^(n-1) for shape (n={n}, m={m})"
        )
    return auto


@lru_cache(maxsize=None)
def _automorphism(n: int, m: int) -> TriangularAuto:
    return build_automorphism(n, m)


def dprime(s: TriangularAuto, i: int, p: MPoly) -> MPoly:
    """Twisted partial derivative for image coordinate i (1-based).

    Equals the Jacobian determinant of s with row i replaced by the gradient
    of p, divided by the Jacobian; evaluated by expanding that determinant
    along the replaced row against cofactors computed once by fraction-free
    elimination.  Satisfies dprime(s, i, s(x_j)) == delta_ij.
    """
    k = s.nvars
    if not 1 <= i <= k:
        raise ValueError(f"derivative index {i} out of range 1..{k}")
    if p.nvars != k:
        raise ValueError("variable count mismatch")
    if p.is_zero():
        return MPoly.zero(k)
    total = MPoly.zero(k)
    row = s._cofactors[i - 1]
    for j in range(k):
        grad = p.partial(j)
        if grad.is_zero():
            continue
        total = total + row[j] * grad
    return total.scale(Fraction(1) / s.jacobian_det)


def phi_truncated(s: TriangularAuto, i: int, j: int, p: MPoly) -> MPoly:
    """Sum over k = 0..j of (-1)^k * s(x_i)^k / k! applied to the k-th twisted
    derivative of p."""
    if j < 0:
        raise ValueError("truncation order must be nonnegative")
    total = p
    current = p
    for order in range(1, j + 1):
        current = dprime(s, i, current)
        if current.is_zero():
            break
        piece = s._xprime_power(i - 1, order) * current
        total = total + piece.scale(Fraction((-1) ** order, math.factorial(order)))
    return total


def phi_full(s: TriangularAuto, i: int, p: MPoly) -> MPoly:
    """The untruncated series operator; iterates until the twisted derivative
    vanishes, which happens once its order exceeds p's degree in the image
    coordinates (at most total_degree(p) * (n-1))."""
    degree = p.total_degree() or 0
    cap = degree * s.nvars + s.n + 2
    total = p
    current = p
    order = 0
    while True:
        order += 1
        if order > cap:
            raise InternalInvariantError("series operator exceeded its iteration cap")
        current = dprime(s, i, current)
        if current.is_zero():
            return total
        piece = s._xprime_power(i - 1, order) * current
        total = total + piece.scale(Fraction((-1) ** order, math.factorial(order)))


def invert(s: TriangularAuto, a: MPoly) -> MPoly:
    """The exact preimage of a under s: s(invert(s, a)) == a.

    The variable preimages come from the operator-chain expansion
    (:meth:`TriangularAuto.generator_preimages`); since the inverse is an
    algebra map, substituting them into a inverts any polynomial.
    """
    if a.nvars != s.nvars:
        raise ValueError("variable count mismatch")
    return substitute(a, s.generator_preimages(), s._preimage_power_memo)


def inverse_expansion(n: int, m: int, j: int) -> MPoly:
    """x_j written as a polynomial in the first j image coordinates.

    Computed from the truncated operator chains: the coefficient of the
    alpha-th image monomial is phi'_{1,j-|alpha|}..phi'_{j,j-|alpha|} applied
    to the alpha-th twisted derivative of x_j over alpha!.  Variable i of the
    result stands for the i-th image coordinate; the total degree is at most
    j.  Must agree with invert() applied to x_j, up to that renaming.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"j out of range 1..{n - 1}")
    return _inverse_expansion(n, m, j)


@lru_cache(maxsize=None)
def _inverse_expansion(n: int, m: int, j: int) -> MPoly:
    s = _automorphism(n, m)
    k = s.nvars
    pyramid = s._pyramid(j)
    total = MPoly.zero(k)
    for alpha in iter_simplex(j, j):
        value = pyramid.get(alpha)
        if value is None or value.is_zero():
            continue
        factorial = 1
        for e in alpha:
            factorial *= math.factorial(e)
        q = value.scale(Fraction(1, factorial))
        truncation = j - norm(alpha)
        for i in range(j, 0, -1):
            q = phi_truncated(s, i, truncation, q)
            if q.is_zero():
                break
        if q.is_zero():
            continue
        if not q.is_constant():
            raise InternalInvariantError(
                "truncated operator chain did not collapse to a constant"
            )
        exps = alpha + (0,) * (k - j)
        total = total + MPoly(k, {exps: q.constant_value()})
    return total


def closed_form_factors(
    ratios: Sequence[RatLike], n: int, m: int
) -> tuple[tuple[Fraction, ...], Fraction]:
    """Closed-form (a_1..a_{n-1}, lam) from the top coefficient ratios.

    ``ratios[j-1]`` is c_{d-j}/c_d for j = 1..n.  Each a_j is the inverse
    expansion evaluated at the ratios; lam = m / (ratios[n-1] - S) with S the
    weight-n multinomial sum in the a's.  Agrees bit-for-bit with the
    forward-substitution solver in :mod:`polydecomp.decompose`.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < 2:
        raise ValueError("outer degree m must be at least 2")
    values = [as_rat(r) for r in ratios]
    if len(values) != n:
        raise ValueError(f"expected {n} ratios, got {len(values)}")
    if n == 1:
        a: tuple[Fraction, ...] = ()
    else:
        point = values[: n - 1]
        a = tuple(inverse_expansion(n, m, j).eval(point) for j in range(1, n))
    tail_sum = Fraction(0)
    for alpha in enumerate_weighted(n - 1, n, m):
        tail_sum += multinomial(m, alpha) * power_product(a, alpha)
    denominator = values[n - 1] - tail_sum
    if denominator == 0:
        raise NoFactorError(STAGE_LAMBDA, "no factor (lambda undefined)")
    return a, Fraction(m) / denominator
