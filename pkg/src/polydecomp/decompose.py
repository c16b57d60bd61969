"""Peeling composition factors and enumerating all decompositions.

Given delta = x + c2*x^2 + ... + cd*x^d and a prescribed inner degree n+1
dividing d, the factorization delta = sigma * tau (sigma inner, degree n+1;
tau outer, degree m = d/(n+1)) is unique when it exists.  Its coefficients
solve two triangular systems read off the top and bottom of delta, and the
remaining coefficients of delta must satisfy explicit check equations; those
checks are exactly the decomposability criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from polydecomp.errors import (
    STAGE_LAMBDA,
    STAGE_MIDDLE,
    STAGE_MU,
    InternalInvariantError,
    NoFactorError,
)
from polydecomp.multiindex import MultiIndex, enumerate_weighted, multinomial, power_product
from polydecomp.polynomials import Poly
from polydecomp.unitary import RatioForm, UnitaryMap


@dataclass(frozen=True)
class PeelResult:
    """A verified split delta = sigma * tau at one degree shape.

    ``ratio`` is sigma's normalized coefficient data and ``mu`` holds tau's
    coefficients (mu[0] == 1 is the linear one).
    """

    sigma: UnitaryMap
    tau: UnitaryMap
    ratio: RatioForm
    mu: tuple[Fraction, ...]


@dataclass(frozen=True)
class Decomposition:
    """An ordered tuple of non-identity factors multiplying to a target."""

    factors: tuple[UnitaryMap, ...]

    @property
    def signature(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    def product(self) -> UnitaryMap:
        out = UnitaryMap.identity()
        for f in self.factors:
            out = out * f
        return out


def solve_tail_system(ratios: Sequence[Fraction], n: int, m: int) -> tuple[tuple[Fraction, ...], Fraction]:
    """Forward-solve the triangular system for (a_1..a_{n-1}, lam).

    ``ratios[j-1]`` must be c_{d-j}/c_d for j = 1..n.  Equation j reads
    m*a_j + sum over weight-j multi-indices of multinomial(m, alpha) * a^alpha
    = ratios[j-1]; the last equation determines lam via
    lam = m / (ratios[n-1] - S) with S the analogous weight-n sum.

    Raises ``NoFactorError`` when the lam denominator vanishes: no factor of
    this shape can exist then.
    """
    if len(ratios) != n:
        raise ValueError(f"expected {n} ratios, got {len(ratios)}")
    a: list[Fraction] = []
    for j in range(1, n):
        correction = Fraction(0)
        for alpha in enumerate_weighted(j - 1, j, m):
            correction += multinomial(m, alpha) * power_product(a, alpha)
        a.append((ratios[j - 1] - correction) / m)
    tail_sum = Fraction(0)
    for alpha in enumerate_weighted(n - 1, n, m):
        tail_sum += multinomial(m, alpha) * power_product(a, alpha)
    denominator = ratios[n - 1] - tail_sum
    if denominator == 0:
        raise NoFactorError(STAGE_LAMBDA, "no factor (lambda undefined)")
    return tuple(a), Fraction(m) / denominator


def _shift_pairs(j: int, n: int, mp_cap: int) -> Iterator[tuple[int, int]]:
    """Pairs (m', i) with 1 <= i <= m' <= mp_cap and m' + i*n == j."""
    i = 1
    while True:
        mp = j - i * n
        if mp < i:
            return
        if mp <= mp_cap:
            yield mp, i
        i += 1


def _shift_triples(j: int, n: int, mp_cap: int) -> Iterator[tuple[int, int, MultiIndex]]:
    """Triples (m', i, alpha) with 1 <= |alpha| <= i <= m' <= mp_cap and
    m' - weight(alpha) + i*n == j."""
    for mp in range(1, mp_cap + 1):
        for i in range(1, mp + 1):
            w = mp + i * n - j
            if w < 1:
                continue
            for alpha in enumerate_weighted(n - 1, w, i):
                yield mp, i, alpha


def _solve_mu(delta_poly: Poly, n: int, m: int, a: Sequence[Fraction], lam: Fraction) -> list[Fraction]:
    """Forward-solve the outer factor's coefficients mu_2..mu_m (mu_1 = 1)."""
    mu: list[Fraction] = [Fraction(1)]
    for j in range(2, m + 1):
        total = delta_poly.coeff(j)
        for mp, i in _shift_pairs(j, n, j - 1):
            total -= mu[mp - 1] * math.comb(mp, i) * lam**i
        for mp, i, alpha in _shift_triples(j, n, j - 1):
            total -= (
                mu[mp - 1]
                * math.comb(mp, i)
                * multinomial(i, alpha)
                * power_product(a, alpha)
                * lam**i
            )
        mu.append(total)
    return mu


def _middle_mismatch(
    delta_poly: Poly,
    n: int,
    m: int,
    d: int,
    a: Sequence[Fraction],
    lam: Fraction,
    mu: Sequence[Fraction],
) -> int | None:
    """First exponent j with m < j < d-n whose check equation fails, if any."""
    for j in range(m + 1, d - n):
        expected = Fraction(0)
        for mp, i in _shift_pairs(j, n, m):
            expected += mu[mp - 1] * math.comb(mp, i) * lam**i
        for mp, i, alpha in _shift_triples(j, n, m):
            expected += (
                mu[mp - 1]
                * math.comb(mp, i)
                * multinomial(i, alpha)
                * power_product(a, alpha)
                * lam**i
            )
        if expected != delta_poly.coeff(j):
            return j
    return None


def _split_shape(delta: UnitaryMap, inner_degree: int) -> tuple[int, int, int]:
    d = delta.degree
    if inner_degree < 2 or d % inner_degree != 0 or d // inner_degree < 2:
        raise ValueError(
            f"invalid split shape: inner degree {inner_degree} for total degree {d}"
        )
    return d, inner_degree - 1, d // inner_degree


def _solve_candidate(
    delta: UnitaryMap, inner_degree: int
) -> tuple[int, int, int, tuple[Fraction, ...], Fraction, list[Fraction]]:
    d, n, m = _split_shape(delta, inner_degree)
    cd = delta.poly.coeff(d)
    ratios = [delta.poly.coeff(d - j) / cd for j in range(1, n + 1)]
    a, lam = solve_tail_system(ratios, n, m)
    mu = _solve_mu(delta.poly, n, m, a, lam)
    return d, n, m, a, lam, mu


def candidate_split(delta: UnitaryMap, inner_degree: int) -> tuple[Poly, Poly]:
    """Solve both triangular systems and return the candidate pair unchecked.

    The pair recomposes to delta exactly when the split exists, so composing
    and comparing serves as a brute-force decomposability oracle against the
    analytic checks in :func:`peel`.
    """
    _, n, _, a, lam, mu = _solve_candidate(delta, inner_degree)
    sigma_poly = RatioForm(n=n, lam=lam, a=a).to_poly()
    tau_poly = Poly([Fraction(0), *mu])
    return sigma_poly, tau_poly


def peel(delta: UnitaryMap, inner_degree: int) -> PeelResult:
    """Recover the unique split delta = sigma * tau with deg(sigma) given.

    Raises ``ValueError`` for a malformed shape (inner degree not dividing,
    or either factor degree below 2) and ``NoFactorError`` when the shape is
    valid but no factorization of that shape exists.
    """
    d, n, m, a, lam, mu = _solve_candidate(delta, inner_degree)
    if delta.poly.coeff(d) != mu[m - 1] * lam**m:
        raise NoFactorError(STAGE_MU, "no factor (leading coefficient equation failed)")
    bad = _middle_mismatch(delta.poly, n, m, d, a, lam, mu)
    if bad is not None:
        raise NoFactorError(
            STAGE_MIDDLE, f"no factor (coefficient check failed at x^{bad})"
        )
    ratio = RatioForm(n=n, lam=lam, a=a)
    sigma = ratio.to_map()
    tau = UnitaryMap(Poly([Fraction(0), *mu]))
    if (sigma * tau).poly != delta.poly:
        raise InternalInvariantError(
            "recomposition guard tripped: analytic checks passed but the "
            "factors do not recompose"
        )
    return PeelResult(sigma=sigma, tau=tau, ratio=ratio, mu=tuple(mu))


def is_decomposable(delta: UnitaryMap) -> list[tuple[int, PeelResult]]:
    """All successful peels over divisor degrees 2 <= e <= d/2.

    An empty list means delta is indecomposable.
    """
    if delta.is_identity:
        raise ValueError("identity map has no decomposability question")
    d = delta.degree
    found: list[tuple[int, PeelResult]] = []
    for e_deg in range(2, d // 2 + 1):
        if d % e_deg:
            continue
        try:
            found.append((e_deg, peel(delta, e_deg)))
        except NoFactorError:
            continue
    return found


def _expand(delta: UnitaryMap) -> list[tuple[UnitaryMap, ...]]:
    out: list[tuple[UnitaryMap, ...]] = [(delta,)]
    for _e_deg, result in is_decomposable(delta):
        for rest in _expand(result.tau):
            out.append((result.sigma, *rest))
    return out


def enumerate_decompositions(delta: UnitaryMap) -> list[Decomposition]:
    """The full decomposition set of delta, sorted by signature.

    Peels the inner factor at every divisor degree and recurses on the outer
    cofactor; the singleton (delta,) is always included.  Deduplication is a
    no-op when the signature map is injective, but is applied as a safeguard.
    """
    if delta.is_identity:
        raise ValueError("identity map has no decompositions")
    unique = dict.fromkeys(_expand(delta))
    decs = [Decomposition(factors) for factors in unique]
    decs.sort(key=lambda dec: dec.signature)
    return decs


def signature_set(delta: UnitaryMap) -> list[tuple[int, ...]]:
    """The sorted set of degree tuples realized by decompositions of delta."""
    return sorted({dec.signature for dec in enumerate_decompositions(delta)})
