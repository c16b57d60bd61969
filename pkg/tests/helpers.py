"""Shared random generators and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from polydecomp import (
    Generator,
    MPoly,
    NoFactorError,
    Poly,
    TriangularAuto,
    UnitaryMap,
    candidate_split,
    weight,
)
from polydecomp.mpoly import substitute


def rand_fraction(rng: random.Random, max_num=9, max_den=9, nonzero=False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if value != 0 or not nonzero:
            return value


def rand_unitary(rng: random.Random, degree: int, max_num=9, max_den=9) -> UnitaryMap:
    coeffs = [Fraction(0), Fraction(1)]
    coeffs.extend(rand_fraction(rng, max_num, max_den) for _ in range(degree - 2))
    coeffs.append(rand_fraction(rng, max_num, max_den, nonzero=True))
    return UnitaryMap(Poly(coeffs))


def rand_level_map(rng: random.Random, level: int, max_steps=2) -> UnitaryMap:
    """A random non-identity map supported on exponents 1 + level*i."""
    steps = rng.randint(1, max_steps)
    coeffs = [Fraction(0)] * (1 + level * steps + 1)
    coeffs[1] = Fraction(1)
    for i in range(1, steps):
        coeffs[1 + level * i] = rand_fraction(rng, 3, 3)
    coeffs[1 + level * steps] = rand_fraction(rng, 3, 3, nonzero=True)
    return UnitaryMap(Poly(coeffs))


def rand_word(rng: random.Random, length: int, max_n=4) -> list[Generator]:
    return [
        Generator(rng.randint(1, max_n), rand_fraction(rng, 3, 3, nonzero=True))
        for _ in range(length)
    ]


def rand_mpoly(rng: random.Random, nvars: int, max_degree=4, max_terms=3) -> MPoly:
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(nvars)] += 1
        terms[tuple(exps)] = rand_fraction(rng, 3, 3)
    return MPoly(nvars, terms)


def compose_all(maps: list[UnitaryMap]) -> UnitaryMap:
    product = maps[0]
    for factor in maps[1:]:
        product = product * factor
    return product


def oracle_has_split(delta: UnitaryMap, inner_degree: int) -> bool:
    """Brute-force decomposability at one shape: solve the systems without any
    check equations, recompose, and compare against delta."""
    try:
        sigma_poly, tau_poly = candidate_split(delta, inner_degree)
    except NoFactorError:
        return False
    return tau_poly.compose(sigma_poly) == delta.poly


def backsolve_preimages(s: TriangularAuto) -> list[MPoly]:
    """Variable preimages by plain triangular back-substitution.

    Independent of the operator-chain expansion used by the library.
    """
    k = s.nvars
    out: list[MPoly] = []
    for j in range(k):
        lower = s.images[j] - MPoly.variable(k, j).scale(s.m)
        images = out + [MPoly.variable(k, t) for t in range(j, k)]
        shifted = substitute(lower, images)
        out.append((MPoly.variable(k, j) - shifted).scale(Fraction(1, s.m)))
    return out


def brute_weighted(k: int, target: int, max_norm: int) -> list[tuple[int, ...]]:
    """Exhaustive box search matching enumerate_weighted's contract."""
    found = [
        alpha
        for alpha in itertools.product(range(max_norm + 1), repeat=k)
        if sum(alpha) <= max_norm and weight(alpha) == target
    ]
    return sorted(found, reverse=True)
