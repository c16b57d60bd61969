import random
from fractions import Fraction

import pytest

from polydecomp import (
    Decomposition,
    InternalInvariantError,
    NoFactorError,
    Poly,
    UnitaryMap,
    enumerate_decompositions,
    is_decomposable,
    parse_poly,
    peel,
    signature_set,
)
from polydecomp.errors import STAGE_LAMBDA, STAGE_MIDDLE, STAGE_MU

from helpers import compose_all, oracle_has_split, rand_level_map, rand_unitary


def quadratic():
    return UnitaryMap(parse_poly("x + x^2"))


def test_peel_worked_example():
    delta = UnitaryMap(parse_poly("x + 2*x^2 + 2*x^3 + x^4"))
    result = peel(delta, 2)
    assert result.sigma == quadratic()
    assert result.tau == quadratic()
    assert result.ratio.lam == 1
    assert result.mu == (Fraction(1), Fraction(1))


def test_peel_invalid_shapes():
    delta = UnitaryMap(parse_poly("x + 2*x^2 + 2*x^3 + x^4"))
    for bad in (1, 3, 4, 8):
        with pytest.raises(ValueError, match="invalid split shape"):
            peel(delta, bad)


def test_peel_perturbed_example_fails_and_oracle_agrees():
    delta = UnitaryMap(parse_poly("x + 2*x^2 + 3*x^3 + x^4"))
    with pytest.raises(NoFactorError):
        peel(delta, 2)
    assert not oracle_has_split(delta, 2)


def test_peel_round_trip_random():
    rng = random.Random(101)
    for _ in range(40):
        sigma = rand_unitary(rng, rng.randint(2, 7))
        tau = rand_unitary(rng, rng.randint(2, 7))
        delta = sigma * tau
        result = peel(delta, sigma.degree)
        assert result.sigma == sigma
        assert result.tau == tau


def test_is_decomposable_examples():
    assert [e for e, _ in is_decomposable(quadratic() * quadratic())] == [2]
    assert is_decomposable(UnitaryMap(parse_poly("x + x^5"))) == []
    triple = quadratic() * quadratic() * quadratic()
    assert [e for e, _ in is_decomposable(triple)] == [2, 4]


def test_is_decomposable_triple_quadratic_cofactors():
    g = quadratic()
    triple = g * g * g
    found = dict(is_decomposable(triple))
    assert found[2].sigma == g and found[2].tau == g * g
    assert found[4].sigma == g * g and found[4].tau == g


def test_identity_rejected():
    with pytest.raises(ValueError):
        is_decomposable(UnitaryMap.identity())
    with pytest.raises(ValueError):
        enumerate_decompositions(UnitaryMap.identity())


def test_enumerate_examples():
    prime = UnitaryMap(parse_poly("x + x^5"))
    assert enumerate_decompositions(prime) == [Decomposition((prime,))]

    gg = quadratic() * quadratic()
    assert [d.signature for d in enumerate_decompositions(gg)] == [(2, 2), (4,)]

    triple = quadratic() * quadratic() * quadratic()
    decs = enumerate_decompositions(triple)
    assert [d.signature for d in decs] == [(2, 2, 2), (2, 4), (4, 2), (8,)]
    for dec in decs:
        assert dec.product() == triple


def test_signature_set_examples():
    assert signature_set(UnitaryMap(parse_poly("x + x^5"))) == [(5,)]
    assert signature_set(quadratic() * quadratic()) == [(2, 2), (4,)]
    triple = quadratic() * quadratic() * quadratic()
    assert signature_set(triple) == [(2, 2, 2), (2, 4), (4, 2), (8,)]


def test_signature_bijection_random():
    rng = random.Random(7)
    for _ in range(15):
        count = rng.randint(2, 3)
        factors = [rand_unitary(rng, rng.randint(2, 4), max_num=4, max_den=4) for _ in range(count)]
        delta = compose_all(factors)
        decs = enumerate_decompositions(delta)
        signatures = [d.signature for d in decs]
        assert len(set(signatures)) == len(decs)
        assert len(set(d.factors for d in decs)) == len(decs)
        assert signature_set(delta) == sorted(signatures)
        for dec in decs:
            assert dec.product() == delta
            product_of_degrees = 1
            for entry in dec.signature:
                product_of_degrees *= entry
            assert product_of_degrees == delta.degree


def test_level_closure_of_factors():
    rng = random.Random(13)
    for level in (2, 3):
        for _ in range(10):
            delta = rand_level_map(rng, level) * rand_level_map(rng, level)
            for dec in enumerate_decompositions(delta):
                for factor in dec.factors:
                    g = factor.level()
                    assert g is not None and g % level == 0


def test_solver_locality():
    # Two products sharing the inner factor and outer degree share the top
    # coefficient ratios, so the recovered (a, lam) must match exactly.
    rng = random.Random(37)
    for _ in range(10):
        sigma = rand_unitary(rng, rng.randint(2, 5))
        m = rng.randint(2, 5)
        tau1 = rand_unitary(rng, m)
        tau2 = rand_unitary(rng, m)
        r1 = peel(sigma * tau1, sigma.degree)
        r2 = peel(sigma * tau2, sigma.degree)
        assert r1.ratio == r2.ratio


def test_middle_coefficient_rigidity_small():
    rng = random.Random(41)
    sigma = rand_unitary(rng, 2)
    tau = rand_unitary(rng, 3)
    delta = sigma * tau
    d, n, m = delta.degree, 1, 3
    middle = range(m + 1, d - n)
    assert len(list(middle)) > 0
    for j in middle:
        coeffs = list(delta.poly.coeffs)
        coeffs[j] += 1
        perturbed = UnitaryMap(Poly(coeffs))
        with pytest.raises(NoFactorError) as info:
            peel(perturbed, 2)
        assert info.value.stage == STAGE_MIDDLE
        assert not oracle_has_split(perturbed, 2)


def test_mu_check_stage():
    delta = UnitaryMap(parse_poly("x + 2*x^2 + 3*x^3 + x^4"))
    with pytest.raises(NoFactorError) as info:
        peel(delta, 2)
    assert info.value.stage == STAGE_MU


def test_lambda_undefined_stage():
    # a quadratic-in-quadratic split forces a nonzero x^3 coefficient, so a
    # vanishing one makes the leading-ratio equation unsolvable
    delta = UnitaryMap(parse_poly("x + x^2 + x^4"))
    with pytest.raises(NoFactorError) as info:
        peel(delta, 2)
    assert info.value.stage == STAGE_LAMBDA
    assert not oracle_has_split(delta, 2)


def test_guard_equivalence_on_random_inputs():
    # The analytic checks and the brute-force recomposition oracle must agree
    # on every input, decomposable or not.
    rng = random.Random(53)
    cases = []
    for _ in range(15):
        cases.append(rand_unitary(rng, rng.choice([4, 6, 8, 9])))
    for _ in range(10):
        cases.append(rand_unitary(rng, rng.randint(2, 4)) * rand_unitary(rng, rng.randint(2, 3)))
    for delta in cases:
        d = delta.degree
        for e_deg in range(2, d // 2 + 1):
            if d % e_deg:
                continue
            try:
                result = peel(delta, e_deg)
                analytic = True
                assert (result.sigma * result.tau) == delta
            except NoFactorError:
                analytic = False
            assert analytic == oracle_has_split(delta, e_deg)


def test_recompose_guard_never_trips():
    rng = random.Random(59)
    for _ in range(20):
        delta = rand_unitary(rng, rng.choice([4, 6, 8, 9, 10]))
        for e_deg in range(2, delta.degree // 2 + 1):
            if delta.degree % e_deg:
                continue
            try:
                peel(delta, e_deg)
            except NoFactorError:
                pass
            except InternalInvariantError as exc:  # pragma: no cover
                pytest.fail(f"internal guard tripped: {exc}")
