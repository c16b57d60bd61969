"""Necessary conditions for irreducibility via composition splits.

Polynomials with constant term 1 are exactly the derivatives of unitary
polynomials.  Lifting such a p to its antiderivative, splitting the lift
under composition, and applying the chain rule turns every split into an
explicit multiplicative factorization p = f'(g) * g'.  Finding a witness
proves reducibility; finding none only says the necessary conditions hold.
"""

from __future__ import annotations

from dataclasses import dataclass

from polydecomp.decompose import is_decomposable, peel
from polydecomp.errors import InternalInvariantError, NoFactorError
from polydecomp.polynomials import Poly
from polydecomp.unitary import UnitaryMap

VERDICT_REDUCIBLE = "reducible (witness found)"
VERDICT_NECESSARY = "necessary conditions for irreducibility hold"

LIFT_NOTE = (
    "lift normalization: the unitary lift is the exact antiderivative with "
    "zero constant term, so its derivative reproduces the input"
)


@dataclass(frozen=True)
class ShapeOutcome:
    """Result of probing one split shape d = m*(n+1) of the lifted input."""

    n: int
    m: int
    outcome: str


@dataclass(frozen=True)
class IrreducibilityReport:
    poly: Poly
    shape_results: tuple[ShapeOutcome, ...]
    witnesses: tuple[tuple[Poly, Poly], ...]
    verdict: str
    notes: tuple[str, ...] = (LIFT_NOTE,)


def _validate_input(p: Poly) -> None:
    if p.degree is None or p.degree < 1:
        raise ValueError("input must be a polynomial of degree at least 1")
    if p.coeff(0) != 1:
        raise ValueError("constant term must be 1")


def lift_to_unitary(p: Poly) -> UnitaryMap:
    """The unique unitary map whose polynomial has derivative p."""
    _validate_input(p)
    return UnitaryMap(p.integral())


def _witness(result_sigma: UnitaryMap, result_tau: UnitaryMap, p: Poly) -> tuple[Poly, Poly]:
    inner = result_sigma.poly
    outer = result_tau.poly
    u = outer.derivative().compose(inner)
    v = inner.derivative()
    if u * v != p:
        raise InternalInvariantError("chain-rule witness does not multiply to the input")
    return u, v


def reducibility_witnesses(p: Poly) -> list[tuple[Poly, Poly]]:
    """Divisor pairs (f'(g), g') from every composition split of the lift.

    Each pair multiplies exactly to p; an empty list means no split exists.
    Pairs are emitted per split shape, without cross-shape deduplication.
    """
    _validate_input(p)
    delta = lift_to_unitary(p)
    out: list[tuple[Poly, Poly]] = []
    for _e_deg, result in is_decomposable(delta):
        out.append(_witness(result.sigma, result.tau, p))
    return out


def irreducibility_report(p: Poly) -> IrreducibilityReport:
    """Probe every split shape of the lift and report witnesses and verdict.

    The verdict "necessary conditions for irreducibility hold" does not
    assert irreducibility; it only records that no composition-based witness
    exists.
    """
    _validate_input(p)
    delta = lift_to_unitary(p)
    d = delta.degree
    shapes: list[ShapeOutcome] = []
    witnesses: list[tuple[Poly, Poly]] = []
    for e_deg in range(2, d // 2 + 1):
        if d % e_deg:
            continue
        n, m = e_deg - 1, d // e_deg
        try:
            result = peel(delta, e_deg)
        except NoFactorError as exc:
            shapes.append(ShapeOutcome(n=n, m=m, outcome=f"no factor ({exc.stage})"))
            continue
        shapes.append(ShapeOutcome(n=n, m=m, outcome="decomposable"))
        witnesses.append(_witness(result.sigma, result.tau, p))
    unique = tuple(dict.fromkeys(witnesses))
    verdict = VERDICT_REDUCIBLE if unique else VERDICT_NECESSARY
    return IrreducibilityReport(
        poly=p,
        shape_results=tuple(shapes),
        witnesses=unique,
        verdict=verdict,
    )
