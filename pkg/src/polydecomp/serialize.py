"""Result objects shared by the CLI JSON mode and the HTTP service.

Rationals are serialized as "num/den" strings, never floats; polynomials
appear both as canonical text and as ascending coefficient arrays.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from polydecomp.decompose import Decomposition, PeelResult
from polydecomp.inversion import inverse_expansion
from polydecomp.mpoly import format_mpoly
from polydecomp.polynomials import Poly, format_poly
from polydecomp.reducibility import IrreducibilityReport
from polydecomp.unitary import UnitaryMap
from polydecomp.words import Generator


def rat_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def poly_obj(p: Poly) -> dict:
    return {"text": format_poly(p), "coeffs": [rat_str(c) for c in p.coeffs]}


def compose_result(product: UnitaryMap) -> dict:
    return {"product": poly_obj(product.poly)}


def decompose_result(decompositions: Sequence[Decomposition]) -> dict:
    return {
        "decompositions": [
            {
                "signature": list(dec.signature),
                "factors": [format_poly(f.poly) for f in dec.factors],
            }
            for dec in decompositions
        ]
    }


def signature_result(signatures: Sequence[tuple[int, ...]]) -> dict:
    return {"signatures": [list(sig) for sig in signatures]}


def peel_found_result(result: PeelResult) -> dict:
    return {
        "found": True,
        "sigma": poly_obj(result.sigma.poly),
        "tau": poly_obj(result.tau.poly),
        "lambda": rat_str(result.ratio.lam),
        "a": [rat_str(v) for v in result.ratio.a],
        "mu": [rat_str(v) for v in result.mu],
    }


def peel_missing_result(reason: str) -> dict:
    return {"found": False, "reason": reason}


def generator_obj(gen: Generator) -> dict:
    return {"n": gen.n, "lambda": rat_str(gen.lam)}


def word_found_result(word: Sequence[Generator]) -> dict:
    return {"in_monoid": True, "word": [generator_obj(g) for g in word]}


def word_missing_result(reason: str) -> dict:
    return {"in_monoid": False, "reason": reason}


def level_result(level: int | None) -> dict:
    return {"level": "unbounded" if level is None else level}


def irreducibility_result(report: IrreducibilityReport) -> dict:
    return {
        "verdict": report.verdict,
        "witnesses": [[format_poly(u), format_poly(v)] for u, v in report.witnesses],
        "shapes": [
            {"n": shape.n, "m": shape.m, "outcome": shape.outcome}
            for shape in report.shape_results
        ],
        "notes": list(report.notes),
    }


def image_coordinate_names(count: int) -> list[str]:
    return [f"x{i + 1}'" for i in range(count)]


def inverse_table_result(n: int, m: int) -> dict:
    if n < 2:
        raise ValueError("degenerate shape: no tail variables; use the scalar path")
    if m < 2:
        raise ValueError("outer degree m must be at least 2")
    names = image_coordinate_names(n - 1)
    entries = []
    for j in range(1, n):
        expansion = inverse_expansion(n, m, j)
        entries.append({"j": j, "expr": format_mpoly(expansion, names)})
    return {"n": n, "m": m, "entries": entries}
