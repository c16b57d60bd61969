"""HTTP service exposing the library operations.

Run with ``uvicorn polydecomp.service:app``.  Mathematically negative
answers (no factor, not in the free monoid) are 200 responses with a flag;
bad input is 422; an internal invariant violation is 500.  The library is
pure and deterministic, so concurrent requests are safe.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from polydecomp import serialize
from polydecomp.decompose import enumerate_decompositions, peel, signature_set
from polydecomp.errors import (
    InternalInvariantError,
    NoFactorError,
    NotInFreeMonoidError,
)
from polydecomp.parsing import parse_poly
from polydecomp.reducibility import irreducibility_report
from polydecomp.unitary import UnitaryMap
from polydecomp.words import factor_word

app = FastAPI(
    title="polydecomp",
    description="Exact composition factorization of unitary polynomial maps.",
)


class ComposeRequest(BaseModel):
    polys: list[str] = Field(min_length=2)


class PolyRequest(BaseModel):
    poly: str


class PeelRequest(BaseModel):
    poly: str
    degree: int


class InverseTableRequest(BaseModel):
    n: int = Field(ge=2)
    m: int = Field(ge=2)


class PolyPayload(BaseModel):
    text: str
    coeffs: list[str]


class ComposeResponse(BaseModel):
    product: PolyPayload


class DecompositionPayload(BaseModel):
    signature: list[int]
    factors: list[str]


class DecomposeResponse(BaseModel):
    decompositions: list[DecompositionPayload]


class SignatureResponse(BaseModel):
    signatures: list[list[int]]


class PeelResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    found: bool
    reason: Optional[str] = None
    sigma: Optional[PolyPayload] = None
    tau: Optional[PolyPayload] = None
    lam: Optional[str] = Field(default=None, alias="lambda")
    a: Optional[list[str]] = None
    mu: Optional[list[str]] = None


class GeneratorPayload(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    n: int
    lam: str = Field(alias="lambda")


class WordResponse(BaseModel):
    in_monoid: bool
    reason: Optional[str] = None
    word: Optional[list[GeneratorPayload]] = None


class LevelResponse(BaseModel):
    level: int | str


class ShapePayload(BaseModel):
    n: int
    m: int
    outcome: str


class IrreducibilityResponse(BaseModel):
    verdict: str
    witnesses: list[list[str]]
    shapes: list[ShapePayload]
    notes: list[str]


class InverseTableEntry(BaseModel):
    j: int
    expr: str


class InverseTableResponse(BaseModel):
    n: int
    m: int
    entries: list[InverseTableEntry]


def _unitary(text: str) -> UnitaryMap:
    try:
        return UnitaryMap(parse_poly(text))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/compose", response_model=ComposeResponse)
def compose(request: ComposeRequest) -> dict:
    maps = [_unitary(text) for text in request.polys]
    product = maps[0]
    for factor in maps[1:]:
        product = product * factor
    return serialize.compose_result(product)


@app.post("/decompose", response_model=DecomposeResponse)
def decompose(request: PolyRequest) -> dict:
    delta = _unitary(request.poly)
    try:
        decs = enumerate_decompositions(delta)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return serialize.decompose_result(decs)


@app.post("/signature", response_model=SignatureResponse)
def signature(request: PolyRequest) -> dict:
    delta = _unitary(request.poly)
    try:
        sigs = signature_set(delta)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return serialize.signature_result(sigs)


@app.post("/peel", response_model=PeelResponse, response_model_exclude_none=True)
def peel_endpoint(request: PeelRequest) -> dict:
    delta = _unitary(request.poly)
    try:
        result = peel(delta, request.degree)
    except NoFactorError as exc:
        return serialize.peel_missing_result(str(exc))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return serialize.peel_found_result(result)


@app.post("/free-factor", response_model=WordResponse, response_model_exclude_none=True)
def free_factor(request: PolyRequest) -> dict:
    mapping = _unitary(request.poly)
    try:
        word = factor_word(mapping)
    except NotInFreeMonoidError as exc:
        return serialize.word_missing_result(str(exc))
    return serialize.word_found_result(word)


@app.post("/gamma-level", response_model=LevelResponse)
def gamma_level(request: PolyRequest) -> dict:
    mapping = _unitary(request.poly)
    return serialize.level_result(mapping.level())


@app.post("/irreducible-check", response_model=IrreducibilityResponse)
def irreducible_check(request: PolyRequest) -> dict:
    try:
        p = parse_poly(request.poly)
        report = irreducibility_report(p)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return serialize.irreducibility_result(report)


@app.post("/inverse-table", response_model=InverseTableResponse)
def inverse_table(request: InverseTableRequest) -> dict:
    try:
        return serialize.inverse_table_result(request.n, request.m)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.exception_handler(InternalInvariantError)
def _internal_error(_request, exc: InternalInvariantError) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})
