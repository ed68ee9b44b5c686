"""HTTP surface over the core library.

POST endpoints take factorization text inline (the same .bfac format
the CLI reads from disk) and return exactly the dicts that the CLI's
structured mode prints, validated through pydantic response models so
the two surfaces cannot drift apart. Domain failures map to 400,
parse failures to 422; an inconclusive search is a 200 with verdict
"unknown", not an error.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__, corpus
from .errors import BraidFactError, ParseError, StrandMismatch
from .factorization import parse
from .hurwitz import (
    DEFAULT_BUDGET,
    DEFAULT_CONJUGATION_RADIUS,
    equivalent,
    parse_witness,
    replay,
)
from .reports import (
    build_chisini_report,
    build_enumerate_report,
    build_replay_report,
    build_search_report,
    build_verify_report,
    build_vk_report,
)


# --- request bodies ----------------------------------------------------------


class FactorizationBody(BaseModel):
    text: str = Field(description="factorization in .bfac format")


class HurwitzBody(BaseModel):
    first: str
    second: str
    budget: int = DEFAULT_BUDGET
    conjugation_radius: int = DEFAULT_CONJUGATION_RADIUS
    witness: str | None = Field(
        default=None,
        description="witness in .wit format; when given, replay instead of search",
    )


class EnumerateBody(BaseModel):
    text: str
    sheets: int
    allow_large: bool = False


class ChisiniBody(BaseModel):
    half_degree: str = Field(description="a fraction like '3' or '5/2'")
    genus: int
    cusps: int
    sheets: int | None = None


# --- response models ---------------------------------------------------------


class CountsModel(BaseModel):
    branch: int
    node: int
    cusp: int
    weighted_total: int


class InvariantsModel(BaseModel):
    degree: int
    half_degree: str
    genus: int
    nodes: int
    cusps: int


class VerifyResponse(BaseModel):
    strands: int
    factors: int
    verified: bool
    counts: CountsModel
    invariants: InvariantsModel | None
    warnings: list[str]


class SearchModel(BaseModel):
    states_explored: int
    budget: int
    conjugation_radius: int
    reason: str


class HurwitzResponse(BaseModel):
    strands: int
    mode: str
    verdict: str
    invariant: str | None
    witness: str | None
    moves: int | None
    search: SearchModel | None


class SimplifiedModel(BaseModel):
    generators: int
    relators: list[str]


class AbelianModel(BaseModel):
    free_rank: int
    torsion: list[int]
    name: str


class VkResponse(BaseModel):
    strands: int
    factors: int
    generators: int
    relators: list[str]
    simplified: SimplifiedModel
    abelianization: AbelianModel
    irreducible: bool
    components: list[list[int]]


class EnumerateResponse(BaseModel):
    strands: int
    degree: int
    genus: int
    branch: int
    nodes: int
    cusps: int
    sheets: int
    classes: int
    class_images: list[list[str]]
    dedup_exact: bool
    threshold: str | None
    applicable: bool
    guaranteed: bool
    euler: int
    warnings: list[str]


class ChisiniResponse(BaseModel):
    half_degree: str
    genus: int
    cusps: int
    sheets: int | None
    threshold: str | None
    applicable: bool
    guaranteed: bool | None


class HealthResponse(BaseModel):
    status: str
    version: str


class CorpusListResponse(BaseModel):
    names: list[str]


class CorpusItemResponse(BaseModel):
    name: str
    text: str


# --- app ---------------------------------------------------------------------


app = FastAPI(
    title="braidfact",
    version=__version__,
    description="cuspidal factorizations of the full twist: verification, "
    "equivalence search, fundamental groups and cover enumeration",
)


@app.exception_handler(ParseError)
async def _on_parse_error(request: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(BraidFactError)
async def _on_domain_error(request: Request, exc: BraidFactError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def _on_value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/corpus", response_model=CorpusListResponse)
def corpus_list() -> dict:
    return {"names": list(corpus.available())}


@app.get("/corpus/{name}", response_model=CorpusItemResponse)
def corpus_item(name: str) -> dict:
    try:
        text = corpus.text(name)
    except KeyError:
        raise HTTPException(status_code=404, detail=f"no bundled example {name!r}")
    return {"name": name, "text": text}


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(body: FactorizationBody) -> dict:
    return build_verify_report(parse(body.text))


@app.post("/hurwitz", response_model=HurwitzResponse)
def hurwitz_endpoint(body: HurwitzBody) -> dict:
    F1 = parse(body.first)
    F2 = parse(body.second)
    if body.witness is not None:
        witness = parse_witness(body.witness, F1.strands)
        if F1.strands != F2.strands:
            raise StrandMismatch(
                f"cannot replay between {F1.strands} and {F2.strands} strands"
            )
        match = replay(F1, witness).normalized() == F2.normalized()
        return build_replay_report(F1.strands, witness, match)
    try:
        verdict = equivalent(
            F1, F2, budget=body.budget, conjugation_radius=body.conjugation_radius
        )
    except StrandMismatch:
        return {
            "strands": F1.strands,
            "mode": "search",
            "verdict": "distinguished",
            "invariant": "strands",
            "witness": None,
            "moves": None,
            "search": None,
        }
    return build_search_report(F1.strands, verdict)


@app.post("/vk", response_model=VkResponse)
def vk_endpoint(body: FactorizationBody) -> dict:
    return build_vk_report(parse(body.text))


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(body: EnumerateBody) -> dict:
    return build_enumerate_report(
        parse(body.text), body.sheets, allow_large=body.allow_large
    )


@app.post("/chisini", response_model=ChisiniResponse)
def chisini_endpoint(body: ChisiniBody) -> dict:
    d = Fraction(body.half_degree)
    if d <= 0 or body.genus < 0 or body.cusps < 0:
        raise ValueError("need d > 0, g >= 0, c >= 0")
    if body.sheets is not None and body.sheets < 1:
        raise ValueError("sheet count must be positive")
    return build_chisini_report(d, body.genus, body.cusps, body.sheets)
