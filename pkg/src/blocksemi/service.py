"""HTTP surface over the library.

Request and response bodies mirror the instance-file vocabulary (blocks as
integer lists, transformations as image lists).  Domain errors become 400
responses with a stable ``code`` field so clients can map them to exit
codes; a negative answer to a well-posed question is a 200 with the answer
in the body.  Enumerated tables are cached per partition, which is the
point of running this as a service: repeated queries against the same
partition pay for enumeration once.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import greens, regularity
from .core import (
    BlocksemiError,
    NotInB,
    NotPartitionPreserving,
    Partition,
    SizeMismatch,
    Transformation,
    as_member,
    character,
    in_B,
    preserves_partition,
)
from .instances import InvalidInstance, UnknownName
from .oracle import DEFAULT_CAP, SemigroupTable, TooLarge, expected_size
from .oracle import enumerate_semigroup
from .regularity import NotUnitRegular
from .survey import run_conjecture, run_survey

RelationName = Literal["L", "R", "H", "D", "J", "leqL", "leqR", "leqJ"]


class MembershipRequest(BaseModel):
    blocks: list[list[int]]
    f: list[int]


class MembershipResponse(BaseModel):
    preserves_partition: bool
    character: list[int] | None
    is_permutation: bool | None
    in_b: bool
    is_unit: bool


class CheckRequest(BaseModel):
    blocks: list[list[int]]
    f: list[int]
    g: list[int]
    relation: RelationName


class CheckResponse(BaseModel):
    relation: RelationName
    holds: bool
    alpha: list[int] | None = None
    beta: list[int] | None = None


class WitnessRequest(BaseModel):
    blocks: list[list[int]]
    f: list[int]
    unit: bool = False


class Obstruction(BaseModel):
    block: int
    collapse: int
    defect: int


class WitnessResponse(BaseModel):
    found: bool
    witness: list[int] | None = None
    flavor: Literal["plain", "unit"] | None = None
    verified: bool | None = None
    obstruction: Obstruction | None = None


class SurveyRequest(BaseModel):
    blocks: list[list[int]]
    cap: int = Field(default=DEFAULT_CAP, ge=1)


class SurveyResponse(BaseModel):
    blocks: list[list[int]]
    size: int
    class_counts: dict[str, int]
    regular_count: int
    unit_regular_count: int
    discrepancies: list[str]


class ConjectureRequest(BaseModel):
    blocks: list[list[int]]
    cap: int = Field(default=DEFAULT_CAP, ge=1)


class ConjectureRowModel(BaseModel):
    profile: list[list[int]]
    element_count: int
    representative: list[int]
    lambda1: int
    lambda2: int
    exceptional_blocks: list[int]
    exceptional_count: int
    two_consecutive: bool
    d_class_size: int
    j_class_size: int
    d_equals_j: bool


class ConjectureResponse(BaseModel):
    blocks: list[list[int]]
    size: int
    rows: list[ConjectureRowModel]
    two_consecutive_elements: int
    d_equals_j: bool


@lru_cache(maxsize=8)
def _cached_table(p: Partition) -> SemigroupTable:
    return enumerate_semigroup(p, cap=expected_size(p))


def _table_for(p: Partition, cap: int) -> SemigroupTable:
    estimated = expected_size(p)
    if estimated > cap:
        raise TooLarge(estimated, cap)
    return _cached_table(p)


def _partition(blocks: list[list[int]]) -> Partition:
    try:
        return Partition(tuple(tuple(b) for b in blocks))
    except (TypeError, ValueError) as exc:
        raise InvalidInstance(f"bad blocks: {exc}") from exc


def _transformation(values: list[int], p: Partition, name: str) -> Transformation:
    try:
        t = Transformation(tuple(values))
    except (TypeError, ValueError) as exc:
        raise InvalidInstance(f"bad transformation {name!r}: {exc}") from exc
    if t.n != p.n:
        raise InvalidInstance(
            f"transformation {name!r} has length {t.n}, expected {p.n}"
        )
    return t


def _error_code(exc: BlocksemiError) -> tuple[str, dict]:
    if isinstance(exc, TooLarge):
        return "too_large", {"estimated": exc.estimated, "cap": exc.cap}
    if isinstance(exc, NotPartitionPreserving):
        return "not_partition_preserving", {"block": exc.block}
    if isinstance(exc, NotInB):
        return "not_in_b", {}
    if isinstance(exc, UnknownName):
        return "unknown_name", {}
    if isinstance(exc, (InvalidInstance, SizeMismatch)):
        return "invalid_instance", {}
    return "error", {}


def create_app() -> FastAPI:
    app = FastAPI(title="blocksemi", version="0.1.0")

    @app.exception_handler(BlocksemiError)
    async def domain_error(_, exc: BlocksemiError):
        code, context = _error_code(exc)
        return JSONResponse(
            status_code=400,
            content={"code": code, "message": str(exc), **context},
        )

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/membership", response_model=MembershipResponse)
    def membership(req: MembershipRequest):
        p = _partition(req.blocks)
        f = _transformation(req.f, p, "f")
        preserves = preserves_partition(f, p)
        chi = character(f, p).map if preserves else None
        return MembershipResponse(
            preserves_partition=preserves,
            character=list(chi) if chi is not None else None,
            is_permutation=in_B(f, p) if preserves else None,
            in_b=in_B(f, p),
            is_unit=regularity.is_unit(f, p),
        )

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        p = _partition(req.blocks)
        f = _transformation(req.f, p, "f")
        g = _transformation(req.g, p, "g")
        mf, mg = as_member(f, p), as_member(g, p)

        if req.relation == "R":
            return CheckResponse(relation="R", holds=greens.eq_R(mf, mg, p))
        if req.relation == "leqR":
            return CheckResponse(relation="leqR", holds=greens.leq_R(mf, mg, p))
        if req.relation == "H":
            return CheckResponse(relation="H", holds=greens.eq_H(mf, mg, p))

        decide = {
            "L": greens.eq_L,
            "D": greens.eq_D,
            "J": greens.eq_J,
            "leqL": greens.leq_L,
            "leqJ": greens.leq_J,
        }[req.relation]
        witness = decide(mf, mg, p)
        if witness is None:
            return CheckResponse(relation=req.relation, holds=False)
        return CheckResponse(
            relation=req.relation,
            holds=True,
            alpha=list(witness.alpha) if witness.alpha is not None else None,
            beta=list(witness.beta) if witness.beta is not None else None,
        )

    @app.post("/witness", response_model=WitnessResponse)
    def witness(req: WitnessRequest):
        p = _partition(req.blocks)
        f = _transformation(req.f, p, "f")
        m = as_member(f, p)
        try:
            w = (
                regularity.unit_regular_witness(m, p)
                if req.unit
                else regularity.regular_witness(m, p)
            )
        except NotUnitRegular as exc:
            return WitnessResponse(
                found=False,
                obstruction=Obstruction(
                    block=exc.block, collapse=exc.collapse, defect=exc.defect
                ),
            )
        return WitnessResponse(
            found=True,
            witness=list(w.g.image),
            flavor=w.flavor,
            verified=regularity.witness_is_valid(m, w, p),
        )

    @app.post("/survey", response_model=SurveyResponse)
    def survey(req: SurveyRequest):
        p = _partition(req.blocks)
        table = _table_for(p, req.cap)
        report = run_survey(p, cap=req.cap, table=table)
        return SurveyResponse(**report.as_dict())

    @app.post("/conjecture", response_model=ConjectureResponse)
    def conjecture(req: ConjectureRequest):
        p = _partition(req.blocks)
        table = _table_for(p, req.cap)
        report = run_conjecture(p, cap=req.cap, table=table)
        return ConjectureResponse(**report.as_dict())

    return app


app = create_app()
