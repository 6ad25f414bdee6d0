"""HTTP facade over the polynomial core.

Every endpoint is a pure computation; requests and responses are
pydantic models.  Run with: uvicorn lucaskit.service:app
"""
from __future__ import annotations

import os
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import identities, idexpr, lucascore, series
from .report import IdentityReport

CheckName = Literal[
    "ex1", "ex2", "ex3", "ex4", "ex5a", "ex5b", "ex6a", "ex6b",
    "remark_fib", "remark_luc", "all",
]


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    n: int
    k: Optional[int] = None
    passed: bool = Field(alias="pass")
    lhs: str
    rhs: str
    spot_checks: dict[str, dict[str, str]]

    @classmethod
    def from_report(cls, r: IdentityReport) -> "ReportModel":
        return cls(
            name=r.name,
            n=r.n,
            k=r.aux_k,
            passed=r.passed,
            lhs=r.lhs.render(),
            rhs=r.rhs.render(),
            spot_checks=r.spot_checks,
        )


class PolyRequest(BaseModel):
    kind: Literal["fib", "luc"]
    n: int = Field(ge=0)


class PolyResponse(BaseModel):
    kind: str
    n: int
    poly: str


class VerifyRequest(BaseModel):
    names: list[CheckName]
    n_max: int = Field(default=32, ge=0)
    parallelism: Optional[int] = Field(default=None, ge=1)


class VerifyResponse(BaseModel):
    reports: list[ReportModel]
    all_pass: bool


class VerifyExprRequest(BaseModel):
    source: str
    n_from: Optional[int] = None
    n_to: int = 32


class SeriesRequest(BaseModel):
    kind: Literal["fib", "luc"]
    order: int = Field(default=128, ge=0)


class SeriesCoeff(BaseModel):
    n: int
    poly: str


class SeriesResponse(BaseModel):
    kind: str
    order: int
    coeffs: list[SeriesCoeff]
    self_check: bool


class NumbersRequest(BaseModel):
    kind: Literal["fib", "luc", "pell"]
    n_max: int = Field(default=32, ge=0)


class NumbersResponse(BaseModel):
    kind: str
    values: list[int]


def _default_parallelism() -> int:
    return os.cpu_count() or 1


def _expand_names(names: list[str]) -> list[str]:
    if "all" in names:
        return list(identities.ALL_CHECK_NAMES)
    out: list[str] = []
    for name in names:
        if name not in out:
            out.append(name)
    return out


def create_app() -> FastAPI:
    app = FastAPI(title="lucaskit", version="0.1.0")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/poly", response_model=PolyResponse)
    def poly(req: PolyRequest) -> PolyResponse:
        p = lucascore.fib(req.n) if req.kind == "fib" else lucascore.luc(req.n)
        return PolyResponse(kind=req.kind, n=req.n, poly=p.render())

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        parallelism = req.parallelism or _default_parallelism()
        reports = identities.verify_many(
            _expand_names(req.names), req.n_max, parallelism
        )
        return VerifyResponse(
            reports=[ReportModel.from_report(r) for r in reports],
            all_pass=all(r.passed for r in reports),
        )

    @app.post("/verify-expr", response_model=VerifyResponse)
    def verify_expr(req: VerifyExprRequest) -> VerifyResponse:
        try:
            decls = idexpr.parse_identity_file(req.source)
        except idexpr.IdentityParseError as err:
            raise HTTPException(
                status_code=400,
                detail={
                    "kind": "parse",
                    "message": err.reason,
                    "line": err.line,
                    "col": err.col,
                },
            ) from None
        reports: list[IdentityReport] = []
        try:
            for decl in decls:
                n_from = decl.min_n if req.n_from is None else req.n_from
                reports.extend(idexpr.verify_identity(decl, n_from, req.n_to))
        except idexpr.IdentityEvalError as err:
            raise HTTPException(
                status_code=400,
                detail={
                    "kind": "eval",
                    "message": err.reason,
                    "line": err.line,
                    "col": err.col,
                    "n": err.n,
                },
            ) from None
        return VerifyResponse(
            reports=[ReportModel.from_report(r) for r in reports],
            all_pass=all(r.passed for r in reports),
        )

    @app.post("/series", response_model=SeriesResponse)
    def series_expand(req: SeriesRequest) -> SeriesResponse:
        if req.kind == "fib":
            ts, ref = series.gf_fib(req.order), lucascore.fib
        else:
            ts, ref = series.gf_luc(req.order), lucascore.luc
        coeffs = [
            SeriesCoeff(n=n, poly=ts.coeff(n).render()) for n in range(req.order + 1)
        ]
        self_check = all(ts.coeff(n) == ref(n) for n in range(req.order + 1))
        return SeriesResponse(
            kind=req.kind, order=req.order, coeffs=coeffs, self_check=self_check
        )

    @app.post("/numbers", response_model=NumbersResponse)
    def numbers(req: NumbersRequest) -> NumbersResponse:
        if req.kind == "luc":
            values = [lucascore.luc_value(n, 1, 1) for n in range(req.n_max + 1)]
        elif req.kind == "pell":
            values = [lucascore.fib_value(n, 2, 1) for n in range(req.n_max + 1)]
        else:
            values = [lucascore.fib_value(n, 1, 1) for n in range(req.n_max + 1)]
        return NumbersResponse(kind=req.kind, values=list(values))

    return app


app = create_app()
