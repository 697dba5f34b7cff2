"""HTTP service wrapping the workbench.

Every endpoint takes a small request model and returns the same report
shape: config echo, a list of named checks with pass/fail/skipped status,
and an overall verdict.  Domain and usage errors map to 422/400; nothing
in here computes anything itself.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import suites
from .errors import ConfigError, ParseError, WorkbenchError

app = FastAPI(title="twistedmagnus", version="1.0")


class Check(BaseModel):
    name: str
    status: str
    detail: str = ""
    data: dict = Field(default_factory=dict)


class Report(BaseModel):
    schema_: str = Field(alias="schema")
    command: str
    config: dict
    ok: bool
    checks: list[Check]

    model_config = {"populate_by_name": True}


class CheckRequest(BaseModel):
    ring: str = "q"
    deg: int = Field(6, ge=1)
    mu: str = "1"
    g: str = "1"
    tests: list[str] = Field(
        default_factory=lambda: ["quad", "stabW", "stabM", "dmr:stab"]
    )


class CheckPadicRequest(BaseModel):
    p: int = 3
    K: int = Field(3, ge=1)
    deg: int = Field(5, ge=1)
    lam: int = Field(1, alias="lambda")
    f: str = "1"
    tests: list[str] = Field(default_factory=lambda: ["star-roundtrip", "gt"])

    model_config = {"populate_by_name": True}


class SolveLieRequest(BaseModel):
    deg_max: int = Field(5, ge=1)
    conditions: list[str] = Field(default_factory=lambda: ["quad", "stabM"])
    compare: str | None = "primM"
    check_inclusion: str | None = "stabW"


class EnumerateDiscreteRequest(BaseModel):
    maxlen: int = Field(8, ge=0)
    deg: int = Field(6, ge=1)
    seed: int = 0
    count: int = Field(200, ge=0)


class GammaRequest(BaseModel):
    ring: str = "q"
    deg: int = Field(6, ge=1)
    mu: str = "1"
    g: str = "1"


class SuiteRequest(BaseModel):
    name: str
    config: dict = Field(default_factory=dict)


def _run(fn, *args, **kwargs) -> Report:
    try:
        return Report.model_validate(fn(*args, **kwargs))
    except (ConfigError, ParseError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except WorkbenchError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/check", response_model=Report, response_model_by_alias=True)
def check(req: CheckRequest) -> Report:
    return _run(suites.run_check, req.ring, req.deg, req.mu, req.g, req.tests)


@app.post("/check-padic", response_model=Report, response_model_by_alias=True)
def check_padic(req: CheckPadicRequest) -> Report:
    return _run(
        suites.run_check_padic, req.p, req.K, req.deg, req.lam, req.f, req.tests
    )


@app.post("/solve-lie", response_model=Report, response_model_by_alias=True)
def solve_lie(req: SolveLieRequest) -> Report:
    return _run(
        suites.run_solve_lie,
        req.deg_max,
        req.conditions,
        req.compare,
        req.check_inclusion,
    )


@app.post("/enumerate-discrete", response_model=Report, response_model_by_alias=True)
def enumerate_discrete(req: EnumerateDiscreteRequest) -> Report:
    return _run(
        suites.run_enumerate_discrete, req.maxlen, req.deg, req.seed, req.count
    )


@app.post("/gamma", response_model=Report, response_model_by_alias=True)
def gamma(req: GammaRequest) -> Report:
    return _run(suites.run_gamma, req.ring, req.deg, req.mu, req.g)


@app.post("/suite", response_model=Report, response_model_by_alias=True)
def suite(req: SuiteRequest) -> Report:
    return _run(suites.run_suite, req.name, req.config)
