"""HTTP service exposing the package operations.

Run with ``uvicorn scatalan.api:app``.  Every endpoint takes and returns
JSON; errors carry a machine-readable code so clients can map them to exit
statuses.  Responses are deterministic: identical requests produce identical
bodies.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import __version__, service

app = FastAPI(title="scatalan", version=__version__)


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except service.ServiceError as exc:
        raise HTTPException(status_code=400, detail={"code": exc.code, "message": exc.message})


class CountRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    signature: str
    all_methods: bool = False
    cap: int | None = Field(default=None, gt=0)


class CountResponse(BaseModel):
    signature: str
    count: int
    methods: dict[str, int] | None = None
    agree: bool | None = None


class ListRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    family: str
    signature: str
    cap: int | None = Field(default=None, gt=0)
    format: str = "text"


class ListResponse(BaseModel):
    family: str
    signature: str
    count: int
    items: list


class ConvertRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    from_family: str
    to_family: str
    object: str
    signature: str


class ConvertResponse(BaseModel):
    from_family: str = Field(alias="from")
    to_family: str = Field(alias="to")
    signature: str
    object: str
    model_config = ConfigDict(populate_by_name=True)


class RationalRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    a: int = Field(gt=0)
    b: int = Field(gt=0)


class RationalResponse(BaseModel):
    a: int
    b: int
    signature: str


class NarayanaRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    signature: str
    statistic: str = "all"


class NarayanaResponse(BaseModel):
    signature: str
    distributions: dict[str, dict[str, int]]
    total: int | None
    agree: bool


class ParkingCountRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    mu: str


class ParkingCountResponse(BaseModel):
    mu: str
    count: int


class ParkingListRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    mu: str
    cap: int | None = Field(default=None, gt=0)


class ParkingListResponse(BaseModel):
    mu: str
    count: int
    items: list[str]


class ArwCompareRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    a: int = Field(gt=0)
    b: int = Field(gt=0)
    mu: str | None = None
    all_paths: bool = False
    cap: int | None = Field(default=None, gt=0)


class ArwReport(BaseModel):
    a: int
    b: int
    mu: list[int]
    arw: str
    arw_block_sizes: list[int]
    ours: str | None
    equal: bool | None


class ArwCompareResponse(BaseModel):
    a: int
    b: int
    signature: str
    reports: list[ArwReport]


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    max_weight: int = Field(ge=0)
    rational_only: bool = False
    cap: int | None = Field(default=None, gt=0)


class VerifyRow(BaseModel):
    signature: str
    count: int
    counts: dict[str, int]
    failures: list[str]
    ok: bool


class VerifyResponse(BaseModel):
    max_weight: int
    rational_only: bool
    rows: list[VerifyRow]
    ok: bool


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest):
    return _run(service.cmd_count, req.signature, req.all_methods, req.cap)


@app.post("/list", response_model=ListResponse)
def list_family(req: ListRequest):
    return _run(service.cmd_list, req.family, req.signature, req.cap, req.format)


@app.post("/convert", response_model=ConvertResponse)
def convert(req: ConvertRequest):
    return _run(service.cmd_convert, req.from_family, req.to_family, req.object, req.signature)


@app.post("/rational", response_model=RationalResponse)
def rational(req: RationalRequest):
    return _run(service.cmd_rational, req.a, req.b)


@app.post("/narayana", response_model=NarayanaResponse)
def narayana(req: NarayanaRequest):
    return _run(service.cmd_narayana, req.signature, req.statistic)


@app.post("/parking/count", response_model=ParkingCountResponse)
def parking_count(req: ParkingCountRequest):
    return _run(service.cmd_parking_count, req.mu)


@app.post("/parking/list", response_model=ParkingListResponse)
def parking_list(req: ParkingListRequest):
    return _run(service.cmd_parking_list, req.mu, req.cap)


@app.post("/arw-compare", response_model=ArwCompareResponse)
def arw_compare(req: ArwCompareRequest):
    return _run(service.cmd_arw_compare, req.a, req.b, req.mu, req.all_paths, req.cap)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    return _run(service.cmd_verify, req.max_weight, req.rational_only, req.cap)
