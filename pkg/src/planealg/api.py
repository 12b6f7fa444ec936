"""HTTP service exposing the verification pipelines.

Verification *failures* are data, not transport errors: endpoints return
200 with a report whose checks carry witnesses.  Only unusable requests
(malformed documents, impossible orders) map to 400/422.
"""

from typing import Any, Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import __version__
from . import service


class PlaneDocument(BaseModel):
    """Incidence description: lines as lists of 0-based point indices."""

    num_points: int
    lines: list[list[int]]


class PlaneSource(BaseModel):
    """Either an inline plane document or a field order to build one from."""

    plane: PlaneDocument | None = None
    q: int | None = Field(default=None, description="build the coordinate plane of this order")
    poly: list[int] | None = Field(
        default=None,
        description="monic irreducible polynomial, constant term first (extension orders only)",
    )

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "PlaneSource":
        if (self.plane is None) == (self.q is None):
            raise ValueError("provide exactly one of 'plane' or 'q'")
        return self

    def kwargs(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "poly": self.poly,
            "plane_doc": self.plane.model_dump() if self.plane else None,
        }


class BuildPlaneRequest(BaseModel):
    q: int
    poly: list[int] | None = None


class EnumerateRequest(PlaneSource):
    what: Literal["translations", "dilations"]


class SkewfieldRequest(PlaneSource):
    base_point: int = 0
    oracle: bool = False


class CheckEntry(BaseModel):
    name: str
    status: Literal["pass", "fail"]
    witness: dict[str, Any] | None = None


class Report(BaseModel):
    tool: dict[str, str]
    config: dict[str, Any]
    checks: list[CheckEntry]
    totals: dict[str, int]
    summary: dict[str, Any]
    tables: dict[str, list[list[int]]] | None = None


class ElementEntry(BaseModel):
    perm: list[int]
    fixed_points: list[int]
    direction: int | None = None


class Enumeration(BaseModel):
    tool: dict[str, str]
    config: dict[str, Any]
    what: str
    count: int
    elements: list[ElementEntry]


app = FastAPI(
    title="planealg",
    version=__version__,
    description=(
        "Builds finite affine planes, enumerates their dilations and "
        "translations, and verifies that the trace-preserving endomorphisms "
        "of the translation group form a skew-field."
    ),
)


def _run(fn, *args: Any, **kwargs: Any) -> dict[str, Any]:
    try:
        return fn(*args, **kwargs)
    except service.InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.post("/plane/build", response_model=PlaneDocument)
def build_plane(req: BuildPlaneRequest) -> dict[str, Any]:
    return _run(service.run_build_plane, req.q, req.poly)


@app.post("/plane/check-axioms", response_model=Report, response_model_exclude_none=True)
def check_axioms(req: PlaneSource) -> dict[str, Any]:
    return _run(service.run_check_axioms, **req.kwargs())


@app.post("/enumerate", response_model=Enumeration)
def enumerate_elements(req: EnumerateRequest) -> dict[str, Any]:
    payload = _run(service.run_enumerate, req.what, **req.kwargs())
    if "elements" not in payload:
        # The plane failed its axioms; surface the witness-carrying report.
        raise HTTPException(status_code=400, detail=payload)
    return payload


@app.post("/verify/group", response_model=Report, response_model_exclude_none=True)
def verify_group(req: PlaneSource) -> dict[str, Any]:
    return _run(service.run_verify_group, **req.kwargs())


@app.post("/verify/skewfield", response_model=Report, response_model_exclude_none=True)
def verify_skewfield(req: SkewfieldRequest) -> dict[str, Any]:
    return _run(service.run_verify_skewfield, req.base_point, req.oracle, **req.kwargs())
