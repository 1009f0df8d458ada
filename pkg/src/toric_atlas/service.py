"""Stateless HTTP JSON API over the catalog, decomposition and rendering.

Every request is self-contained (notation and tolerance knobs travel in
the body), handlers are pure over the immutable catalog, and repeated
identical requests return identical bodies.  All 4xx responses carry a
machine-readable ``{"code", "message"}`` object.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from . import entangle, gatecat, qlinalg, render
from .errors import AtlasError, ShapeError, UnitaryError
from .toric import decompose

ComplexPair = tuple[float, float]


class StepRequest(BaseModel):
    state: list[ComplexPair]
    gate_name: str | None = None
    custom_matrix: list[list[ComplexPair]] | None = None
    notation: str = "math"
    tol_class: float = 1e-9


class RenderRequest(BaseModel):
    scene: dict
    width_px: int = 640
    height_px: int = 560


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def _pairs_to_vector(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)


def _vector_to_pairs(v: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in v]


def _resolve_matrix(req: StepRequest, dim: int) -> np.ndarray:
    if (req.gate_name is None) == (req.custom_matrix is None):
        raise AtlasError("provide exactly one of gate_name or custom_matrix")
    if req.custom_matrix is not None:
        m = np.array(
            [[complex(re, im) for re, im in row] for row in req.custom_matrix],
            dtype=np.complex128,
        )
        if m.shape != (dim, dim):
            raise ShapeError(f"custom matrix shape {m.shape} does not act on dim {dim}")
        if not qlinalg.is_unitary(m):
            raise UnitaryError("custom matrix is not unitary")
        return m
    gate = gatecat.get_gate(dim, req.gate_name)
    matrix = gate.matrix
    # frame-neutral radix-4 gates are conjugated into the engineering
    # frame on request; names that pin a frame are applied verbatim
    frame_pinned = gate.name.endswith("_math") or gate.name.endswith("_eng")
    if (
        dim == 4
        and gatecat.Notation(req.notation) is gatecat.Notation.ENGINEERING
        and not frame_pinned
    ):
        matrix = gatecat.to_engineering(matrix)
    return matrix


def create_app(cors_origin: str | None = None) -> FastAPI:
    app = FastAPI(title="toric-atlas service", docs_url=None, redoc_url=None)

    if cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin] if cors_origin != "*" else ["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return _error(422, "validation", str(exc.errors()[:3]))

    @app.exception_handler(AtlasError)
    async def on_atlas_error(request: Request, exc: AtlasError):
        return _error(422 if isinstance(exc, UnitaryError) else 400, exc.code, str(exc))

    @app.get("/api/catalog")
    async def get_catalog(radix: int):
        if radix not in (2, 3, 4):
            return _error(400, "radix", f"radix must be 2, 3 or 4, got {radix}")
        return {"radix": radix, "gates": gatecat.catalog_json(radix)}

    @app.post("/api/state/step")
    async def state_step(req: StepRequest):
        try:
            v = qlinalg.as_state(_pairs_to_vector(req.state))
            matrix = _resolve_matrix(req, v.size)
            new_state = matrix @ v
            new_state = new_state / np.linalg.norm(new_state)
            tp = decompose(new_state)
            payload = {
                "new_state": _vector_to_pairs(new_state),
                "toric_point": tp.to_json(),
                "entanglement_report": None,
            }
            if v.size == 4:
                report = entangle.classify(
                    new_state, tol_class=req.tol_class, notation=req.notation
                )
                payload["entanglement_report"] = report.to_json()
                payload["min_distance_to_separable"] = entangle.min_distance_to_separable(
                    new_state, notation=req.notation
                )
            return payload
        except KeyError as exc:
            return _error(400, "unknown gate", str(exc))
        except AtlasError as exc:
            status = 422 if isinstance(exc, UnitaryError) else 400
            return _error(status, exc.code, str(exc))

    @app.post("/api/render")
    async def render_scene(req: RenderRequest):
        try:
            scene = render.FigureScene.from_json(req.scene)
            svg = render.to_svg(scene, req.width_px, req.height_px)
        except (AtlasError, KeyError, TypeError) as exc:
            code = exc.code if isinstance(exc, AtlasError) else "scene"
            return _error(422, code, str(exc))
        return Response(content=svg, media_type="image/svg+xml")

    @app.get("/api/schema")
    async def get_schema():
        return SCHEMA

    return app


SCHEMA = {
    "state": "list of [re, im] pairs; must be unit norm",
    "toric_point": {
        "convex": "list of probabilities, sums to 1",
        "phases": "list of radians in [0, 2*pi), pivot gauge",
        "defined": "bool mask; false where the probability is ~0",
        "pivot": "index of the first non-vanishing component",
    },
    "gate": {
        "name": "string",
        "radix": "2 | 3 | 4",
        "tags": "sorted list of catalog tags",
        "printed_scalar": "scalar recovering the unitary from the printed form",
        "entries": "row-major [re, im] pairs of the stored unitary",
    },
    "entanglement_report": {
        "concurrence": "2|z00*z11 - z01*z10| in [0, 1]",
        "schmidt": "[lambda1, lambda2], descending singular values",
        "class": "separable | partial | maximal",
        "simplex_on_me_segment": "p00 = p11 and p01 = p10",
        "simplex_on_sep_surface": "p00*p11 = p01*p10",
    },
    "scene": {
        "kind": "simplex | torus_fiber",
        "radix": "2 | 3 | 4",
        "geometry_mode": "unit | affine",
        "fiber_base": "{coords: [...]} for torus_fiber scenes",
        "marks": "[{position, label, style}]",
        "segments": "[[position, position]]",
    },
    "endpoints": {
        "GET /api/catalog?radix=R": "full gate catalog",
        "POST /api/state/step": "apply gate_name or custom_matrix to state",
        "POST /api/render": "scene -> image/svg+xml",
        "GET /api/schema": "this document",
    },
}
