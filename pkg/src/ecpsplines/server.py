"""Minimal stateless HTTP service wrapping the pipeline for the design UI."""

from __future__ import annotations

import os

import numpy as np
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .basis import bernstein_basis, sample_basis, sample_curve
from .errors import ComputationError, EngineError, SpecError
from .sections import critical_length_table
from .spaces import space_from_spec
from .suitability import check_space
from .transitions import compute_transitions
from .weights import weight_samples

TOKEN_GRAMMAR = ["1", "x", "x^K", "cos", "sin", "cosh", "sinh",
                 "x*cos", "x*sin", "exp(A)"]


def create_app() -> FastAPI:
    app = FastAPI(title="ecpsplines design server")
    origin = os.environ.get("ECP_ALLOW_ORIGIN")
    if origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def error_response(exc: Exception, status: int) -> JSONResponse:
        return JSONResponse(status_code=status, content={"error": str(exc)})

    @app.post("/api/check")
    async def api_check(request: Request):
        body = await _json_body(request)
        if isinstance(body, JSONResponse):
            return body
        seq = body.get("seq")
        try:
            space = space_from_spec(body)
            report = check_space(space, tol=float(body.get("tol", 1.0)))
        except SpecError as exc:
            return error_response(exc, 422)
        except EngineError as exc:
            return error_response(exc, 500)
        payload = report.to_json()
        payload["seq"] = seq
        return JSONResponse(payload)

    @app.post("/api/curve")
    async def api_curve(request: Request):
        body = await _json_body(request)
        if isinstance(body, JSONResponse):
            return body
        seq = body.get("seq")
        control = body.get("control")
        samples = body.get("samples", 100)
        try:
            if not isinstance(control, list) or not control:
                raise SpecError('"control" must be a non-empty list of points')
            samples = int(samples)
            if samples < 2:
                raise SpecError('"samples" must be >= 2')
            space = space_from_spec(body)
            polygon = np.array(control, dtype=float)
            if polygon.ndim != 2 or polygon.shape[0] != space.dimension:
                raise SpecError(
                    f'"control" must be {space.dimension} points of equal '
                    "dimension"
                )
            transitions = compute_transitions(space)
            basis = bernstein_basis(transitions)
            curve = sample_curve(basis, polygon, samples)
            table = sample_basis(basis, samples)
            weights = weight_samples(transitions, samples)
        except SpecError as exc:
            return error_response(exc, 422)
        except ComputationError as exc:
            return error_response(exc, 422)
        except EngineError as exc:
            return error_response(exc, 500)
        return JSONResponse({
            "seq": seq,
            "t": curve["t"].tolist(),
            "side": list(curve["side"]),
            "points": curve["points"].tolist(),
            "basis": table["values"].tolist(),
            "weights": [
                {"level": s.level, "x": s.x.tolist(),
                 "side": list(s.side), "values": s.values.tolist()}
                for s in weights
            ],
        })

    @app.get("/api/catalog")
    async def api_catalog():
        return JSONResponse({
            "tokens": TOKEN_GRAMMAR,
            "critical_lengths": critical_length_table(),
        })

    return app


async def _json_body(request: Request):
    try:
        body = await request.json()
    except Exception:
        return JSONResponse(status_code=422,
                            content={"error": "request body is not valid JSON"})
    if not isinstance(body, dict):
        return JSONResponse(status_code=422,
                            content={"error": "request body must be a JSON object"})
    return body


app = create_app()


def main() -> None:
    import uvicorn

    bind = os.environ.get("ECP_BIND", "127.0.0.1:8080")
    host, _, port = bind.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


if __name__ == "__main__":
    main()
