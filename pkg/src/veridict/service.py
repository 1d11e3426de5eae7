"""JSON-over-HTTP API exposing the taxonomy, scorer and derivations.

Stateless: one immutable taxonomy is loaded at startup and shared across
requests. Every error response carries a machine-readable {code, message,
parameter?} object; internals never leak.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import derivation, scoring
from .errors import MissingParameterError, SelectionError
from .taxonomy import (
    Taxonomy,
    builtin_taxonomy,
    format_percent,
    resolve_selection,
    serialize_taxonomy,
)

_SCORE_FIELDS = {"selections", "phase"}


def _error(status: int, code: str, message: str, parameter: str | None = None) -> JSONResponse:
    body: dict = {"code": code, "message": message}
    if parameter is not None:
        body["parameter"] = parameter
    return JSONResponse(status_code=status, content=body)


def create_app(taxonomy: Taxonomy | None = None, default_phase: int = 1) -> FastAPI:
    """Build the service around one validated taxonomy (builtin by default)."""
    taxonomy = taxonomy if taxonomy is not None else builtin_taxonomy()
    taxonomy_bytes = serialize_taxonomy(taxonomy)

    app = FastAPI(title="veridict", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.exception_handler(Exception)
    async def _internal_error(request: Request, exc: Exception) -> JSONResponse:
        return _error(500, "internal_error", "internal error")

    @app.get("/healthz")
    async def healthz() -> dict:
        return {"status": "ok", "taxonomy_version": taxonomy.version}

    @app.get("/api/v1/taxonomy")
    async def get_taxonomy() -> Response:
        return Response(content=taxonomy_bytes, media_type="application/json")

    @app.post("/api/v1/score")
    async def post_score(request: Request) -> JSONResponse:
        try:
            payload = json.loads(await request.body())
        except json.JSONDecodeError:
            return _error(400, "invalid_json", "request body is not valid JSON")
        if not isinstance(payload, dict):
            return _error(400, "invalid_request", "request body must be a JSON object")
        unknown = sorted(set(payload) - _SCORE_FIELDS)
        if unknown:
            return _error(400, "unknown_field", f"unknown request fields: {', '.join(unknown)}")

        selections = payload.get("selections")
        if not isinstance(selections, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in selections.items()
        ):
            return _error(
                400, "invalid_selections",
                "selections must be an object mapping parameter ids to option ids",
            )
        phase = payload.get("phase", default_phase)
        if isinstance(phase, bool) or not isinstance(phase, int) or not 1 <= phase <= 4:
            return _error(400, "phase_out_of_range", f"phase out of range (expected 1..4): {phase}")

        try:
            selection = resolve_selection(taxonomy, selections, phase=phase)
        except MissingParameterError as exc:
            return _error(422, exc.code, str(exc), parameter=exc.parameter)
        except SelectionError as exc:
            return _error(400, exc.code, str(exc), parameter=exc.parameter)

        explanation = scoring.explain(taxonomy, selection)
        return JSONResponse(
            content={
                "score_percent": explanation.display_percent,
                "verdict": explanation.verdict.value,
                "contributions": [
                    {
                        "parameter": c.parameter,
                        "option": c.option,
                        "weight_percent": format_percent(c.weight),
                    }
                    for c in explanation.contributions
                ],
                "what_if": [
                    {"parameter": w.parameter, "option": w.option, "verdict": w.verdict.value}
                    for w in explanation.what_if
                ],
            }
        )

    @app.post("/api/v1/derive/{scheme}")
    async def post_derive(scheme: str, request: Request) -> JSONResponse:
        rating_scheme = derivation.SCHEMES.get(scheme)
        if rating_scheme is None:
            return _error(
                400, "unknown_scheme",
                f"unknown scheme {scheme!r} (valid: {', '.join(derivation.SCHEMES)})",
            )
        try:
            payload = json.loads(await request.body())
        except json.JSONDecodeError:
            return _error(400, "invalid_json", "request body is not valid JSON")
        if not isinstance(payload, list) or not all(isinstance(t, str) for t in payload):
            return _error(400, "invalid_ratings", "request body must be a JSON array of rating tokens")
        try:
            ratings = derivation.parse_ratings(rating_scheme, payload)
        except ValueError as exc:
            return _error(400, "invalid_ratings", str(exc))
        total = derivation.aggregate(ratings)
        level = derivation.classify_level(total)
        return JSONResponse(
            content={"total_percent": format_percent(total), "level": level.value}
        )

    return app
