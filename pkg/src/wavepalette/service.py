"""Stateless HTTP API over the palette engine.

GET endpoints with query parameters only: every response is a pure function
of (engine version, CMF dataset, query), carries a strong ETag derived from
exactly those, and is byte-identical to the CLI's JSON for the same inputs.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import sys
import time
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import __version__
from .cmf_data import load_default_cmf
from .colorspace import parse_hex
from .palette import UnsupportedPaperLevelError, custom_ratio_palette, palette_for_color
from .serialize import consonance_payload, palette_payload, to_json
from .wavemodel import CrossingParams, Mixture, Ratio, synchronized_zero_count

STATIC_ENV_VAR = "WAVEPALETTE_STATIC"
CORS_ENV_VAR = "WAVEPALETTE_CORS_ORIGINS"

logger = logging.getLogger("wavepalette.service")


class FieldError(ValueError):
    """Validation failure attributable to one query field."""

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


def _bad_request(exc: FieldError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": {"field": exc.field, "message": str(exc)}},
    )


def _etag(cmf_dataset: str, query: str) -> str:
    digest = hashlib.sha256(
        f"{__version__}|{cmf_dataset}|{query}".encode()
    ).hexdigest()
    return f'"{digest[:32]}"'


def _parse_int(field: str, raw: str, minimum: int) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise FieldError(field, f"{field} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise FieldError(field, f"{field} must be >= {minimum}, got {value}")
    return value


def _parse_float(field: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise FieldError(field, f"{field} must be a number, got {raw!r}") from None


def create_app(static_dir: str | None = None, cors_origins: str | None = None) -> FastAPI:
    @asynccontextmanager
    async def lifespan(app: FastAPI):
        app.state.table = load_default_cmf()
        yield

    app = FastAPI(title="wavepalette", version=__version__, lifespan=lifespan)

    origins = cors_origins if cors_origins is not None else os.environ.get(CORS_ENV_VAR, "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in origins.split(",")],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def log_requests(request: Request, call_next):
        start = time.perf_counter()
        response = await call_next(request)
        logger.info(
            json.dumps(
                {
                    "method": request.method,
                    "path": request.url.path,
                    "query": str(request.url.query),
                    "status": response.status_code,
                    "duration_ms": round((time.perf_counter() - start) * 1000, 3),
                }
            )
        )
        return response

    def table_or_none(request: Request):
        return getattr(request.app.state, "table", None)

    @app.get("/healthz")
    def healthz(request: Request):
        table = table_or_none(request)
        if table is None:
            return JSONResponse(
                status_code=503, content={"status": "loading"}
            )
        return JSONResponse(
            content={
                "status": "ok",
                "engine_version": __version__,
                "cmf_dataset": table.dataset_id,
            }
        )

    @app.get("/api/v1/palette")
    def palette_endpoint(
        request: Request,
        color: str | None = None,
        levels: str = "2",
        mode: str = "derived",
        space: str = "linear",
        ratios: str | None = None,
    ):
        table = table_or_none(request)
        if table is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        try:
            if color is None:
                raise FieldError("color", "color is required (hex #rrggbb)")
            try:
                base = parse_hex(color)
            except ValueError as exc:
                raise FieldError("color", str(exc)) from None
            if mode not in ("paper", "derived"):
                raise FieldError("mode", f"mode must be paper or derived, got {mode!r}")
            if space not in ("linear", "encoded"):
                raise FieldError("space", f"space must be linear or encoded, got {space!r}")
            n_levels = _parse_int("levels", levels, minimum=1)
            if mode == "paper" and n_levels > 2:
                raise FieldError("levels", "paper mode publishes levels 1 and 2 only")
            if ratios is not None:
                if mode == "paper":
                    raise FieldError("mode", "custom ratios need mode=derived")
                try:
                    ratio_list = [
                        Ratio.parse(tok) for tok in ratios.split(",") if tok.strip()
                    ]
                except ValueError as exc:
                    raise FieldError("ratios", str(exc)) from None
                if not ratio_list:
                    raise FieldError("ratios", "empty ratio list")
                result = custom_ratio_palette(base, ratio_list, space=space, table=table)
            else:
                result = palette_for_color(
                    base, n_levels, mode=mode, space=space, table=table
                )
        except FieldError as exc:
            return _bad_request(exc)
        except UnsupportedPaperLevelError as exc:
            return _bad_request(FieldError("levels", str(exc)))

        body = to_json(palette_payload(result, mode, table.dataset_id))
        return Response(
            content=body,
            media_type="application/json",
            headers={"ETag": _etag(table.dataset_id, str(request.url.query))},
        )

    @app.get("/api/v1/consonance")
    def consonance_endpoint(
        request: Request,
        a: str | None = None,
        b: str | None = None,
        domain: str = "10000",
        step: str = "0.1",
        epsilon: str = "0.01",
    ):
        table = table_or_none(request)
        if table is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        try:
            if not a:
                raise FieldError("a", "mixture spec a is required (a@lambda,...)")
            if not b:
                raise FieldError("b", "mixture spec b is required (a@lambda,...)")
            try:
                mix_a = Mixture.parse(a)
            except ValueError as exc:
                raise FieldError("a", str(exc)) from None
            try:
                mix_b = Mixture.parse(b)
            except ValueError as exc:
                raise FieldError("b", str(exc)) from None
            try:
                params = CrossingParams(
                    domain_end=_parse_float("domain", domain),
                    step=_parse_float("step", step),
                    epsilon=_parse_float("epsilon", epsilon),
                )
            except FieldError:
                raise
            except ValueError as exc:
                raise FieldError("params", str(exc)) from None
        except FieldError as exc:
            return _bad_request(exc)

        count, density = synchronized_zero_count(mix_a, mix_b, params)
        body = to_json(consonance_payload(mix_a, mix_b, count, density, params))
        return Response(
            content=body,
            media_type="application/json",
            headers={"ETag": _etag(table.dataset_id, str(request.url.query))},
        )

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception):
        logger.error(
            json.dumps({"path": request.url.path, "error": type(exc).__name__})
        )
        return JSONResponse(
            status_code=500, content={"error": {"message": "internal error"}}
        )

    static = static_dir if static_dir is not None else os.environ.get(STATIC_ENV_VAR)
    if static:
        app.mount("/", StaticFiles(directory=static, html=True), name="ui")

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.setLevel(logging.INFO)

    return app
