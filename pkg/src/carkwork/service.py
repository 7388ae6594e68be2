"""Stateless HTTP JSON service.

Each endpoint returns exactly the document the matching CLI subcommand
prints.  Domain errors become 422 responses carrying {"code", "message"};
malformed queries become 400.  The only shared mutable state is a
size-bounded cache of cark expansions, which is correctness-neutral.
"""

from __future__ import annotations

from functools import lru_cache

from fastapi import FastAPI, Query, Request
from fastapi.responses import Response

from . import cli, jsonio
from .errors import DomainError

app = FastAPI(title="carkwork")


def _json_response(payload: dict, status: int = 200) -> Response:
    return Response(jsonio.dumps(payload), status_code=status, media_type="application/json")


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError) -> Response:
    return _json_response(jsonio.error_json(exc), status=422)


@app.exception_handler(ValueError)
async def _bad_request(request: Request, exc: ValueError) -> Response:
    return _json_response({"code": "bad_request", "message": str(exc)}, status=400)


@lru_cache(maxsize=256)
def _cached_cark(form_text: str, depth: int) -> str:
    return jsonio.dumps(cli.cark_payload(jsonio.parse_form(form_text), depth))


@app.get("/sunburst")
def sunburst(depth: int = 8, center: str = "") -> Response:
    return _json_response(cli.sunburst_payload(depth, center))


@app.get("/cark")
def cark(form: str, depth: int = 1) -> Response:
    return Response(_cached_cark(form, depth), media_type="application/json")


@app.get("/spine")
def spine(form: str) -> Response:
    return _json_response(cli.spine_payload(jsonio.parse_form(form)))


@app.get("/signature")
def signature(form: str) -> Response:
    return _json_response(cli.signature_payload(jsonio.parse_form(form)))


@app.get("/geodesic")
def geodesic(
    form: str,
    model: str = Query("h", pattern="^(h|disk)$"),
    samples: int = 64,
) -> Response:
    return _json_response(cli.geodesic_payload(jsonio.parse_form(form), model, samples))


@app.get("/solve")
def solve(form: str, n: int, count: int = 1) -> Response:
    return _json_response(cli.solve_payload(jsonio.parse_form(form), n, count))


@app.get("/reduce")
def reduce(form: str, method: str = Query("gauss", pattern="^(gauss|cark|lagrange)$")) -> Response:
    return _json_response(cli.reduce_payload(jsonio.parse_form(form), method))


def run_service(port: int) -> None:
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=port)
