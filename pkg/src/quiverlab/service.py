"""HTTP JSON facade; same documents, byte for byte, as the CLI.

Endpoints:
  POST /api/mutate               {"quiver": {...}, "vertex": k}
  POST /api/search/acyclic       {"quiver": {...} | "seed": "builtin:x",
                                  "max_depth"?, "max_nodes"?}
  GET  /api/seed/{name}          builtin seed as a quiver document (the
                                 browser client's single source of truth)
  GET  /api/model/{name}         named preset model dump
  POST /api/model/build          {"seed"|"quiver", "auto": {"tau","s"}, "name"?}
  GET  /api/model/{name}/ar.dot  DOT of the model's AR quiver

Handlers are stateless except for the immutable model cache; malformed
bodies get 400 with an error document, unknown models 404, internal
inconsistencies 500.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import jobs
from .derived import AutoWord
from .hereditary import InternalInconsistencyError
from .quiver import Quiver, QuiverError
from .schemas import canonical_json
from .search import SearchLimits
from .seeds import MODEL_PRESETS, builtin_seed


def _json_response(document: dict, status: int = 200) -> Response:
    return Response(content=canonical_json(document), status_code=status,
                    media_type="application/json")


def _error(message: str, status: int) -> Response:
    return _json_response(jobs.error_document(message), status)


def _body_quiver(body: dict) -> Quiver:
    if "quiver" in body:
        return Quiver.from_json(body["quiver"])
    if "seed" in body:
        return builtin_seed(str(body["seed"]))
    raise QuiverError('request needs "quiver" or "seed"')


def create_app() -> FastAPI:
    app = FastAPI(title="quiverlab", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])
    store = jobs.ModelStore()

    async def _payload(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception as err:
            raise QuiverError(f"request body is not valid JSON: {err}") from err
        if not isinstance(body, dict):
            raise QuiverError("request body must be a JSON object")
        return body

    @app.post("/api/mutate")
    async def mutate(request: Request):
        try:
            body = await _payload(request)
            quiver = _body_quiver(body)
            if "vertex" not in body:
                raise QuiverError('request needs "vertex"')
            return _json_response(jobs.mutate_document(quiver, int(body["vertex"])))
        except (QuiverError, ValueError, TypeError) as err:
            return _error(str(err), 400)
        except InternalInconsistencyError as err:
            return _error(f"internal inconsistency: {err}", 500)

    @app.post("/api/search/acyclic")
    async def search_acyclic(request: Request):
        try:
            body = await _payload(request)
            quiver = _body_quiver(body)
            limits = SearchLimits(
                max_depth=int(body.get("max_depth", 10)),
                max_nodes=int(body.get("max_nodes", 100_000)),
            )
            return _json_response(jobs.find_acyclic_document(quiver, limits))
        except (QuiverError, ValueError, TypeError) as err:
            return _error(str(err), 400)
        except InternalInconsistencyError as err:
            return _error(f"internal inconsistency: {err}", 500)

    @app.get("/api/seed/{name}")
    async def get_seed(name: str):
        try:
            return _json_response(jobs.quiver_document(builtin_seed(name)))
        except QuiverError as err:
            return _error(str(err), 404)

    @app.get("/api/model/{name}")
    async def get_model(name: str):
        if name not in MODEL_PRESETS:
            return _error(f"unknown model {name!r}", 404)
        try:
            return _json_response(jobs.model_document(store.get(name), name))
        except QuiverError as err:
            return _error(str(err), 400)
        except InternalInconsistencyError as err:
            return _error(f"internal inconsistency: {err}", 500)

    @app.post("/api/model/build")
    async def build_model(request: Request):
        try:
            body = await _payload(request)
            quiver = _body_quiver(body)
            auto = body.get("auto")
            if not isinstance(auto, dict) or "tau" not in auto or "s" not in auto:
                raise QuiverError('request needs "auto": {"tau": a, "s": b}')
            name = body.get("name")
            model = store.build(quiver, AutoWord(int(auto["tau"]), int(auto["s"])),
                                str(name) if name is not None else None)
            return _json_response(jobs.model_document(model, name))
        except (QuiverError, ValueError, TypeError) as err:
            return _error(str(err), 400)
        except InternalInconsistencyError as err:
            return _error(f"internal inconsistency: {err}", 500)

    @app.get("/api/model/{name}/ar.dot")
    async def model_ar_dot(name: str):
        if name not in MODEL_PRESETS:
            return _error(f"unknown model {name!r}", 404)
        try:
            text = jobs.model_ar_dot(store.get(name), name.replace("-", "_"))
            return Response(content=text, media_type="text/vnd.graphviz")
        except QuiverError as err:
            return _error(str(err), 400)
        except InternalInconsistencyError as err:
            return _error(f"internal inconsistency: {err}", 500)

    return app


def serve_http(port: int | None = None, host: str = "127.0.0.1") -> None:
    """Run the service; the port defaults to $QUIVERLAB_PORT or 8406."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("QUIVERLAB_PORT", "8406"))
    uvicorn.run(create_app(), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    serve_http()
