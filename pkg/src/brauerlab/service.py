"""Local JSON-over-HTTP service for the explorer UI.

Stateless and idempotent: every request is a pure computation over its own
body, using the same canonical JSON formats and serializer as the CLI, so
responses are byte-identical to CLI output for identical inputs.
"""

from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import BrauerLabError
from .jsonio import dumps, graph_from_json, graph_to_json
from .kauer import KauerMove, OVER_PRED, OVER_SUCC, admissible_moves, apply_move, \
    compare_invariants
from .ribbon import edge_key

DEFAULT_PORT = int(os.environ.get("BRAUERLAB_PORT", "8642"))
DEFAULT_HALF_EDGE_CAP = int(os.environ.get("BRAUERLAB_HALF_EDGE_CAP", "64"))


def _graph(doc, cap: int):
    g = graph_from_json(doc)
    if len(g.graph.half_edges) > cap:
        raise _TooLarge(f"graph exceeds the half-edge cap ({cap})")
    return g


class _TooLarge(Exception):
    pass


def handle(path: str, body: dict | None, cap: int = DEFAULT_HALF_EDGE_CAP) -> tuple[int, dict]:
    """Route one request; returns (status, document)."""
    from .cli import build_report
    try:
        if path == "/health":
            return 200, {"status": "ok"}
        if path == "/graph/validate":
            g = _graph(body, cap)
            report = g.validate()
            if not report.valid:
                first = report.issues[0]
                return 400, {"error": first.code, "message": first.message,
                             "details": report.to_json()}
            return 200, report.to_json()
        if path == "/algebra/build":
            g = _graph(body, cap)
            g.require_valid()
            return 200, build_report(g)
        if path == "/kauer/admissible":
            g = _graph(body["graph"], cap)
            edge = _edge(g, body["edge"])
            return 200, {"moves": [m.to_json() for m in admissible_moves(g, edge)]}
        if path == "/kauer/apply":
            g = _graph(body["graph"], cap)
            move = _move(g, body["move"])
            moved = apply_move(g, move)
            return 200, {"graph": graph_to_json(moved), "report": build_report(moved)}
        if path == "/compare":
            a = _graph(body["left"], cap)
            b = _graph(body["right"], cap)
            return 200, compare_invariants(a, b)
        return 404, {"error": "NotFound", "message": f"no route {path}"}
    except _TooLarge as exc:
        return 413, {"error": "TooLarge", "message": str(exc)}
    except BrauerLabError as exc:
        return 400, exc.to_json()
    except (KeyError, TypeError, ValueError) as exc:
        return 400, {"error": "BadRequest", "message": repr(exc)}


def _edge(g, spec):
    if isinstance(spec, str):
        return g.graph.edge_named(spec)
    return edge_key(*spec)


def _move(g, spec) -> KauerMove:
    edge = _edge(g, spec["edge"])
    dirs = spec.get("directions") or [spec.get("dir", "succ")] * 2
    dirs = tuple(OVER_PRED if str(d).startswith("pred") else OVER_SUCC for d in dirs)
    return KauerMove(edge, dirs)


class Handler(BaseHTTPRequestHandler):
    half_edge_cap = DEFAULT_HALF_EDGE_CAP

    def _reply(self, status: int, doc: dict):
        payload = dumps(doc).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        status, doc = handle(self.path, None, self.half_edge_cap)
        self._reply(status, doc)

    def do_POST(self):
        length = int(self.headers.get("Content-Length", "0"))
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw) if raw else None
        except json.JSONDecodeError as exc:
            self._reply(400, {"error": "BadRequest", "message": str(exc)})
            return
        status, doc = handle(self.path, body, self.half_edge_cap)
        self._reply(status, doc)

    def log_message(self, fmt, *args):  # keep test output quiet
        pass


def make_server(port: int = 0, half_edge_cap: int = DEFAULT_HALF_EDGE_CAP) -> ThreadingHTTPServer:
    handler = type("BoundHandler", (Handler,), {"half_edge_cap": half_edge_cap})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int = DEFAULT_PORT):
    server = make_server(port)
    host, actual_port = server.server_address
    print(f"brauerlab service on http://{host}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
