"""Stateless JSON-over-HTTP API, versioned under /v1.

Every response is a pure function of the request body.  Heavy enumerations
run under a bounded semaphore so concurrent exhaustive searches cannot pile
up.  Status codes: 400 malformed/invalid input, 404 unknown route, 413 state
cap exceeded, 422 kinematically infeasible.
"""

from __future__ import annotations

import json
import math
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .boom import build_chain, build_mesh, shape_metrics
from .configspace import (
    MetricTarget,
    PolylineTarget,
    enumerate_workspace,
    gray_code_plan,
    match_shape,
)
from .documents import ConfigDocument
from .errors import (
    AdmissibilityError,
    NoSolutionError,
    ResourceLimitError,
    UnsupportedError,
)
from .geometry import BETA_GOLD
from .kinematics import (
    YoshimuraDesign,
    one_pop_residuals,
    solve_folded,
    solve_one_pop,
    solve_two_pop,
    two_pop_residual,
)

API_PREFIX = "/v1"

#: Cap on concurrently running enumerations/searches.
MAX_HEAVY_WORKERS = 4

_heavy = threading.Semaphore(MAX_HEAVY_WORKERS)


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status


def _design_from_payload(data) -> YoshimuraDesign:
    try:
        n = int(data.get("n", 3))
        beta_degrees = float(data["beta_degrees"])
        L = float(data.get("L", 1.0))
    except (KeyError, TypeError, ValueError) as exc:
        raise ApiError(400, f"invalid design: {exc}") from exc
    try:
        return YoshimuraDesign(n, math.radians(beta_degrees), L)
    except ValueError as exc:
        raise ApiError(400, str(exc)) from exc


def handle_design(_query) -> dict:
    return {
        "n": 3,
        "beta_degrees": math.degrees(BETA_GOLD),
        "L": 1.0,
        "beta_gold_degrees": math.degrees(BETA_GOLD),
    }


def handle_solve(data) -> dict:
    design = _design_from_payload(data)
    pop_class = data.get("class") or data.get("pop_class")
    if pop_class == "folded":
        fs = solve_folded(design)
        return {
            "class": "folded",
            "theta_degrees": math.degrees(fs.theta),
            "h": fs.h,
            "w": fs.w,
            "residuals": {
                "fold": math.tan(design.beta) * math.cos(fs.theta)
                - math.tan(design.flat_fold_beta)
            },
        }
    if pop_class == "1pop":
        sol = solve_one_pop(design)
        r = one_pop_residuals(design.beta, sol.theta, sol.eta, sol.alpha)
        return {
            "class": "1pop",
            "theta_degrees": math.degrees(sol.theta),
            "eta_degrees": math.degrees(sol.eta),
            "alpha_degrees": math.degrees(sol.alpha),
            "gamma_degrees": math.degrees(sol.gamma),
            "residuals": {"kite": r[0], "edge": r[1], "slant": r[2]},
        }
    if pop_class == "2pop":
        sol = solve_two_pop(design)
        return {
            "class": "2pop",
            "theta_degrees": math.degrees(sol.theta),
            "gamma_degrees": math.degrees(sol.gamma),
            "residuals": {"edge": two_pop_residual(design.beta, sol.theta)},
        }
    raise ApiError(400, f"class must be folded, 1pop or 2pop, got {pop_class!r}")


def _solver_residuals(boom) -> dict:
    worst = 0.0
    for state in set(boom.states):
        if state.pop_count == 1:
            sol = solve_one_pop(boom.design)
            worst = max(
                worst,
                max(
                    abs(x)
                    for x in one_pop_residuals(
                        boom.design.beta, sol.theta, sol.eta, sol.alpha
                    )
                ),
            )
        elif state.pop_count == 2:
            sol = solve_two_pop(boom.design)
            worst = max(worst, abs(two_pop_residual(boom.design.beta, sol.theta)))
    return {"max_solver_residual": worst}


def handle_chain(data) -> dict:
    try:
        doc = ConfigDocument.from_dict(data)
        boom = doc.boom()
    except ValueError as exc:
        raise ApiError(400, str(exc)) from exc
    chain = build_chain(boom)
    metrics = shape_metrics(boom)
    meshes = build_mesh(boom)
    L = boom.design.L
    return {
        "metrics": {
            "length": metrics.length * L,
            "curvature": metrics.curvature / L,
            "planar": metrics.planar,
        },
        "frames": [[float(x) for x in f.reshape(-1)] for f in chain.frames],
        "endpoint": [float(x) * L for x in chain.endpoint_position],
        "mesh": {
            "modules": [
                {
                    "index": mesh.index,
                    "state": boom.states[mesh.index - 1].to_string(),
                    "vertices": {
                        lbl: [float(c) * L for c in p] for lbl, p in mesh.vertices.items()
                    },
                    "facets": [
                        {"labels": list(tri), "rhombus": rh} for tri, rh in mesh.facets
                    ],
                }
                for mesh in meshes
            ]
        },
        "residuals": _solver_residuals(boom),
    }


def handle_workspace(query) -> dict:
    try:
        m = int(query.get("m", ["1"])[0])
        beta_degrees = float(query.get("beta_degrees", [math.degrees(BETA_GOLD)])[0])
        n = int(query.get("n", ["3"])[0])
        L = float(query.get("L", ["1.0"])[0])
        dedup = float(query.get("dedup_tol", ["1e-9"])[0])
    except (TypeError, ValueError) as exc:
        raise ApiError(400, f"invalid query: {exc}") from exc
    design = _design_from_payload({"n": n, "beta_degrees": beta_degrees, "L": L})
    with _heavy:
        ws = enumerate_workspace(design, m, dedup_tol=dedup)
    return {
        "m": ws.m,
        "raw_count": ws.raw_count,
        "points": [
            {
                "word": p.word,
                "position": [c * design.L for c in p.position],
                "multiplicity": p.multiplicity,
            }
            for p in ws.points
        ],
    }


def handle_graycode(data) -> dict:
    try:
        m = int(data["m"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ApiError(400, f"invalid body: {exc}") from exc
    with _heavy:
        plan = gray_code_plan(m)
    return {
        "sequence": plan.sequence,
        "flips": [{"module": mod, "bit": bit} for mod, bit in plan.flips],
        "state_count": len(plan.sequence),
        "flip_count": plan.flip_count,
    }


def handle_match(data) -> dict:
    design = _design_from_payload(data.get("design", {"beta_degrees": math.degrees(BETA_GOLD)}))
    try:
        m = int(data["m"])
        tgt = data["target"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ApiError(400, f"invalid body: {exc}") from exc
    if "points" in tgt:
        target = PolylineTarget(points=tuple(tuple(float(c) for c in p) for p in tgt["points"]))
    else:
        target = MetricTarget(length=tgt.get("length"), curvature=tgt.get("curvature"))
    mode = data.get("mode", "exhaustive")
    beam_width = data.get("beam_width")
    top = data.get("top", 10)
    with _heavy:
        results = match_shape(design, m, target, mode=mode, beam_width=beam_width, top=top)
    return {
        "results": [
            {
                "rank": i + 1,
                "states": [s.to_string() for s in res.config.states],
                "score": res.score,
                "length": res.length,
                "curvature": res.curvature,
                "planar": res.planar,
            }
            for i, res in enumerate(results)
        ]
    }


GET_ROUTES = {
    "/design": handle_design,
    "/workspace": handle_workspace,
}

POST_ROUTES = {
    "/solve": handle_solve,
    "/chain": handle_chain,
    "/graycode": handle_graycode,
    "/match": handle_match,
}


class _Handler(BaseHTTPRequestHandler):
    server_version = "yoshimura-api/0.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _dispatch(self, routes, payload) -> None:
        parsed = urlparse(self.path)
        if not parsed.path.startswith(API_PREFIX):
            self._send(404, {"error": "unknown route"})
            return
        route = routes.get(parsed.path[len(API_PREFIX):])
        if route is None:
            self._send(404, {"error": f"unknown route {parsed.path}"})
            return
        try:
            arg = payload if payload is not None else parse_qs(parsed.query)
            self._send(200, route(arg))
        except ApiError as exc:
            self._send(exc.status, {"error": str(exc)})
        except (NoSolutionError, AdmissibilityError, UnsupportedError) as exc:
            self._send(422, {"error": str(exc)})
        except ResourceLimitError as exc:
            self._send(413, {"error": str(exc)})
        except (ValueError, TypeError, KeyError) as exc:
            self._send(400, {"error": str(exc)})

    def do_GET(self):
        self._dispatch(GET_ROUTES, None)

    def do_POST(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            payload = json.loads(raw or b"{}")
        except json.JSONDecodeError as exc:
            self._send(400, {"error": f"malformed JSON body: {exc}"})
            return
        self._dispatch(POST_ROUTES, payload)

    def do_OPTIONS(self):
        self._send(200, {})


def make_server(port: int = 8787, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), _Handler)


def serve_api(port: int = 8787, host: str = "127.0.0.1") -> None:
    server = make_server(port=port, host=host)
    print(f"serving on http://{host}:{port}{API_PREFIX}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
