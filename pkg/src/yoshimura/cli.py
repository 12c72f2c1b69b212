"""Command-line interface.

Angles are degrees on the command line.  Exit codes: 0 success, 1 usage or
input errors, 2 kinematic infeasibility (inadmissible design or state).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import exports, patterns
from .boom import BoomConfiguration, build_chain, build_mesh, shape_metrics
from .configspace import (
    MetricTarget,
    PolylineTarget,
    enumerate_workspace,
    gray_code_plan,
    match_shape,
)
from .documents import ConfigDocument, canonical_json, plan_to_dict
from .errors import (
    AdmissibilityError,
    NoSolutionError,
    ResourceLimitError,
    UnsupportedError,
    YoshimuraError,
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

DEFAULT_PORT_ENV = "YOSHIMURA_PORT"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _sig6(x: float) -> str:
    return f"{x:.6g}"


def _design_from_args(args) -> YoshimuraDesign:
    return YoshimuraDesign(args.n, math.radians(args.beta), args.L)


def cmd_solve(args) -> int:
    design = _design_from_args(args)
    if args.pop_class == "folded":
        fs = solve_folded(design)
        payload = {
            "class": "folded",
            "theta_degrees": math.degrees(fs.theta),
            "h": fs.h,
            "w": fs.w,
            "residuals": {
                "fold": math.tan(design.beta) * math.cos(fs.theta)
                - math.tan(design.flat_fold_beta)
            },
        }
        text = (
            f"folded module (n={design.n}, beta={_sig6(args.beta)} deg, L={_sig6(design.L)})\n"
            f"  theta = {_sig6(payload['theta_degrees'])} deg\n"
            f"  h     = {_sig6(fs.h)}\n"
            f"  w     = {_sig6(fs.w)}"
        )
    elif args.pop_class == "1pop":
        sol = solve_one_pop(design)
        r = one_pop_residuals(design.beta, sol.theta, sol.eta, sol.alpha)
        d = 2.0 * (design.w + 2.0 * design.w * math.sin(sol.theta)) / 3.0 / design.L
        payload = {
            "class": "1pop",
            "theta_degrees": math.degrees(sol.theta),
            "eta_degrees": math.degrees(sol.eta),
            "alpha_degrees": math.degrees(sol.alpha),
            "gamma_degrees": math.degrees(sol.gamma),
            "d": d * design.L,
            "residuals": {"kite": r[0], "edge": r[1], "slant": r[2]},
        }
        text = (
            f"1 pop-out module (n={design.n}, beta={_sig6(args.beta)} deg, L={_sig6(design.L)})\n"
            f"  theta = {_sig6(payload['theta_degrees'])} deg\n"
            f"  eta   = {_sig6(payload['eta_degrees'])} deg\n"
            f"  alpha = {_sig6(payload['alpha_degrees'])} deg\n"
            f"  gamma = {_sig6(payload['gamma_degrees'])} deg\n"
            f"  d     = {_sig6(payload['d'])}"
        )
    else:
        sol = solve_two_pop(design)
        d = 2.0 * (design.w * math.sin(sol.theta) + 2.0 * design.w) / 3.0 / design.L
        payload = {
            "class": "2pop",
            "theta_degrees": math.degrees(sol.theta),
            "gamma_degrees": math.degrees(sol.gamma),
            "d": d * design.L,
            "residuals": {"edge": two_pop_residual(design.beta, sol.theta)},
        }
        text = (
            f"2 pop-out module (n={design.n}, beta={_sig6(args.beta)} deg, L={_sig6(design.L)})\n"
            f"  theta = {_sig6(payload['theta_degrees'])} deg\n"
            f"  gamma = {_sig6(payload['gamma_degrees'])} deg\n"
            f"  d     = {_sig6(payload['d'])}"
        )
    if args.json:
        print(canonical_json(payload), end="")
    else:
        print(text)
    return EXIT_OK


def cmd_chain(args) -> int:
    with open(args.config) as fh:
        doc = ConfigDocument.loads(fh.read())
    boom = doc.boom()
    chain = build_chain(boom)
    metrics = shape_metrics(boom)
    L = boom.design.L
    if args.frames_out:
        with open(args.frames_out, "w") as fh:
            fh.write(exports.frames_to_csv(chain, scale=L))
    if args.mesh_out:
        meshes = build_mesh(boom)
        with open(args.mesh_out, "w") as fh:
            fh.write(exports.mesh_to_obj(meshes, scale=L))
    endpoint = chain.endpoint_position * L
    summary = {
        "modules": len(boom.states),
        "length": metrics.length * L,
        "curvature": metrics.curvature / L if L else metrics.curvature,
        "planar": metrics.planar,
        "endpoint": [float(x) for x in endpoint],
    }
    if args.json:
        print(canonical_json(summary), end="")
    else:
        print(
            f"modules={summary['modules']} length={_sig6(summary['length'])} "
            f"curvature={_sig6(summary['curvature'])} planar={summary['planar']}\n"
            f"endpoint=({', '.join(_sig6(x) for x in summary['endpoint'])})"
        )
    return EXIT_OK


def cmd_workspace(args) -> int:
    design = _design_from_args(args)
    ws = enumerate_workspace(design, args.m, dedup_tol=args.dedup_tol)
    text = (
        exports.workspace_to_json(ws, scale=design.L)
        if args.format == "json"
        else exports.workspace_to_csv(ws, scale=design.L)
    )
    _write_or_print(args.out, text)
    return EXIT_OK


def cmd_graycode(args) -> int:
    plan = gray_code_plan(args.m)
    _write_or_print(args.out, canonical_json(plan_to_dict(plan)))
    return EXIT_OK


def cmd_match(args) -> int:
    design = _design_from_args(args)
    with open(args.target) as fh:
        spec = json.load(fh)
    if "points" in spec:
        target = PolylineTarget(points=tuple(tuple(p) for p in spec["points"]))
    else:
        target = MetricTarget(
            length=spec.get("length"), curvature=spec.get("curvature")
        )
    results = match_shape(
        design,
        args.m,
        target,
        mode=args.mode,
        beam_width=args.beam_width,
        top=args.top,
    )
    data = [
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
    _write_or_print(args.out, canonical_json(data))
    return EXIT_OK


def cmd_pattern(args) -> int:
    design = _design_from_args(args)
    doc = patterns.generate_pattern(design, args.m)
    _write_or_print(args.out, patterns.pattern_to_svg(doc))
    return EXIT_OK


def cmd_serve(args) -> int:
    from .api import serve_api

    serve_api(port=args.port, host=args.host)
    return EXIT_OK


def _write_or_print(path, text) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")


def _add_design_flags(p, beta_required=True):
    p.add_argument("--n", type=int, default=3, help="rhombi per circumference")
    default_beta = None if beta_required else math.degrees(BETA_GOLD)
    p.add_argument(
        "--beta",
        type=float,
        required=beta_required,
        default=default_beta,
        help="sector angle in degrees",
    )
    p.add_argument("--L", type=float, default=1.0, help="valley crease length")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="yoshimura", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one module's kinematics")
    _add_design_flags(p)
    p.add_argument(
        "--class",
        dest="pop_class",
        choices=["folded", "1pop", "2pop"],
        required=True,
        help="pop class to solve",
    )
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("chain", help="compose a boom from a configuration document")
    p.add_argument("config", help="JSON configuration document")
    p.add_argument("--frames-out", help="write interface frames CSV here")
    p.add_argument("--mesh-out", help="write OBJ mesh here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("workspace", help="enumerate reachable endpoints")
    _add_design_flags(p, beta_required=False)
    p.add_argument("--m", type=int, required=True, help="module count")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--dedup-tol", type=float, default=1e-9)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_workspace)

    p = sub.add_parser("graycode", help="single-flip schedule covering all states")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_graycode)

    p = sub.add_parser("match", help="search configurations against a target shape")
    _add_design_flags(p, beta_required=False)
    p.add_argument("--target", required=True, help="JSON target: {length, curvature} or {points}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "beam"], default="exhaustive")
    p.add_argument("--beam-width", type=int)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("pattern", help="flat crease pattern as SVG")
    _add_design_flags(p)
    p.add_argument("--m", type=int, default=1, help="module rows")
    p.add_argument("--out")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("serve", help="run the JSON API")
    p.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get(DEFAULT_PORT_ENV, "8787")),
        help=f"port (default from ${DEFAULT_PORT_ENV} or 8787)",
    )
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except (NoSolutionError, AdmissibilityError, UnsupportedError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ResourceLimitError, YoshimuraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
