#!/usr/bin/env python3
"""Build a demo arc boom and export everything: OBJ mesh, frames CSV, pattern SVG."""

import argparse
import math

from yoshimura import BETA_GOLD, BoomConfiguration, YoshimuraDesign, build_chain, build_mesh, shape_metrics
from yoshimura.exports import frames_to_csv, mesh_to_obj
from yoshimura.patterns import generate_pattern, pattern_to_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--states", nargs="+", default=["001", "001", "001", "111", "111"])
    ap.add_argument("--L", type=float, default=100.0, help="valley length, mm")
    ap.add_argument("--prefix", default="demo_")
    args = ap.parse_args()

    design = YoshimuraDesign(3, BETA_GOLD, args.L)
    boom = BoomConfiguration.from_words(design, args.states)
    metrics = shape_metrics(boom)
    print(
        f"{len(args.states)} modules: length {metrics.length * args.L:.2f} mm, "
        f"curvature {metrics.curvature / args.L:.5f} 1/mm, planar={metrics.planar}"
    )

    with open(args.prefix + "boom.obj", "w") as fh:
        fh.write(mesh_to_obj(build_mesh(boom), scale=args.L))
    with open(args.prefix + "frames.csv", "w") as fh:
        fh.write(frames_to_csv(build_chain(boom), scale=args.L))
    with open(args.prefix + "pattern.svg", "w") as fh:
        fh.write(pattern_to_svg(generate_pattern(design, len(args.states))))
    print(f"wrote {args.prefix}boom.obj, {args.prefix}frames.csv, {args.prefix}pattern.svg")


if __name__ == "__main__":
    main()
