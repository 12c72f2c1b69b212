#!/usr/bin/env python3
"""Enumerate boom workspaces for increasing module counts.

Shows the 8^m growth, duplicate endpoints, and the bounding extents of the
reachable point cloud; optionally dumps the point sets as CSV.
"""

import argparse
import math

import numpy as np

from yoshimura import BETA_GOLD, YoshimuraDesign, enumerate_workspace
from yoshimura.exports import workspace_to_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beta", type=float, default=math.degrees(BETA_GOLD))
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--csv-prefix", help="write workspace_<m>.csv files with this prefix")
    args = ap.parse_args()

    design = YoshimuraDesign(3, math.radians(args.beta))
    for m in range(1, args.max_m + 1):
        ws = enumerate_workspace(design, m)
        pts = np.array([p.position for p in ws.points])
        dup = ws.raw_count - len(ws.points)
        span = pts.max(axis=0) - pts.min(axis=0)
        print(
            f"m={m}: raw {ws.raw_count:5d}  unique {len(ws.points):5d}  "
            f"duplicates {dup:3d}  extent x/y/z = "
            f"{span[0]:.3f}/{span[1]:.3f}/{span[2]:.3f}"
        )
        if args.csv_prefix:
            path = f"{args.csv_prefix}workspace_{m}.csv"
            with open(path, "w") as fh:
                fh.write(workspace_to_csv(ws))
            print(f"  wrote {path}")


if __name__ == "__main__":
    main()
