#!/usr/bin/env python3
"""Sweep the sector angle and tabulate per-class module parameters.

Prints folded/1-pop/2-pop dihedrals, tilts and slant heights from the
admissibility bound up to a chosen maximum angle.
"""

import argparse
import math

import numpy as np

from yoshimura import BETA_GOLD, PopState, YoshimuraDesign
from yoshimura.frames import params_for_state
from yoshimura.kinematics import solve_folded, solve_one_pop, solve_two_pop


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-beta", type=float, default=50.0, help="sweep end, degrees")
    ap.add_argument("--steps", type=int, default=12)
    args = ap.parse_args()

    print(
        f"{'beta':>7} {'theta0':>8} {'theta1':>8} {'theta2':>8} "
        f"{'gamma1':>8} {'gamma2':>8} {'d0':>7} {'d1':>7} {'d2':>7} {'d3':>7}"
    )
    for beta in np.linspace(BETA_GOLD, math.radians(args.max_beta), args.steps):
        design = YoshimuraDesign(3, float(beta))
        folded = solve_folded(design)
        one = solve_one_pop(design)
        two = solve_two_pop(design)
        d = {
            k: params_for_state(PopState.from_string(w), design).d
            for k, w in ((0, "000"), (1, "100"), (2, "011"), (3, "111"))
        }
        deg = math.degrees
        print(
            f"{deg(beta):7.3f} {deg(folded.theta):8.3f} {deg(one.theta):8.3f} "
            f"{deg(two.theta):8.3f} {deg(one.gamma):8.3f} {deg(two.gamma):8.3f} "
            f"{d[0]:7.4f} {d[1]:7.4f} {d[2]:7.4f} {d[3]:7.4f}"
        )


if __name__ == "__main__":
    main()
