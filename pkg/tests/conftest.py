"""Shared fixtures and independent oracles used across the test suite.

The oracles here deliberately avoid the production solution paths: the
one-pop oracle minimizes the joint facet-rigidity residual on a zooming 2D
grid over (theta, eta) instead of eliminating variables and root-finding,
and expected mesh edge lengths are recomputed from the flat-pattern
geometry by label classification.
"""

import math

import numpy as np
import pytest

from yoshimura import BETA_GOLD, PHI, YoshimuraDesign

GAMMA_GOLD = 2.0 * math.asin(1.0 / (math.sqrt(3.0) * PHI))

#: Table-of-truth slant heights at the golden sector angle.
D_GOLD = {
    0: (1.0 / PHI) * math.sqrt(1.0 - PHI**2 / 3.0),
    1: 1.0 / (3.0 * PHI),
    2: 2.0 / (3.0 * PHI),
    3: 1.0 / PHI,
}

ANGLE_TOL_DEG = 1e-3
LENGTH_TOL = 1e-6


@pytest.fixture(scope="session")
def gold_design() -> YoshimuraDesign:
    return YoshimuraDesign(3, BETA_GOLD, 1.0)


def one_pop_grid_oracle(beta: float) -> tuple[float, float]:
    """Brute-force (theta, eta) for the one-pop state.

    Full-domain scan of the joint |edge| + |slant| residual over
    [0, pi/2] x [0, pi/3] followed by a zooming re-scan around the running
    minimum; alpha is eliminated through the kite closure.  No root finder
    is involved.
    """
    t = math.tan(beta)

    def joint(theta, eta):
        alpha = np.arcsin(np.clip(2.0 * np.sin(eta), -1.0, 1.0))
        s = 2.0 * np.cos(eta) + np.cos(alpha)
        r_edge = (
            2.0 * t * t * (1.0 - np.sin(theta))
            + s * s
            - 2.0 * t * np.cos(theta) * s
            - 3.0
        )
        r_slant = t * np.cos(theta) - (1.0 - np.sin(eta)) / np.cos(eta)
        return np.abs(r_edge) + np.abs(r_slant)

    th = np.arange(0.0, math.pi / 2, 2e-3)
    et = np.arange(0.0, math.pi / 3, 2e-3)
    grid = joint(th[:, None], et[None, :])
    i, j = np.unravel_index(np.argmin(grid), grid.shape)
    th0, et0 = float(th[i]), float(et[j])

    window = 8e-3
    for _ in range(40):
        th = np.linspace(max(0.0, th0 - window), min(math.pi / 2, th0 + window), 41)
        et = np.linspace(max(0.0, et0 - window), min(math.pi / 3, et0 + window), 41)
        grid = joint(th[:, None], et[None, :])
        i, j = np.unravel_index(np.argmin(grid), grid.shape)
        interior = 0 < i < 40 and 0 < j < 40
        th0, et0 = float(th[i]), float(et[j])
        if interior:
            window *= 0.35
        if window < 1e-11:
            break
    return th0, et0


def expected_edge_length(label_a: str, label_b: str, design: YoshimuraDesign) -> float:
    """Flat-pattern length of a facet edge, classified by its vertex labels.

    Junction-junction edges are intact valley creases (length 1); a junction
    to a popped vertex is half a broken crease (1/2); junction to apex is a
    mountain crease sqrt(1/4 + w^2); popped vertex to apex is the facet
    half-diagonal w.  Interface units.
    """
    w = 0.5 * math.tan(design.beta)
    a, b = label_a.rstrip("'"), label_b.rstrip("'")
    tips = {"R", "P", "O"}

    def kind(lbl):
        if lbl in tips:
            return "tip"
        if lbl.startswith("Q"):
            return "pop"
        return "apex"

    ka, kb = kind(a), kind(b)
    pair = frozenset((ka, kb))
    if pair == {"tip"}:
        return 1.0
    if pair == {"tip", "pop"}:
        return 0.5
    if pair == {"tip", "apex"}:
        return math.sqrt(0.25 + w * w)
    if pair == {"pop", "apex"}:
        return w
    raise AssertionError(f"unexpected facet edge {label_a}-{label_b}")


def triangle_edge_errors(mesh, design: YoshimuraDesign) -> float:
    """Worst deviation of any facet edge from its flat-pattern length."""
    worst = 0.0
    for labels, _rhombus in mesh.facets:
        for a, b in ((0, 1), (1, 2), (2, 0)):
            la, lb = labels[a], labels[b]
            got = float(np.linalg.norm(mesh.vertices[la] - mesh.vertices[lb]))
            want = expected_edge_length(la, lb, design)
            worst = max(worst, abs(got - want))
    return worst
