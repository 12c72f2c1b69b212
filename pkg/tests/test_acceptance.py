"""Acceptance suite: one test per acceptance criterion, stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to get one PASS line per
criterion.  Angle tolerances are 1e-3 degrees and length tolerances 1e-6
interface units unless a criterion states otherwise; comparisons against
published rounded decimals use half-ulp-of-the-decimal tolerances.
"""

import itertools
import math
import random

import numpy as np
import pytest

from yoshimura import (
    ALL_STATES,
    BETA_GOLD,
    BoomConfiguration,
    MetricTarget,
    PHI,
    PopState,
    YoshimuraDesign,
    build_chain,
    build_mesh,
    enumerate_workspace,
    golden_polynomial_residual,
    gray_code_plan,
    hamming,
    match_shape,
    minimal_flip_paths,
    minimal_path_classes,
    shape_metrics,
    solve_folded,
    solve_one_pop,
    solve_two_pop,
    two_pop_residual,
)
from yoshimura.frames import params_for_state, transform_closed_form, transform_from_parameters
from yoshimura.geometry import apply_transform
from yoshimura.kinematics import one_pop_tilt, two_pop_tilt

from conftest import (
    GAMMA_GOLD,
    D_GOLD,
    one_pop_grid_oracle,
    triangle_edge_errors,
)

GOLD = YoshimuraDesign(3, BETA_GOLD, 1.0)


def _ok(num, text):
    print(f"ACCEPTANCE C{num:02d} PASS - {text}")


def test_criterion_01_golden_ratio_bound():
    lo, hi = 2.0 - math.sqrt(3.0), 1.0
    f = golden_polynomial_residual
    assert f(lo) * f(hi) < 0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    root = 0.5 * (lo + hi)
    assert root == pytest.approx(1.0 / PHI, abs=1e-12)
    beta_gold_deg = math.degrees(math.atan2(1.0, PHI))
    assert beta_gold_deg == pytest.approx(31.72, abs=0.01)
    _ok(1, f"polynomial root {root:.12f} = 1/phi; beta_gold = {beta_gold_deg:.5f} deg")


def test_criterion_02_folded_state_reproduction():
    fs = solve_folded(YoshimuraDesign(3, math.radians(45.0), 1.0))
    theta_deg = math.degrees(fs.theta)
    assert theta_deg == pytest.approx(54.7356, abs=1e-3)
    assert fs.h == pytest.approx(0.81650, abs=5e-6)
    _ok(2, f"beta=45: theta = {theta_deg:.4f} deg, h/L = {fs.h:.5f}")


def test_criterion_03_tilt_angle_both_classes():
    one = solve_one_pop(GOLD)
    two = solve_two_pop(GOLD)
    # evaluated through the raw vertex forms, not any reduced expression
    assert one.gamma == pytest.approx(
        one_pop_tilt(BETA_GOLD, one.theta, one.eta, one.alpha), abs=0.0
    )
    assert two.gamma == pytest.approx(two_pop_tilt(BETA_GOLD, two.theta), abs=0.0)
    for gamma in (one.gamma, two.gamma):
        assert math.degrees(gamma) == pytest.approx(41.810, abs=1e-3)
        assert gamma == pytest.approx(GAMMA_GOLD, abs=math.radians(1e-3))
    _ok(3, f"1-pop gamma = {math.degrees(one.gamma):.4f} deg, "
           f"2-pop gamma = {math.degrees(two.gamma):.4f} deg")


def test_criterion_04_table_regression():
    third = 2.0 * math.pi / 3.0
    expected = {
        "000": (0.0, 0.0, 0.2205),
        "001": (-third, +GAMMA_GOLD, 0.206),
        "010": (+third, +GAMMA_GOLD, 0.206),
        "011": (0.0, -GAMMA_GOLD, 0.412),
        "100": (0.0, +GAMMA_GOLD, 0.206),
        "101": (+third, -GAMMA_GOLD, 0.412),
        "110": (-third, -GAMMA_GOLD, 0.412),
        "111": (0.0, 0.0, 0.618),
    }
    for word, (psi, gamma, d_decimals) in expected.items():
        p = params_for_state(PopState.from_string(word), GOLD)
        assert p.psi == pytest.approx(psi, abs=1e-12), word
        assert p.gamma == pytest.approx(gamma, abs=math.radians(1e-3)), word
        assert p.d == pytest.approx(d_decimals, abs=5e-4), word
        assert p.d == pytest.approx(D_GOLD[PopState.from_string(word).pop_count], abs=1e-9)
    _ok(4, "all eight (psi, gamma, d) rows reproduced from solvers")


def test_criterion_05_transform_equivalence():
    worst = 0.0
    for beta in np.linspace(BETA_GOLD, 0.98 * math.pi / 2, 20):
        design = YoshimuraDesign(3, float(beta))
        for s in ALL_STATES:
            p = params_for_state(s, design)
            diff = np.max(
                np.abs(transform_from_parameters(p) - transform_closed_form(p))
            )
            worst = max(worst, float(diff))
    assert worst < 1e-12
    _ok(5, f"five-factor vs closed form, 8 states x 20 betas: worst {worst:.2e}")


def test_criterion_06_length_scaling():
    # full deployment: per-module increment 1/phi = 0.618
    chain = build_chain(BoomConfiguration.from_words(GOLD, ["111"] * 4))
    steps = [chain.frames[k + 1][:3, 3] - chain.frames[k][:3, 3] for k in range(4)]
    for step in steps:
        assert np.linalg.norm(step) == pytest.approx(1.0 / PHI, abs=1e-9)
        assert np.linalg.norm(step) == pytest.approx(0.618, abs=5e-4)
    # fully folded: per-module increment 0.2205
    chain0 = build_chain(BoomConfiguration.from_words(GOLD, ["000"] * 4))
    steps0 = [chain0.frames[k + 1][:3, 3] - chain0.frames[k][:3, 3] for k in range(4)]
    for step in steps0:
        assert np.linalg.norm(step) == pytest.approx(0.2205, abs=5e-4)
    # opposed pop pair: straight axis with increment 1/phi per pair
    chain_pair = build_chain(BoomConfiguration.from_words(GOLD, ["001", "110"] * 4))
    pair_pts = [chain_pair.frames[2 * k][:3, 3] for k in range(5)]
    increments = [b - a for a, b in zip(pair_pts, pair_pts[1:])]
    axis = increments[0] / np.linalg.norm(increments[0])
    for inc in increments:
        assert np.linalg.norm(inc) == pytest.approx(1.0 / PHI, abs=1e-9)
    for pt in pair_pts:
        lateral = pt - np.dot(pt, axis) * axis
        assert np.linalg.norm(lateral) < 1e-9
    _ok(6, "increments 0.618 (full), 0.2205 (folded), 0.618/straight (001+110 pairs)")


def test_criterion_07_workspace_fractal():
    ws1 = enumerate_workspace(GOLD, 1)
    ws2 = enumerate_workspace(GOLD, 2)
    ws3 = enumerate_workspace(GOLD, 3)
    assert ws1.raw_count == 8 and len(ws1.points) == 8
    assert ws2.raw_count == 64
    assert ws3.raw_count == 512
    from yoshimura.frames import transform_for_state

    base = np.array([p.position for p in ws1.points for _ in range(p.multiplicity)])
    image = np.vstack(
        [
            apply_transform(transform_for_state(s, GOLD).matrix, base)
            for s in ALL_STATES
        ]
    )
    target = np.array([p.position for p in ws2.points for _ in range(p.multiplicity)])
    assert image.shape == target.shape == (64, 3)
    order = lambda arr: np.lexsort((arr[:, 2], arr[:, 1], arr[:, 0]))
    assert np.max(np.abs(image[order(image)] - target[order(target)])) < 1e-9
    _ok(7, "counts 8/64/512; m=2 equals the 8-transform image of m=1 (1e-9)")


def test_criterion_08_gray_code_properties():
    for m in (1, 2, 3):
        plan = gray_code_plan(m)
        assert len(set(plan.sequence)) == 8**m
        assert all(hamming(a, b) == 1 for a, b in zip(plan.sequence, plan.sequence[1:]))
    paths = minimal_flip_paths("000", "111")
    assert len(paths) == 6
    for path in paths:
        assert len(path) == 4
        assert [w.count("1") for w in path] == [0, 1, 2, 3]
        assert len(set(path)) == 4
    classes = minimal_path_classes("000", "111")
    assert len(classes) == 2
    _ok(8, "gray plans cover 8^m with unit steps; 000->111 has exactly "
           "two rotation-distinct minimal actuation paths")


def test_criterion_09_solver_vs_oracle():
    for beta_deg in (31.8, 33.0, 35.0, 40.0, 45.0):
        beta = math.radians(beta_deg)
        theta_oracle, _eta = one_pop_grid_oracle(beta)
        sol = solve_one_pop(YoshimuraDesign(3, beta))
        assert abs(sol.theta - theta_oracle) <= 1e-4, beta_deg
    two = solve_two_pop(YoshimuraDesign(3, math.radians(45.0)))
    assert abs(two.theta - math.pi / 4) < 1e-12
    assert abs(two_pop_residual(math.radians(45.0), two.theta)) < 1e-12
    _ok(9, "grid-scan oracle agrees in theta to 1e-4 at 5 betas; "
           "2-pop at 45 deg solves exactly")


def test_criterion_10_inverse_search_oracle():
    rng = random.Random(31717)
    for trial in range(5):
        target = MetricTarget(
            length=rng.uniform(0.5, 1.8), curvature=rng.uniform(-2.5, 2.5)
        )
        results = match_shape(GOLD, 3, target, mode="exhaustive")
        # independent full scan with the objective recomputed from parameters
        best = None
        for combo in itertools.product(ALL_STATES, repeat=3):
            params = [params_for_state(s, GOLD) for s in combo]
            length = sum(p.d for p in params)
            psis = {round(p.psi, 12) for p in params if abs(p.gamma) > 1e-12}
            if len(psis) <= 1:
                kappa = sum(p.gamma for p in params) / length
            else:
                kappa = sum(abs(p.gamma) for p in params) / length
            score = abs(length - target.length) + 0.5 * abs(kappa - target.curvature)
            word = "".join(s.to_string() for s in combo)
            if best is None or (score, word) < best:
                best = (score, word)
        assert results[0].score == pytest.approx(best[0], abs=1e-12), trial
        assert results[0].word == best[1], trial
        beam = match_shape(GOLD, 3, target, mode="beam", beam_width=512)
        assert [r.word for r in beam] == [r.word for r in results], trial
    _ok(10, "exhaustive optimum equals independent full scan for 5 random "
            "targets; full-width beam reproduces it")


def test_criterion_11_mesh_integrity():
    rng = random.Random(8080)
    words = [s.to_string() for s in ALL_STATES]
    worst_edge, worst_gap = 0.0, 0.0
    for _ in range(200):
        m = rng.randint(1, 4)
        config = BoomConfiguration.from_words(
            GOLD, [rng.choice(words) for _ in range(m)]
        )
        meshes = build_mesh(config)
        for mesh in meshes:
            worst_edge = max(worst_edge, triangle_edge_errors(mesh, GOLD))
        for first, second in zip(meshes, meshes[1:]):
            for letter in ("A", "B", "C"):
                gap = np.max(
                    np.abs(first.vertices[letter] - second.vertices[letter + "'"])
                )
                worst_gap = max(worst_gap, float(gap))
    assert worst_edge < 1e-9
    assert worst_gap < 1e-9
    _ok(11, f"200 random booms: worst edge error {worst_edge:.2e}, "
            f"worst interface gap {worst_gap:.2e}")


@pytest.mark.skip(
    reason="criterion 12 is the interactive designer contract; it runs in the "
    "frontend test suite (frontend/, `npm test`) against this package's API"
)
def test_criterion_12_ui_contract():
    pass
