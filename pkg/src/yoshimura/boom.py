"""Multi-module boom composition: frame chains, shape metrics, facet meshes.

The boom stacks modules base to tip; consecutive modules share an interface
triangle, so the cumulative pose of interface j is the product of the first j
per-module transforms.  Module meshes are built in a canonical symmetric pose
from the solved class kinematics, rotated into their bit pattern (a multiple
of 120 deg about the module axis), and then carried into the world frame by
the chain.

Vertex labels per module: top apexes A/B/C and base apexes A'/B'/C' (the
interface corners; A sits over rhombus 0, C over rhombus 1, B over rhombus 2),
mid-surface junctions R/P/O (at nominal directions 30/150/270 deg), and QA/QB/QC
for the outward vertex of a popped rhombus.  All coordinates are in interface
units (interface triangle side = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import EmptyConfigurationError
from .frames import (
    PopState,
    params_for_state,
    symmetry_rotation,
    transform_for_state,
)
from .geometry import apply_transform, rot_z
from .kinematics import YoshimuraDesign, solve_folded, solve_one_pop, solve_two_pop

#: Circumradius of the side-1 equilateral interface triangle.
CIRCUMRADIUS = 1.0 / math.sqrt(3.0)

#: Apex letter of rhombus r (r = 0, 1, 2).
APEX_LETTERS = ("A", "C", "B")

#: Mid-surface junction label at nominal direction 30 + 120 * s degrees.
TIP_LETTERS = ("R", "P", "O")

#: Tilt angles smaller than this are treated as straight for planarity checks.
TILT_EPS = 1e-12


@dataclass(frozen=True)
class BoomConfiguration:
    """A design plus the ordered pop states of its modules (module 1 = base)."""

    design: YoshimuraDesign
    states: tuple[PopState, ...]

    def __post_init__(self) -> None:
        if len(self.states) == 0:
            raise EmptyConfigurationError("a boom needs at least one module")

    @classmethod
    def from_words(cls, design: YoshimuraDesign, words) -> "BoomConfiguration":
        return cls(design, tuple(PopState.from_string(w) for w in words))

    @property
    def word(self) -> str:
        return "".join(s.to_string() for s in self.states)


@dataclass
class FrameChain:
    """Cumulative interface frames; frames[0] is the identity at the boom base."""

    frames: list[np.ndarray]

    @property
    def endpoint(self) -> np.ndarray:
        return self.frames[-1]

    @property
    def endpoint_position(self) -> np.ndarray:
        return self.frames[-1][:3, 3]


@dataclass
class ShapeMetrics:
    length: float
    curvature: float
    planar: bool


@dataclass
class ModuleMesh:
    """One module's labelled vertices and triangular facets, in the world frame."""

    vertices: dict[str, np.ndarray]
    facets: list[tuple[tuple[str, str, str], int]]
    popped_flags: tuple[bool, bool, bool]
    index: int = 0
    design: YoshimuraDesign | None = field(default=None, repr=False)

    def triangle(self, labels: tuple[str, str, str]) -> np.ndarray:
        return np.array([self.vertices[lbl] for lbl in labels])

    def top_triangle(self) -> np.ndarray:
        return self.triangle(("A", "B", "C"))

    def base_triangle(self) -> np.ndarray:
        return self.triangle(("A'", "B'", "C'"))


def build_chain(config: BoomConfiguration) -> FrameChain:
    """Cumulative frames for the whole boom: frames[j] = frames[j-1] @ T(state_j)."""
    frames = [np.eye(4)]
    for state in config.states:
        frames.append(frames[-1] @ transform_for_state(state, config.design).matrix)
    return FrameChain(frames=frames)


def shape_metrics(config: BoomConfiguration) -> ShapeMetrics:
    """Aggregate length, curvature and planarity of a boom.

    Length is the sum of slant heights.  A boom is planar when every module
    with a nonzero tilt shares one phase angle; its curvature is then the
    signed swept angle over the length.  For mixed phases the reported
    curvature is the heuristic sum of |tilt| over length.
    """
    params = [params_for_state(s, config.design) for s in config.states]
    total_d = sum(p.d for p in params)
    tilted_psis = {round(p.psi, 12) for p in params if abs(p.gamma) > TILT_EPS}
    planar = len(tilted_psis) <= 1
    if total_d <= 0.0:
        curvature = 0.0
    elif planar:
        curvature = sum(p.gamma for p in params) / total_d
    else:
        curvature = sum(abs(p.gamma) for p in params) / total_d
    return ShapeMetrics(length=total_d, curvature=curvature, planar=planar)


# ---------------------------------------------------------------------------
# canonical module geometry
# ---------------------------------------------------------------------------

def _mirror_down(points: dict[str, tuple[float, float, float]]) -> dict[str, tuple[float, float, float]]:
    """Base-side apexes mirrored through the mid-surface plane."""
    out = {}
    for letter in ("A", "B", "C"):
        x, y, z = points[letter]
        out[letter + "'"] = (x, y, -z)
    return out


def _rx_map(points: dict[str, tuple[float, float, float]], gamma: float) -> dict[str, np.ndarray]:
    """Carry mid-frame coordinates into the module base frame.

    Rotates by half the signed tilt about x (which levels the base triangle)
    and translates so the base apex A' lands on (0, circumradius, 0).
    """
    half = 0.5 * gamma
    c, s = math.cos(half), math.sin(half)

    def rx(p):
        x, y, z = p
        return np.array([x, c * y - s * z, s * y + c * z])

    anchor = rx(points["A'"])
    shift = np.array([0.0, CIRCUMRADIUS, 0.0]) - anchor
    return {label: rx(p) + shift for label, p in points.items()}


@lru_cache(maxsize=None)
def _canonical_vertices_cached(n: int, beta: float, pop_count: int) -> dict[str, np.ndarray]:
    design = YoshimuraDesign(n, beta, 1.0)
    w = 0.5 * math.tan(beta)
    r = CIRCUMRADIUS

    if pop_count == 0:
        h = math.tan(beta) * math.sin(solve_folded(design).theta)
        verts = {
            "A'": np.array([0.0, r, 0.0]),
            "B'": np.array([0.5, -0.5 * r, 0.0]),
            "C'": np.array([-0.5, -0.5 * r, 0.0]),
            "A": np.array([0.0, r, h]),
            "B": np.array([0.5, -0.5 * r, h]),
            "C": np.array([-0.5, -0.5 * r, h]),
            "R": np.array([0.5, 0.5 * r, 0.5 * h]),
            "P": np.array([-0.5, 0.5 * r, 0.5 * h]),
            "O": np.array([0.0, -r, 0.5 * h]),
        }
    elif pop_count == 1:
        sol = solve_one_pop(design)
        sin_t, cos_t = math.sin(sol.theta), math.cos(sol.theta)
        y_q = math.cos(sol.eta) + 0.5 * math.cos(sol.alpha)
        mid = {
            "O": (0.0, 0.0, 0.0),
            "P": (-math.sin(sol.eta), math.cos(sol.eta), 0.0),
            "R": (math.sin(sol.eta), math.cos(sol.eta), 0.0),
            "QA": (0.0, y_q, 0.0),
            "A": (0.0, y_q, w),
            "B": (0.5, w * cos_t, w * sin_t),
            "C": (-0.5, w * cos_t, w * sin_t),
        }
        mid.update(_mirror_down(mid))
        verts = _rx_map(mid, sol.gamma)
    elif pop_count == 2:
        sol = solve_two_pop(design)
        sin_t, cos_t = math.sin(sol.theta), math.cos(sol.theta)
        mid = {
            "R": (0.5, 0.0, 0.0),
            "P": (-0.5, 0.0, 0.0),
            "O": (0.0, -0.5, 0.0),
            "QC": (-0.5, -0.5, 0.0),
            "QB": (0.5, -0.5, 0.0),
            "A": (0.0, w * cos_t, w * sin_t),
            "B": (0.5, -0.5, w),
            "C": (-0.5, -0.5, w),
        }
        mid.update(_mirror_down(mid))
        verts = _rx_map(mid, -sol.gamma)
    else:
        rho = 0.5 * r
        verts = {
            "A'": np.array([0.0, r, 0.0]),
            "B'": np.array([0.5, -0.5 * r, 0.0]),
            "C'": np.array([-0.5, -0.5 * r, 0.0]),
            "QA": np.array([0.0, r, w]),
            "QB": np.array([0.5, -0.5 * r, w]),
            "QC": np.array([-0.5, -0.5 * r, w]),
            "R": np.array([rho * math.cos(math.pi / 6), rho * math.sin(math.pi / 6), w]),
            "P": np.array([-rho * math.cos(math.pi / 6), rho * math.sin(math.pi / 6), w]),
            "O": np.array([0.0, -rho, w]),
            "A": np.array([0.0, r, 2.0 * w]),
            "B": np.array([0.5, -0.5 * r, 2.0 * w]),
            "C": np.array([-0.5, -0.5 * r, 2.0 * w]),
        }
    for v in verts.values():
        v.setflags(write=False)
    return verts


def _permute_label(label: str, k: int) -> str:
    """Relabel a canonical vertex after a k * 120 deg rotation of the module."""
    if k == 0:
        return label
    prime = label.endswith("'")
    stem = label.rstrip("'")
    if stem.startswith("Q"):
        stem = "Q" + APEX_LETTERS[(APEX_LETTERS.index(stem[1]) + k) % 3]
    elif stem in APEX_LETTERS:
        stem = APEX_LETTERS[(APEX_LETTERS.index(stem) + k) % 3]
    elif stem in TIP_LETTERS:
        stem = TIP_LETTERS[(TIP_LETTERS.index(stem) + k) % 3]
    return stem + ("'" if prime else "")


def module_vertices(design: YoshimuraDesign, state: PopState) -> dict[str, np.ndarray]:
    """Labelled vertices of one module in its base frame (interface units)."""
    canonical = _canonical_vertices_cached(design.n, design.beta, state.pop_count)
    k = symmetry_rotation(state)
    if k == 0:
        return dict(canonical)
    rot = rot_z(k * 2.0 * math.pi / 3.0)
    return {
        _permute_label(lbl, k): apply_transform(rot, p) for lbl, p in canonical.items()
    }


def module_facets(state: PopState) -> list[tuple[tuple[str, str, str], int]]:
    """Facet triangles (vertex label triple, rhombus index) for a pop state."""
    facets: list[tuple[tuple[str, str, str], int]] = []
    for rhombus in range(3):
        apex = APEX_LETTERS[rhombus]
        left = TIP_LETTERS[(rhombus + 1) % 3]
        right = TIP_LETTERS[rhombus]
        for top_apex in (apex, apex + "'"):
            if state.bits[rhombus]:
                q = "Q" + apex
                facets.append(((left, top_apex, q), rhombus))
                facets.append(((q, top_apex, right), rhombus))
            else:
                facets.append(((left, right, top_apex), rhombus))
    return facets


def build_module_mesh(design: YoshimuraDesign, state: PopState, index: int = 0) -> ModuleMesh:
    """One module's mesh in its own base frame."""
    return ModuleMesh(
        vertices=module_vertices(design, state),
        facets=module_facets(state),
        popped_flags=state.bits,
        index=index,
        design=design,
    )


def build_mesh(config: BoomConfiguration) -> list[ModuleMesh]:
    """World-frame meshes for every module of the boom."""
    chain = build_chain(config)
    meshes = []
    for j, state in enumerate(config.states):
        local = build_module_mesh(config.design, state, index=j + 1)
        frame = chain.frames[j]
        world = {lbl: apply_transform(frame, p) for lbl, p in local.vertices.items()}
        meshes.append(
            ModuleMesh(
                vertices=world,
                facets=local.facets,
                popped_flags=state.bits,
                index=j + 1,
                design=config.design,
            )
        )
    return meshes
