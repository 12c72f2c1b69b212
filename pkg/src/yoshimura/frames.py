"""Per-state forward-kinematics parameters and interface-to-interface transforms.

Every n = 3 module has 8 pop states written as 3-bit words; bit r belongs to
the rhombus whose apex points along the direction 90 deg + r * 120 deg in the
module base frame (bit 0 straddles the y-z symmetry plane).  A state maps to
the triple (psi, gamma, d):

* psi    -- phase rotation about z that carries the state onto the symmetric
            representative of its pop class,
* gamma  -- signed tilt between consecutive interface triangles (positive for
            single pop-outs, negative for double, zero otherwise),
* d      -- slant height, the distance between the interface centroids.

All lengths here are in interface units (interface triangle side = 1).

The transform from one interface frame to the next composes five elementary
matrices, Rz(psi) Rx(gamma/2) Tz(d) Rx(gamma/2) Rz(-psi); the equivalent
closed-form matrix is provided separately so the two constructions can be
cross-checked entry by entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import UnsupportedError
from .geometry import rot_x, rot_z, tr_z
from .kinematics import YoshimuraDesign, solve_folded, solve_one_pop, solve_two_pop

PHASE_THIRD = 2.0 * math.pi / 3.0


@dataclass(frozen=True, order=True)
class PopState:
    """A module's pop word: bit r is True when rhombus r is popped out."""

    bits: tuple[bool, bool, bool]

    @classmethod
    def from_string(cls, word: str) -> "PopState":
        if len(word) != 3 or any(c not in "01" for c in word):
            raise ValueError(f"pop state must match [01]{{3}}, got {word!r}")
        return cls(tuple(c == "1" for c in word))

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @property
    def pop_count(self) -> int:
        return sum(self.bits)

    def flipped(self, index: int) -> "PopState":
        if index not in (0, 1, 2):
            raise ValueError("bit index must be 0, 1 or 2")
        bits = list(self.bits)
        bits[index] = not bits[index]
        return PopState(tuple(bits))

    def rotated(self, k: int) -> "PopState":
        """State after rotating the module by k * 120 deg about its axis."""
        bits = [False, False, False]
        for r in range(3):
            bits[(r + k) % 3] = self.bits[r]
        return PopState(tuple(bits))

    def minority_index(self) -> int:
        """Index of the popped bit (1-pop) or the un-popped bit (2-pop)."""
        k = self.pop_count
        if k == 1:
            return self.bits.index(True)
        if k == 2:
            return self.bits.index(False)
        raise ValueError("minority bit is defined only for 1- and 2-pop states")

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.to_string()


ALL_STATES: tuple[PopState, ...] = tuple(PopState.from_string(f"{i:03b}") for i in range(8))

#: Symmetric representative of each pop class (phase angle zero).
CANONICAL_STATE = {
    0: PopState.from_string("000"),
    1: PopState.from_string("100"),
    2: PopState.from_string("011"),
    3: PopState.from_string("111"),
}


def phase_angle(state: PopState) -> float:
    """Phase rotation (0 or +-2pi/3) taking the symmetric representative onto ``state``."""
    if state.pop_count in (0, 3):
        return 0.0
    return (0.0, PHASE_THIRD, -PHASE_THIRD)[state.minority_index()]


def symmetry_rotation(state: PopState) -> int:
    """Number of +120 deg steps from the canonical representative to ``state``."""
    if state.pop_count in (0, 3):
        return 0
    return state.minority_index()


@dataclass(frozen=True)
class FrameParameters:
    """Forward-kinematics triple for one module state (interface units)."""

    psi: float
    gamma: float
    d: float


@dataclass(frozen=True)
class FrameTransform:
    """4x4 homogeneous transform between consecutive interface triangles."""

    matrix: np.ndarray

    @property
    def rotation(self) -> np.ndarray:
        return self.matrix[:3, :3]

    @property
    def translation(self) -> np.ndarray:
        return self.matrix[:3, 3]


@lru_cache(maxsize=None)
def _params_cached(bits: tuple[bool, bool, bool], n: int, beta: float) -> FrameParameters:
    state = PopState(bits)
    design = YoshimuraDesign(n, beta, 1.0)
    w = 0.5 * math.tan(beta)
    k = state.pop_count
    if k == 0:
        theta = solve_folded(design).theta
        gamma, d = 0.0, math.tan(beta) * math.sin(theta)
    elif k == 1:
        sol = solve_one_pop(design)
        gamma = sol.gamma
        d = 2.0 * (w + 2.0 * w * math.sin(sol.theta)) / 3.0
    elif k == 2:
        sol = solve_two_pop(design)
        gamma = -sol.gamma
        d = 2.0 * (w * math.sin(sol.theta) + 2.0 * w) / 3.0
    else:
        gamma, d = 0.0, math.tan(beta)
    return FrameParameters(psi=phase_angle(state), gamma=gamma, d=d)


def params_for_state(state: PopState, design: YoshimuraDesign) -> FrameParameters:
    """(psi, gamma, d) for a state; gamma and d come from the class solvers."""
    if design.n != 3:
        raise UnsupportedError("frame parameters are only defined for n = 3 modules")
    return _params_cached(state.bits, design.n, design.beta)


def transform_from_parameters(params: FrameParameters) -> np.ndarray:
    """Five-factor product Rz(psi) Rx(gamma/2) Tz(d) Rx(gamma/2) Rz(-psi)."""
    return (
        rot_z(params.psi)
        @ rot_x(0.5 * params.gamma)
        @ tr_z(params.d)
        @ rot_x(0.5 * params.gamma)
        @ rot_z(-params.psi)
    )


def transform_closed_form(params: FrameParameters) -> np.ndarray:
    """Closed-form expansion of the same transform, written out entrywise."""
    psi, gamma, d = params.psi, params.gamma, params.d
    cp, sp = math.cos(psi), math.sin(psi)
    cg, sg = math.cos(gamma), math.sin(gamma)
    sh, ch = math.sin(0.5 * gamma), math.cos(0.5 * gamma)
    return np.array(
        [
            [cp * cp + cg * sp * sp, 0.5 * (1.0 - cg) * math.sin(2.0 * psi), sg * sp, d * sh * sp],
            [0.5 * (1.0 - cg) * math.sin(2.0 * psi), cg * cp * cp + sp * sp, -sg * cp, -d * sh * cp],
            [-sg * sp, sg * cp, cg, d * ch],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )


def transform_for_state(state: PopState, design: YoshimuraDesign) -> FrameTransform:
    """Interface-to-interface transform for one module in the given state."""
    params = params_for_state(state, design)
    matrix = transform_from_parameters(params)
    matrix.setflags(write=False)
    return FrameTransform(matrix=matrix)
