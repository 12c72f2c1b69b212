"""Elementary homogeneous transforms and the golden-ratio constants."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Golden ratio (1 + sqrt 5) / 2.
PHI = (1.0 + math.sqrt(5.0)) / 2.0

#: Lower sector-angle bound for pop-out admissibility (n = 3): arccot(phi).
BETA_GOLD = math.atan2(1.0, PHI)

#: tan of the bound, equal to 1/phi.
TAN_BETA_GOLD = 1.0 / PHI


@dataclass(frozen=True)
class GoldenConstants:
    """The golden ratio and the sector-angle bound it induces."""

    phi: float = PHI
    beta_gold: float = BETA_GOLD


def rot_x(angle: float) -> np.ndarray:
    """4x4 rotation about the x axis."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, c, -s, 0.0],
            [0.0, s, c, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )


def rot_z(angle: float) -> np.ndarray:
    """4x4 rotation about the z axis."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array(
        [
            [c, -s, 0.0, 0.0],
            [s, c, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )


def tr_x(dist: float) -> np.ndarray:
    """4x4 translation along the x axis."""
    m = np.eye(4)
    m[0, 3] = dist
    return m


def tr_z(dist: float) -> np.ndarray:
    """4x4 translation along the z axis."""
    m = np.eye(4)
    m[2, 3] = dist
    return m


def apply_transform(matrix: np.ndarray, point) -> np.ndarray:
    """Apply a 4x4 homogeneous transform to a 3-vector (or an (N, 3) array)."""
    p = np.asarray(point, dtype=float)
    if p.ndim == 1:
        return matrix[:3, :3] @ p + matrix[:3, 3]
    return p @ matrix[:3, :3].T + matrix[:3, 3]
