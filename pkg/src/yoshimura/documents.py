"""JSON document schemas: boom configurations and transition plans.

Angles are degrees in every document (radians are internal only); lengths are
in the design's physical units.  Serialization is canonical (sorted keys,
two-space indent) so documents diff cleanly and round-trip exactly.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Any, Mapping

from .boom import BoomConfiguration
from .configspace import TransitionPlan
from .frames import PopState
from .kinematics import YoshimuraDesign

STATE_RE = re.compile(r"^[01]{3}$")


@dataclass(frozen=True)
class ConfigDocument:
    """A boom description: design triple, per-module pop words, free-form metadata."""

    n: int
    beta_degrees: float
    L: float = 1.0
    states: tuple[str, ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for word in self.states:
            if not STATE_RE.match(word):
                raise ValueError(f"state {word!r} does not match [01]{{3}}")

    def design(self) -> YoshimuraDesign:
        return YoshimuraDesign(self.n, math.radians(self.beta_degrees), self.L)

    def boom(self) -> BoomConfiguration:
        return BoomConfiguration(
            self.design(), tuple(PopState.from_string(w) for w in self.states)
        )

    def to_dict(self) -> dict:
        return {
            "design": {"n": self.n, "beta_degrees": self.beta_degrees, "L": self.L},
            "states": list(self.states),
            "metadata": dict(self.metadata),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ConfigDocument":
        try:
            design = data["design"]
            return cls(
                n=int(design["n"]),
                beta_degrees=float(design["beta_degrees"]),
                L=float(design.get("L", 1.0)),
                states=tuple(str(s) for s in data.get("states", [])),
                metadata=dict(data.get("metadata", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"invalid configuration document: {exc}") from exc

    def dumps(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "ConfigDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(
                f"configuration parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
        return cls.from_dict(data)


def canonical_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def plan_to_dict(plan: TransitionPlan) -> dict:
    return {
        "sequence": list(plan.sequence),
        "flips": [{"module": m, "bit": b} for m, b in plan.flips],
        "state_count": len(plan.sequence),
        "flip_count": plan.flip_count,
    }


def plan_from_dict(data: Mapping[str, Any]) -> TransitionPlan:
    return TransitionPlan(
        sequence=[str(w) for w in data["sequence"]],
        flips=[(int(f["module"]), int(f["bit"])) for f in data.get("flips", [])],
    )
