"""Discrete configuration space of a boom: enumeration, flip planning, search.

A boom with m modules has 8^m pop words.  Words are written module 1 first
(base), three bits per module, and every enumeration in this module is in
lexicographic word order so output files are reproducible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .boom import BoomConfiguration, build_chain, shape_metrics
from .errors import EmptyTargetError, ResourceLimitError
from .frames import ALL_STATES, PopState, params_for_state, transform_for_state
from .geometry import apply_transform
from .kinematics import YoshimuraDesign

#: Default cap on enumerated state words.
DEFAULT_STATE_CAP = 8**7


@dataclass(frozen=True)
class WorkspacePoint:
    """A reachable endpoint: representative word, position, merged duplicates."""

    word: str
    position: tuple[float, float, float]
    multiplicity: int = 1
    merged_words: tuple[str, ...] = ()


@dataclass
class Workspace:
    design: YoshimuraDesign
    m: int
    dedup_tolerance: float
    raw_count: int
    points: list[WorkspacePoint]


@dataclass
class TransitionPlan:
    """A sequence of boom words whose neighbours differ by one facet flip."""

    sequence: list[str]
    flips: list[tuple[int, int]] = field(default_factory=list)

    @property
    def flip_count(self) -> int:
        return len(self.flips)


def _check_cap(m: int, cap: int) -> None:
    if 8**m > cap:
        raise ResourceLimitError(
            f"8^{m} = {8**m} states exceeds the configured cap of {cap}"
        )


def boom_words(m: int):
    """All 8^m boom words in lexicographic order."""
    state_words = [s.to_string() for s in ALL_STATES]
    for combo in itertools.product(state_words, repeat=m):
        yield "".join(combo)


def split_word(word: str) -> list[str]:
    if len(word) % 3 != 0 or any(c not in "01" for c in word):
        raise ValueError(f"boom word must match ([01]{{3}})+, got {word!r}")
    return [word[i : i + 3] for i in range(0, len(word), 3)]


def endpoint_for_word(design: YoshimuraDesign, word: str) -> np.ndarray:
    """Top-interface centroid of the boom described by ``word``."""
    config = BoomConfiguration.from_words(design, split_word(word))
    return build_chain(config).endpoint_position


def enumerate_workspace(
    design: YoshimuraDesign,
    m: int,
    dedup_tol: float = 1e-9,
    cap: int = DEFAULT_STATE_CAP,
) -> Workspace:
    """Endpoints of all 8^m pop words, with coincident points merged.

    The workspace is built recursively: the m-module endpoint set is the
    image of the (m-1)-module set under the eight single-module transforms,
    which is what makes the point cloud self-similar as modules are added.
    """
    if m < 0:
        raise ValueError("module count must be non-negative")
    _check_cap(m, cap)

    words = [""]
    points = np.zeros((1, 3))
    transforms = [transform_for_state(s, design).matrix for s in ALL_STATES]
    state_words = [s.to_string() for s in ALL_STATES]
    for _ in range(m):
        blocks = []
        new_words = []
        for sw, t in zip(state_words, transforms):
            blocks.append(apply_transform(t, points))
            new_words.extend(sw + w for w in words)
        points = np.vstack(blocks)
        words = new_words

    merged = _merge_points(words, points, dedup_tol)
    return Workspace(
        design=design,
        m=m,
        dedup_tolerance=dedup_tol,
        raw_count=len(words),
        points=merged,
    )


def _merge_points(words, points, tol: float) -> list[WorkspacePoint]:
    """Merge points whose coordinates all agree within ``tol``; keep every word."""
    order = sorted(range(len(words)), key=lambda i: (points[i, 0], points[i, 1], points[i, 2]))
    clusters: list[list[int]] = []
    for idx in order:
        if clusters and np.all(np.abs(points[clusters[-1][0]] - points[idx]) <= tol):
            clusters[-1].append(idx)
        else:
            clusters.append([idx])
    out = []
    for cluster in clusters:
        cluster_words = sorted(words[i] for i in cluster)
        rep = cluster_words[0]
        pos = tuple(points[cluster[0]])
        out.append(
            WorkspacePoint(
                word=rep,
                position=pos,
                multiplicity=len(cluster),
                merged_words=tuple(cluster_words),
            )
        )
    out.sort(key=lambda p: p.word)
    return out


# ---------------------------------------------------------------------------
# flip planning
# ---------------------------------------------------------------------------

def _flip_position(a: str, b: str) -> int:
    diff = [i for i, (x, y) in enumerate(zip(a, b)) if x != y]
    if len(diff) != 1:
        raise ValueError(f"words {a} and {b} are not a single flip apart")
    return diff[0]


def gray_code_plan(m: int, cap: int = DEFAULT_STATE_CAP) -> TransitionPlan:
    """Reflected binary sequence over 3m bits covering all 8^m words once.

    Consecutive words differ in exactly one bit, so the plan is a minimal
    single-facet actuation schedule through the whole configuration space.
    """
    if m < 1:
        raise ValueError("module count must be >= 1")
    _check_cap(m, cap)
    width = 3 * m
    sequence = [format(i ^ (i >> 1), f"0{width}b") for i in range(8**m)]
    flips = []
    for a, b in zip(sequence, sequence[1:]):
        pos = _flip_position(a, b)
        flips.append((pos // 3 + 1, pos % 3))
    return TransitionPlan(sequence=sequence, flips=flips)


def shortest_transition(from_word: str, to_word: str) -> TransitionPlan:
    """A minimal flip plan between two boom words (lowest module first)."""
    if len(from_word) != len(to_word):
        raise ValueError("words must have equal length")
    split_word(from_word), split_word(to_word)
    positions = [i for i, (a, b) in enumerate(zip(from_word, to_word)) if a != b]
    sequence = [from_word]
    flips = []
    current = list(from_word)
    for pos in positions:
        current[pos] = "1" if current[pos] == "0" else "0"
        sequence.append("".join(current))
        flips.append((pos // 3 + 1, pos % 3))
    return TransitionPlan(sequence=sequence, flips=flips)


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError("words must have equal length")
    return sum(x != y for x, y in zip(a, b))


def minimal_flip_paths(from_word: str, to_word: str) -> list[list[str]]:
    """Every minimal single-flip path between two words (one per flip order)."""
    if len(from_word) != len(to_word):
        raise ValueError("words must have equal length")
    positions = [i for i, (a, b) in enumerate(zip(from_word, to_word)) if a != b]
    paths = []
    for order in itertools.permutations(positions):
        current = list(from_word)
        path = [from_word]
        for pos in order:
            current[pos] = "1" if current[pos] == "0" else "0"
            path.append("".join(current))
        paths.append(path)
    # permutations of an empty set yields one empty order: the trivial path
    unique = []
    seen = set()
    for p in paths:
        key = tuple(p)
        if key not in seen:
            seen.add(key)
            unique.append(p)
    return unique


def rotate_boom_word(word: str, k: int) -> str:
    """Rotate every module of a boom word by k * 120 deg about the boom axis."""
    out = []
    for chunk in split_word(word):
        state = PopState.from_string(chunk).rotated(k)
        out.append(state.to_string())
    return "".join(out)


def minimal_path_classes(from_word: str, to_word: str) -> list[list[list[str]]]:
    """Minimal flip paths grouped by the boom's three-fold rotation symmetry.

    Two paths are equivalent when one is the whole-boom 120 deg rotation of
    the other; only rotations fixing both endpoints are applied, so endpoints
    that break the symmetry fall back to singleton classes.
    """
    stabilizer = [
        k
        for k in range(3)
        if rotate_boom_word(from_word, k) == from_word
        and rotate_boom_word(to_word, k) == to_word
    ]
    paths = minimal_flip_paths(from_word, to_word)
    seen: dict[tuple[str, ...], int] = {}
    classes: list[list[list[str]]] = []
    for path in paths:
        orbit_keys = [tuple(rotate_boom_word(w, k) for w in path) for k in stabilizer]
        found = None
        for key in orbit_keys:
            if key in seen:
                found = seen[key]
                break
        if found is None:
            classes.append([path])
            for key in orbit_keys:
                seen[key] = len(classes) - 1
        else:
            classes[found].append(path)
    return classes


# ---------------------------------------------------------------------------
# shape matching
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MetricTarget:
    """Target described by total length and/or curvature (interface units)."""

    length: float | None = None
    curvature: float | None = None


@dataclass(frozen=True)
class PolylineTarget:
    """Target polyline; candidate interface centroids should hug these points."""

    points: tuple[tuple[float, float, float], ...]


@dataclass
class MatchResult:
    config: BoomConfiguration
    word: str
    score: float
    length: float
    curvature: float
    planar: bool


def _metric_score(
    metrics, target: MetricTarget, length_weight: float, curvature_weight: float
) -> float:
    score = 0.0
    if target.length is not None:
        score += length_weight * abs(metrics.length - target.length)
    if target.curvature is not None:
        score += curvature_weight * abs(metrics.curvature - target.curvature)
    return score


def _polyline_score(centroids: np.ndarray, target_points: np.ndarray) -> float:
    d2 = np.sum(
        (centroids[:, None, :] - target_points[None, :, :]) ** 2, axis=2
    )
    return float(np.sum(np.min(d2, axis=1)))


def _validate_target(target) -> None:
    if isinstance(target, MetricTarget):
        if target.length is None and target.curvature is None:
            raise EmptyTargetError("metric target needs a length and/or a curvature")
    elif isinstance(target, PolylineTarget):
        if len(target.points) == 0:
            raise EmptyTargetError("polyline target has no points")
    else:
        raise TypeError(f"unsupported target type: {type(target)!r}")


def _score_word(design, words_states, target, length_weight, curvature_weight) -> float:
    config = BoomConfiguration(design, words_states)
    metrics = shape_metrics(config)
    if isinstance(target, MetricTarget):
        return _metric_score(metrics, target, length_weight, curvature_weight)
    chain = build_chain(config)
    centroids = np.array([f[:3, 3] for f in chain.frames])
    return _polyline_score(centroids, np.asarray(target.points, dtype=float))


def match_shape(
    design: YoshimuraDesign,
    m: int,
    target,
    mode: str = "exhaustive",
    beam_width: int | None = None,
    length_weight: float = 1.0,
    curvature_weight: float = 0.5,
    cap: int = DEFAULT_STATE_CAP,
    top: int | None = None,
) -> list[MatchResult]:
    """Rank boom configurations against a target shape.

    Exhaustive mode scores every one of the 8^m words; beam mode grows the
    boom module by module keeping ``beam_width`` best partial chains (scored
    with the same objective on the partial boom), then re-scores the
    survivors with the full objective.  Ties break lexicographically.
    """
    if m < 1:
        raise ValueError("module count must be >= 1")
    _validate_target(target)
    if mode not in ("exhaustive", "beam"):
        raise ValueError(f"mode must be 'exhaustive' or 'beam', got {mode!r}")

    if mode == "exhaustive":
        _check_cap(m, cap)
        candidates = [tuple(combo) for combo in itertools.product(ALL_STATES, repeat=m)]
    else:
        if beam_width is None or beam_width < 1:
            raise ValueError("beam mode needs beam_width >= 1")
        frontier: list[tuple[PopState, ...]] = [()]
        for _ in range(m):
            expanded = [partial + (s,) for partial in frontier for s in ALL_STATES]
            scored = sorted(
                expanded,
                key=lambda states: (
                    _score_word(design, states, target, length_weight, curvature_weight),
                    "".join(x.to_string() for x in states),
                ),
            )
            frontier = scored[:beam_width]
        candidates = frontier

    results = []
    for states in candidates:
        config = BoomConfiguration(design, states)
        metrics = shape_metrics(config)
        if isinstance(target, MetricTarget):
            score = _metric_score(metrics, target, length_weight, curvature_weight)
        else:
            chain = build_chain(config)
            centroids = np.array([f[:3, 3] for f in chain.frames])
            score = _polyline_score(centroids, np.asarray(target.points, dtype=float))
        results.append(
            MatchResult(
                config=config,
                word=config.word,
                score=score,
                length=metrics.length,
                curvature=metrics.curvature,
                planar=metrics.planar,
            )
        )
    results.sort(key=lambda res: (res.score, res.word))
    if top is not None:
        results = results[:top]
    return results
