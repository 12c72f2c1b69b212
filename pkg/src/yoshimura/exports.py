"""Plain-text export formats: OBJ meshes, CSV tables, workspace JSON.

Interface-unit geometry is rescaled by the design's valley length L on the
way out, so exported files are in physical units.
"""

from __future__ import annotations

import io

import numpy as np

from .boom import FrameChain, ModuleMesh
from .configspace import Workspace
from .documents import canonical_json


def mesh_to_obj(meshes: list[ModuleMesh], scale: float = 1.0) -> str:
    """Wavefront OBJ with one named object per module, deterministic ordering."""
    out = io.StringIO()
    out.write("# yoshimura boom mesh\n")
    offset = 0
    for mesh in meshes:
        out.write(f"o module_{mesh.index:03d}\n")
        labels = sorted(mesh.vertices)
        index_of = {}
        for lbl in labels:
            v = mesh.vertices[lbl] * scale
            index_of[lbl] = offset + len(index_of) + 1
            out.write(f"v {v[0]:.9f} {v[1]:.9f} {v[2]:.9f}\n")
        for (tri, _rhombus) in mesh.facets:
            a, b, c = (index_of[lbl] for lbl in tri)
            out.write(f"f {a} {b} {c}\n")
        offset += len(labels)
    return out.getvalue()


def frames_to_csv(chain: FrameChain, scale: float = 1.0) -> str:
    """One row per interface frame: index, row-major rotation, scaled translation."""
    out = io.StringIO()
    out.write("frame,r11,r12,r13,r21,r22,r23,r31,r32,r33,tx,ty,tz\n")
    for idx, frame in enumerate(chain.frames):
        rot = frame[:3, :3].reshape(-1)
        tr = frame[:3, 3] * scale
        cells = ",".join(f"{x:.12g}" for x in np.concatenate([rot, tr]))
        out.write(f"{idx},{cells}\n")
    return out.getvalue()


def workspace_to_csv(ws: Workspace, scale: float = 1.0) -> str:
    out = io.StringIO()
    out.write("word,x,y,z,multiplicity\n")
    for p in ws.points:
        x, y, z = (c * scale for c in p.position)
        out.write(f"{p.word},{x:.12g},{y:.12g},{z:.12g},{p.multiplicity}\n")
    return out.getvalue()


def workspace_to_json(ws: Workspace, scale: float = 1.0) -> str:
    data = {
        "m": ws.m,
        "raw_count": ws.raw_count,
        "dedup_tolerance": ws.dedup_tolerance,
        "points": [
            {
                "word": p.word,
                "position": [c * scale for c in p.position],
                "multiplicity": p.multiplicity,
                "merged_words": list(p.merged_words),
            }
            for p in ws.points
        ],
    }
    return canonical_json(data)


def parse_obj(text: str) -> dict[str, tuple[list[np.ndarray], list[tuple[int, int, int]]]]:
    """Parse the subset of OBJ we emit: named objects of v/f records."""
    objects: dict[str, tuple[list, list]] = {}
    vertices: list[np.ndarray] = []
    current = None
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "o":
            current = parts[1]
            objects[current] = ([], [])
        elif parts[0] == "v":
            v = np.array([float(x) for x in parts[1:4]])
            vertices.append(v)
            if current is not None:
                objects[current][0].append(v)
        elif parts[0] == "f":
            idx = tuple(int(x) - 1 for x in parts[1:4])
            tri = tuple(vertices[i] for i in idx)
            if current is not None:
                objects[current][1].append(tri)
    return objects
