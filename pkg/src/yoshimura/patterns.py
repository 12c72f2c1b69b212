"""Flat crease-pattern generation and SVG export.

A pattern is m rows of n diamonds (2n triangular facets per row).  Valley
creases are the horizontal diamond diagonals, length L; mountain creases are
the diamond sides, inclined at the sector angle to the valleys.  Each row is
2w tall (w the facet half-height) and alternate rows shift by L/2, the offset
with which consecutive module rings nest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .kinematics import YoshimuraDesign

MOUNTAIN = "mountain"
VALLEY = "valley"


@dataclass(frozen=True)
class CreaseLine:
    kind: str
    start: tuple[float, float]
    end: tuple[float, float]

    @property
    def length(self) -> float:
        return math.hypot(self.end[0] - self.start[0], self.end[1] - self.start[1])

    @property
    def inclination(self) -> float:
        """Unsigned angle against the horizontal, radians."""
        ang = math.atan2(abs(self.end[1] - self.start[1]), abs(self.end[0] - self.start[0]))
        return ang


@dataclass
class PatternDocument:
    design: YoshimuraDesign
    rows: int
    lines: list[CreaseLine] = field(default_factory=list)
    facets: list[tuple[tuple[float, float], ...]] = field(default_factory=list)
    width: float = 0.0
    height: float = 0.0
    annotations: dict = field(default_factory=dict)


def generate_pattern(design: YoshimuraDesign, rows: int) -> PatternDocument:
    """Crease layout for ``rows`` module rings, in physical length units."""
    if rows < 1:
        raise ValueError("pattern needs at least one row")
    L = design.L
    w = design.w
    doc = PatternDocument(design=design, rows=rows)
    for j in range(rows):
        vy = (2 * j + 1) * w
        offset = 0.5 * L if j % 2 else 0.0
        for i in range(design.n):
            cx = offset + (i + 0.5) * L
            left = (cx - 0.5 * L, vy)
            right = (cx + 0.5 * L, vy)
            top = (cx, vy + w)
            bottom = (cx, vy - w)
            doc.lines.append(CreaseLine(VALLEY, left, right))
            doc.lines.append(CreaseLine(MOUNTAIN, left, top))
            doc.lines.append(CreaseLine(MOUNTAIN, top, right))
            doc.lines.append(CreaseLine(MOUNTAIN, left, bottom))
            doc.lines.append(CreaseLine(MOUNTAIN, bottom, right))
            doc.facets.append((left, right, top))
            doc.facets.append((left, right, bottom))
    doc.width = design.n * L + (0.5 * L if rows > 1 else 0.0)
    doc.height = 2.0 * w * rows
    doc.annotations = {
        "beta_degrees": math.degrees(design.beta),
        "L": L,
        "n": design.n,
        "rows": rows,
    }
    return doc


def pattern_to_svg(
    doc: PatternDocument,
    mountain_color: str = "#b03030",
    valley_color: str = "#3060b0",
    stroke_width: float | None = None,
) -> str:
    """Render a pattern: solid strokes for mountains, dashed for valleys."""
    L = doc.design.L
    sw = stroke_width if stroke_width is not None else 0.01 * L
    margin = 0.1 * max(doc.width, doc.height)
    x0, y0 = -margin, -margin
    span_x, span_y = doc.width + 2 * margin, doc.height + 2 * margin
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:g} {y0:g} {span_x:g} {span_y:g}">',
        f'<g fill="none" stroke-width="{sw:g}" stroke-linecap="round">',
    ]
    dash = f"{0.06 * L:g} {0.04 * L:g}"
    for line in doc.lines:
        (xa, ya), (xb, yb) = line.start, line.end
        # flip y so the pattern reads with row 1 at the bottom
        ya, yb = doc.height - ya, doc.height - yb
        if line.kind == VALLEY:
            style = f'stroke="{valley_color}" stroke-dasharray="{dash}"'
        else:
            style = f'stroke="{mountain_color}"'
        parts.append(f'<line x1="{xa:.6g}" y1="{ya:.6g}" x2="{xb:.6g}" y2="{yb:.6g}" {style}/>')
    parts.append("</g>")
    beta_deg = doc.annotations["beta_degrees"]
    label = f"n={doc.design.n}  beta={beta_deg:.3f} deg  L={L:g}  rows={doc.rows}"
    parts.append(
        f'<text x="{x0 + 0.02 * span_x:.6g}" y="{y0 + 0.05 * span_y:.6g}" '
        f'font-size="{0.04 * span_y:.6g}" font-family="monospace">{label}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
