"""Deterministic SVG emission for simplex views and torus-fiber views.

Scenes are renderer-neutral descriptions; ``to_svg`` turns a scene into
a standalone SVG 1.1 document with stable element ordering and all
coordinates printed at six decimal places, so identical scenes yield
byte-identical output.

Simplex embeddings are fixed: the 1-simplex is the unit segment, the
2-simplex an equilateral triangle, and the 3-simplex a tetrahedron drawn
through a fixed axonometric projection (constants below).  Torus fibers
are drawn cut open: an interval, a square (or the true affine
parallelogram derived from the orbit metric), or an axonometric cube,
with identification ticks on paired edges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError, SimplexError, UnsupportedError
from .qlinalg import DEFAULT_TOL, Tolerances
from .toric import (
    SimplexPoint,
    ToricPoint,
    orbit_gram,
    validate_simplex,
    validate_toric_point,
)

TWO_PI = 2.0 * np.pi

# Fixed axonometric projection used for the 3-simplex and the cube:
# (x, y, z) ↦ (x + AXO_X·z, y + AXO_Y·z), y up.
AXO_X = -0.18
AXO_Y = 0.32

_TRI = (np.array([0.0, 0.0]), np.array([1.0, 0.0]), np.array([0.5, np.sqrt(3) / 2]))
_TETRA = (
    np.array([0.0, 0.0, 0.0]),
    np.array([1.0, 0.0, 0.0]),
    np.array([0.5, np.sqrt(3) / 2, 0.0]),
    np.array([0.5, np.sqrt(3) / 6, np.sqrt(6) / 3]),
)

_KET_LABELS = {
    2: ("|0>", "|1>"),
    3: ("|0>", "|1>", "|2>"),
    4: ("|00>", "|01>", "|10>", "|11>"),
}

_MARK_FILL = {"dot": "#1a1a1a", "open": "#ffffff", "accent": "#b03030"}


@dataclass(frozen=True)
class Mark:
    position: tuple[float, ...]
    label: str = ""
    style: str = "dot"


@dataclass(frozen=True)
class FigureScene:
    """Renderer-neutral figure description.

    kind          : "simplex" or "torus_fiber"
    marks         : positions are barycentric d-vectors for simplex
                    scenes and free-phase tuples for fiber scenes
    segments      : pairs of positions, same coordinate convention
    fiber_base    : simplex point the fiber sits above (fiber scenes)
    geometry_mode : "unit" for the square/cube fundamental domain,
                    "affine" for the true orbit parallelogram
    """

    kind: str
    radix: int
    marks: tuple[Mark, ...] = ()
    segments: tuple[tuple[tuple[float, ...], tuple[float, ...]], ...] = ()
    fiber_base: SimplexPoint | None = None
    geometry_mode: str = "unit"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "radix": self.radix,
            "geometry_mode": self.geometry_mode,
            "fiber_base": None if self.fiber_base is None else self.fiber_base.to_json(),
            "marks": [
                {"position": list(m.position), "label": m.label, "style": m.style}
                for m in self.marks
            ],
            "segments": [[list(a), list(b)] for a, b in self.segments],
        }

    @staticmethod
    def from_json(obj: dict) -> "FigureScene":
        base = obj.get("fiber_base")
        return FigureScene(
            kind=obj["kind"],
            radix=int(obj["radix"]),
            marks=tuple(
                Mark(
                    position=tuple(float(x) for x in m["position"]),
                    label=m.get("label", ""),
                    style=m.get("style", "dot"),
                )
                for m in obj.get("marks", ())
            ),
            segments=tuple(
                (tuple(float(x) for x in a), tuple(float(x) for x in b))
                for a, b in obj.get("segments", ())
            ),
            fiber_base=None if base is None else SimplexPoint.from_json(base),
            geometry_mode=obj.get("geometry_mode", "unit"),
        )


def scene_simplex(radix: int, marks=(), segments=(), tol: Tolerances = DEFAULT_TOL) -> FigureScene:
    """Simplex view with validated barycentric marks and segments."""
    if radix not in (2, 3, 4):
        raise ShapeError(f"simplex scenes support radix 2/3/4, got {radix}")
    checked_marks = []
    for m in marks:
        if not isinstance(m, Mark):
            m = Mark(position=tuple(float(x) for x in m))
        t = validate_simplex(np.asarray(m.position), tol)
        if t.size != radix:
            raise SimplexError(f"mark has dim {t.size}, scene radix {radix}")
        checked_marks.append(m)
    checked_segments = []
    for a, b in segments:
        ta, tb = validate_simplex(np.asarray(a), tol), validate_simplex(np.asarray(b), tol)
        if ta.size != radix or tb.size != radix:
            raise SimplexError("segment endpoint dimension mismatch")
        checked_segments.append((tuple(float(x) for x in ta), tuple(float(x) for x in tb)))
    return FigureScene(
        kind="simplex",
        radix=radix,
        marks=tuple(checked_marks),
        segments=tuple(checked_segments),
    )


def fiber_free_axes(base: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> tuple[int, list[int]]:
    """Pivot and the non-pivot defined axes of the fiber over ``base``.

    Mirrors the pivot convention of the toric decomposition, so a scene
    can be reconstructed from its base point alone.
    """
    defined = np.flatnonzero(np.asarray(base, dtype=float) > tol.tol_zero)
    if defined.size == 0:
        raise SimplexError("base point has no component above tol_zero")
    return int(defined[0]), [int(i) for i in defined[1:]]


def scene_torus_fiber(
    tp: ToricPoint, mode: str = "unit", label: str = "", tol: Tolerances = DEFAULT_TOL
) -> FigureScene:
    """Cut-open fiber view with one mark at the point's phases.

    The affine mode derives true edge lengths and angles from the orbit
    metric and is implemented for radix 3 (a parallelogram); the radix-4
    fiber is drawn as an axonometric cube in unit mode only.
    """
    validate_toric_point(tp, tol)
    if mode not in ("unit", "affine"):
        raise UnsupportedError(f"unknown geometry mode {mode!r}")
    if mode == "affine" and tp.dim != 3:
        raise UnsupportedError("affine fiber rendering is a radix-3 parallelogram")
    _, axes = fiber_free_axes(tp.convex, tol)
    phases = tuple(float(tp.phases[i]) for i in axes)
    return FigureScene(
        kind="torus_fiber",
        radix=tp.dim,
        marks=(Mark(position=phases, label=label),),
        fiber_base=SimplexPoint(coords=np.asarray(tp.convex, dtype=float)),
        geometry_mode=mode,
    )


# ──────────────────────────────────────────────────────────────────────
# embeddings (everything lands in the plane, y up)
# ──────────────────────────────────────────────────────────────────────

def _axo(p3: np.ndarray) -> np.ndarray:
    return np.array([p3[0] + AXO_X * p3[2], p3[1] + AXO_Y * p3[2]])


def simplex_vertices_2d(radix: int) -> list[np.ndarray]:
    if radix == 2:
        return [np.array([0.0, 0.0]), np.array([1.0, 0.0])]
    if radix == 3:
        return list(_TRI)
    return [_axo(v) for v in _TETRA]


def embed_simplex(radix: int, coords) -> np.ndarray:
    """Linear embedding of barycentric coordinates into the plane."""
    verts = simplex_vertices_2d(radix)
    t = np.asarray(coords, dtype=float)
    return sum(t[i] * verts[i] for i in range(radix))


def _fiber_frame(scene: FigureScene, tol: Tolerances) -> list[np.ndarray]:
    """Planar edge vectors of the cut-open fundamental domain.

    One vector per free phase axis; the cube's third edge is the fixed
    axonometric image of the z direction (projection is linear, so all
    interior arithmetic can stay two-dimensional).
    """
    base = np.asarray(scene.fiber_base.coords, dtype=float)
    pivot, axes = fiber_free_axes(base, tol)
    n = len(axes)
    if scene.geometry_mode == "unit":
        units = [
            np.array([1.0, 0.0]),
            np.array([0.0, 1.0]),
            np.array([AXO_X, AXO_Y]),
        ]
        return [TWO_PI * units[i] for i in range(n)]
    og = orbit_gram(base, pivot, tol)
    sub = [og.axes.index(a) for a in axes]
    g = og.gram[np.ix_(sub, sub)]
    if n == 1:
        return [np.array([TWO_PI * np.sqrt(max(g[0, 0], 0.0)), 0.0])]
    # 2-d Cholesky: first edge along x, second at the true angle
    e1 = np.array([np.sqrt(g[0, 0]), 0.0])
    e2x = g[0, 1] / e1[0]
    e2y = np.sqrt(max(g[1, 1] - e2x**2, 0.0))
    return [TWO_PI * e1, TWO_PI * np.array([e2x, e2y])]


def _embed_fiber(phases, frame) -> np.ndarray:
    out = np.zeros(2)
    for theta, edge in zip(phases, frame):
        out = out + (float(theta) / TWO_PI) * edge
    return out


# ──────────────────────────────────────────────────────────────────────
# SVG emission
# ──────────────────────────────────────────────────────────────────────

def _fmt(x: float) -> str:
    v = float(x)
    if v == 0.0:  # normalize negative zero for stable output
        v = 0.0
    return f"{v:.6f}"


class _Canvas:
    """Maps math coordinates (y up) onto pixel coordinates (y down)."""

    def __init__(self, points: list[np.ndarray], width: int, height: int, margin: float = 48.0):
        pts = np.array(points)
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        span = np.maximum(hi - lo, 1e-9)
        self.scale = min((width - 2 * margin) / span[0], (height - 2 * margin) / span[1])
        self.lo = lo
        self.height = height
        self.offset = np.array(
            [
                (width - self.scale * span[0]) / 2.0,
                (height - self.scale * span[1]) / 2.0,
            ]
        )

    def px(self, p) -> tuple[float, float]:
        q = (np.asarray(p, dtype=float) - self.lo) * self.scale + self.offset
        return float(q[0]), float(self.height - q[1])


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _line(c: _Canvas, a, b, stroke="#404040", width=1.2, dash=None) -> str:
    x1, y1 = c.px(a)
    x2, y2 = c.px(b)
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{stroke}" stroke-width="{_fmt(width)}"{extra} />'
    )


def _text(c: _Canvas, p, content: str, dx=0.0, dy=0.0, size=13, anchor="start") -> str:
    x, y = c.px(p)
    return (
        f'<text x="{_fmt(x + dx)}" y="{_fmt(y + dy)}" font-family="Helvetica, Arial, sans-serif" '
        f'font-size="{size}" text-anchor="{anchor}" fill="#1a1a1a">{_esc(content)}</text>'
    )


def _circle(c: _Canvas, p, r=4.0, style="dot") -> str:
    x, y = c.px(p)
    fill = _MARK_FILL.get(style, "#1a1a1a")
    return (
        f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{fill}" '
        f'stroke="#1a1a1a" stroke-width="1.000000" />'
    )


def _tick_marks(c: _Canvas, a, b, count: int) -> list[str]:
    """Chevron ticks across the midpoint of edge a→b (identification cue)."""
    a2, b2 = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    direction = b2 - a2
    nrm = float(np.linalg.norm(direction))
    if nrm < 1e-12:
        return []
    direction = direction / nrm
    normal = np.array([-direction[1], direction[0]])
    out = []
    tick_len = 0.035 * nrm
    for k in range(count):
        mid = a2 + (0.5 + 0.06 * (k - (count - 1) / 2)) * nrm * direction
        out.append(
            _line(c, mid - tick_len * normal, mid + tick_len * normal, stroke="#808080", width=1.0)
        )
    return out


def _label_stack(marks, idx) -> int:
    return sum(
        1
        for prev in marks[:idx]
        if len(prev.position) == len(marks[idx].position)
        and np.allclose(prev.position, marks[idx].position, atol=1e-9)
    )


def _simplex_elements(scene: FigureScene, c: _Canvas, verts) -> list[str]:
    radix = scene.radix
    parts = []
    for i in range(radix):
        for j in range(i + 1, radix):
            parts.append(_line(c, verts[i], verts[j], stroke="#303030", width=1.4))
    centroid = sum(verts) / radix
    for i, v in enumerate(verts):
        away = v - centroid
        away = away / max(float(np.linalg.norm(away)), 1e-9)
        parts.append(
            _text(c, v, _KET_LABELS[radix][i], dx=14 * away[0] - 10, dy=-14 * away[1] + 4)
        )
    for a, b in scene.segments:
        parts.append(
            _line(c, embed_simplex(radix, a), embed_simplex(radix, b), stroke="#b03030", width=1.6)
        )
    for idx, m in enumerate(scene.marks):
        p = embed_simplex(radix, m.position)
        parts.append(_circle(c, p, style=m.style))
        if m.label:
            parts.append(_text(c, p, m.label, dx=8, dy=-8 - 15 * _label_stack(scene.marks, idx)))
    return parts


def _fiber_elements(scene: FigureScene, c: _Canvas, frame) -> list[str]:
    parts = []
    n = len(frame)
    origin = np.zeros(2)
    if n == 0:
        parts.append(_text(c, origin, "point fiber (exceptional orbit)", dx=10, dy=4))
    elif n == 1:
        parts.append(_line(c, origin, frame[0], stroke="#303030", width=1.4))
        parts.extend(_tick_marks(c, origin, frame[0], 1))
    elif n == 2:
        e1, e2 = frame
        corners = [origin, e1, e1 + e2, e2]
        for k in range(4):
            parts.append(_line(c, corners[k], corners[(k + 1) % 4], stroke="#303030", width=1.4))
        parts.extend(_tick_marks(c, origin, e1, 1))
        parts.extend(_tick_marks(c, e2, e2 + e1, 1))
        parts.extend(_tick_marks(c, origin, e2, 2))
        parts.extend(_tick_marks(c, e1, e1 + e2, 2))
    else:
        e1, e2, e3 = frame
        bottom = [origin, e1, e1 + e2, e2]
        for k in range(4):
            dash = "4,3" if k >= 2 else None
            parts.append(
                _line(c, bottom[k], bottom[(k + 1) % 4], stroke="#303030", width=1.2, dash=dash)
            )
        for k in range(4):
            parts.append(
                _line(c, bottom[k] + e3, bottom[(k + 1) % 4] + e3, stroke="#303030", width=1.2)
            )
        for k, corner in enumerate(bottom):
            dash = "4,3" if k in (2, 3) else None
            parts.append(_line(c, corner, corner + e3, stroke="#303030", width=1.2, dash=dash))
    for a, b in scene.segments:
        parts.append(_line(c, _embed_fiber(a, frame), _embed_fiber(b, frame), stroke="#b03030", width=1.4))
    for idx, m in enumerate(scene.marks):
        p = _embed_fiber(m.position, frame)
        parts.append(_circle(c, p, style=m.style))
        if m.label:
            parts.append(_text(c, p, m.label, dx=8, dy=-8 - 15 * _label_stack(scene.marks, idx)))
    caption = "fiber over (" + ", ".join(_fmt(t) for t in scene.fiber_base.coords) + ")"
    parts.append(_text(c, origin, caption, dy=30, size=12))
    return parts


def _scene_points(scene: FigureScene, frame=None) -> list[np.ndarray]:
    pts: list[np.ndarray] = []
    if scene.kind == "simplex":
        pts.extend(simplex_vertices_2d(scene.radix))
        for m in scene.marks:
            pts.append(embed_simplex(scene.radix, m.position))
        for a, b in scene.segments:
            pts.append(embed_simplex(scene.radix, a))
            pts.append(embed_simplex(scene.radix, b))
    else:
        n = len(frame)
        pts.append(np.zeros(2))
        for subset in range(1, 2**n):
            s = np.zeros(2)
            for i in range(n):
                if subset & (1 << i):
                    s = s + frame[i]
            pts.append(s)
        for m in scene.marks:
            pts.append(_embed_fiber(m.position, frame))
    return pts


def validate_scene(scene: FigureScene, tol: Tolerances = DEFAULT_TOL) -> None:
    """Structural validation used by the HTTP render endpoint."""
    if scene.kind not in ("simplex", "torus_fiber"):
        raise UnsupportedError(f"unknown scene kind {scene.kind!r}")
    if scene.radix not in (2, 3, 4):
        raise ShapeError(f"scene radix must be 2/3/4, got {scene.radix}")
    if scene.geometry_mode not in ("unit", "affine"):
        raise UnsupportedError(f"unknown geometry mode {scene.geometry_mode!r}")
    if scene.kind == "simplex":
        for m in scene.marks:
            t = validate_simplex(np.asarray(m.position), tol)
            if t.size != scene.radix:
                raise SimplexError("mark dimension does not match scene radix")
        for a, b in scene.segments:
            for end in (a, b):
                t = validate_simplex(np.asarray(end), tol)
                if t.size != scene.radix:
                    raise SimplexError("segment dimension does not match scene radix")
    else:
        if scene.fiber_base is None:
            raise SimplexError("torus_fiber scene requires a fiber_base")
        base = validate_simplex(scene.fiber_base.coords, tol)
        if base.size != scene.radix:
            raise SimplexError("fiber_base dimension does not match scene radix")
        if scene.geometry_mode == "affine" and scene.radix != 3:
            raise UnsupportedError("affine fiber rendering is a radix-3 parallelogram")
        _, axes = fiber_free_axes(base, tol)
        for m in scene.marks:
            if len(m.position) != len(axes):
                raise ShapeError("fiber mark must give one phase per free axis")
            for theta in m.position:
                if not 0.0 <= float(theta) < TWO_PI:
                    raise ShapeError(f"phase {theta!r} outside [0, 2π)")
        for a, b in scene.segments:
            if len(a) != len(axes) or len(b) != len(axes):
                raise ShapeError("fiber segment must give one phase per free axis")


def to_svg(
    scene: FigureScene,
    width_px: int = 640,
    height_px: int = 560,
    tol: Tolerances = DEFAULT_TOL,
) -> str:
    """Render a scene as a standalone SVG 1.1 document (deterministic)."""
    if width_px <= 0 or height_px <= 0:
        raise ShapeError("SVG dimensions must be positive")
    validate_scene(scene, tol)
    frame = _fiber_frame(scene, tol) if scene.kind == "torus_fiber" else None
    canvas = _Canvas(_scene_points(scene, frame), width_px, height_px)
    if scene.kind == "simplex":
        body = _simplex_elements(scene, canvas, simplex_vertices_2d(scene.radix))
    else:
        body = _fiber_elements(scene, canvas, frame)
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width_px}" '
        f'height="{height_px}" viewBox="0 0 {width_px} {height_px}">',
        f'<rect x="0" y="0" width="{width_px}" height="{height_px}" fill="#ffffff" />',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"
