"""Prebuilt reference figures: named scenes reproducing the atlas views.

Each builder returns a scene assembled from live computations (gate
images, locus parametrizations), so the committed golden SVGs double as
regression tests for the underlying math.  The figure numbers follow the
reproduction guide in the README.
"""

from __future__ import annotations

import numpy as np

from . import entangle, gatecat
from .render import FigureScene, Mark, scene_simplex, scene_torus_fiber
from .toric import decompose

SURFACE_GRID = 17  # fixed wireframe resolution for the ruled surface


def chrestenson_triangle_scene(gate_name: str = "QFT3", mode: str = "unit") -> FigureScene:
    """Basis-state images of a uniformizer in the fiber above the barycenter.

    For the Fourier gate the three marks A, B, C sit at phase pairs
    (0,0), (2π/3, 4π/3) and (4π/3, 2π/3).
    """
    gate = gatecat.get_gate(3, gate_name)
    points = gatecat.barycenter_image([gate])
    labels = ("A", "B", "C")
    scene = scene_torus_fiber(points[0], mode=mode, label=labels[0])
    marks = [scene.marks[0]]
    for tp, label in zip(points[1:], labels[1:]):
        marks.append(Mark(position=(float(tp.phases[1]), float(tp.phases[2])), label=label))
    triangle = tuple(
        (marks[i].position, marks[(i + 1) % 3].position) for i in range(3)
    )
    return FigureScene(
        kind="torus_fiber",
        radix=3,
        marks=tuple(marks),
        segments=triangle,
        fiber_base=scene.fiber_base,
        geometry_mode=mode,
    )


ME_SEGMENT_ENDPOINTS = ((0.5, 0.0, 0.0, 0.5), (0.0, 0.5, 0.5, 0.0))


def me_segment_scene() -> FigureScene:
    """The maximally entangled locus in the 3-simplex.

    All maximally entangled states lie over the segment joining the
    midpoints of the two diagonal edges; the fiber over the interior
    carries a 2-sphere of phases, the endpoints whole circles.
    """
    a, b = ME_SEGMENT_ENDPOINTS
    return scene_simplex(
        4,
        marks=[Mark(position=a, label="mid(|00>,|11>)"), Mark(position=b, label="mid(|01>,|10>)")],
        segments=[(a, b)],
    )


def separable_surface_scene() -> FigureScene:
    """The separable locus: wireframe of the ruled surface p00·p11 = p01·p10.

    Product probabilities factor as (ab, a(1−b), (1−a)b, (1−a)(1−b));
    the wireframe samples that parametrization on a fixed grid.
    """

    def point(a: float, b: float) -> tuple[float, ...]:
        return (a * b, a * (1 - b), (1 - a) * b, (1 - a) * (1 - b))

    ticks = [k / (SURFACE_GRID - 1) for k in range(SURFACE_GRID)]
    segments = []
    for a in ticks:
        for j in range(SURFACE_GRID - 1):
            segments.append((point(a, ticks[j]), point(a, ticks[j + 1])))
    for b in ticks:
        for i in range(SURFACE_GRID - 1):
            segments.append((point(ticks[i], b), point(ticks[i + 1], b)))
    return scene_simplex(4, marks=[], segments=segments)


def bell_basis_scene() -> FigureScene:
    """The four Bell states over the midpoints of the two diagonal edges."""
    labels = ("Phi+", "Phi-", "Psi+", "Psi-")
    marks = []
    for label, state in zip(labels, entangle.bell_basis()):
        tp = decompose(state)
        marks.append(Mark(position=tuple(float(p) for p in tp.convex), label=label))
    a, b = ME_SEGMENT_ENDPOINTS
    return scene_simplex(4, marks=marks, segments=[(a, b)])


def epr_product_report() -> dict:
    """The two-factor composite identity in exact printed integer form."""
    cnot = gatecat.get_gate(4, "CNOT_paper")
    ixh = gatecat.get_gate(4, "IxH")
    epr = gatecat.get_gate(4, "EPR_math")
    product = cnot.printed @ ixh.printed

    def grid(m: np.ndarray) -> list[list[float]]:
        return [[float(z.real) for z in row] for row in m]

    return {
        "cnot": grid(cnot.printed),
        "identity_tensor_hadamard": grid(ixh.printed),
        "epr": grid(epr.printed),
        "product_equals_epr": bool(np.array_equal(product, epr.printed)),
        "suppressed_scalar": epr.printed_scalar,
    }


PAPER_FIGURES = {
    "13": lambda: chrestenson_triangle_scene("QFT3"),
    "16": me_segment_scene,
    "17": separable_surface_scene,
    "19": bell_basis_scene,
}


def paper_figure_scene(number: str) -> FigureScene:
    if str(number) not in PAPER_FIGURES:
        raise KeyError(f"no prebuilt figure {number!r}; available: 13, 16, 17, 19, 20")
    return PAPER_FIGURES[str(number)]()
