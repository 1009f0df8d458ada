"""Simplex-times-torus coordinates on pure state space.

A unit state of dimension d splits into a *convex* coordinate (the
probability vector over the measurement basis, a point of the standard
(d−1)-simplex) and a *periodic* coordinate (relative phases in the pivot
gauge, a point of the torus fiber over that simplex point).  Fibers over
boundary strata degenerate: components with probability at or below
``tol_zero`` carry no phase and are masked.

The module also provides the three cartographic maps from the
non-negative octant of the unit sphere to flat space (squared-modulus,
gnomonic, stereographic), the fiber metric pulled back from the
Fubini-Study metric, and the classic quotient map of the 3-sphere onto
the extended complex plane.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidToricPointError,
    NormError,
    OctantError,
    ShapeError,
    SimplexError,
)
from .qlinalg import DEFAULT_TOL, Tolerances, as_state

TWO_PI = 2.0 * np.pi

# Returned by hopf() at the pole where the second coordinate vanishes.
HOPF_INFINITY = complex(np.inf, 0.0)


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ToricPoint:
    """Convex + periodic coordinates of a phase-equivalence class.

    convex  : probabilities p_i, summing to 1
    phases  : relative phases θ_i in [0, 2π); θ_pivot = 0; masked → 0
    defined : mask, False exactly where convex_i ≤ tol_zero
    pivot   : smallest index with convex_i > tol_zero
    """

    convex: np.ndarray
    phases: np.ndarray
    defined: np.ndarray
    pivot: int

    @property
    def dim(self) -> int:
        return int(self.convex.size)

    def to_json(self) -> dict:
        return {
            "convex": [float(p) for p in self.convex],
            "phases": [float(t) for t in self.phases],
            "defined": [bool(b) for b in self.defined],
            "pivot": int(self.pivot),
        }

    @staticmethod
    def from_json(obj: dict) -> "ToricPoint":
        return ToricPoint(
            convex=_readonly(np.asarray(obj["convex"], dtype=float)),
            phases=_readonly(np.asarray(obj["phases"], dtype=float)),
            defined=_readonly(np.asarray(obj["defined"], dtype=bool)),
            pivot=int(obj["pivot"]),
        )


@dataclass(frozen=True)
class SimplexPoint:
    """Barycentric coordinates t with Σt = 1 and t_i ≥ 0."""

    coords: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.coords.size)

    def to_json(self) -> dict:
        return {"coords": [float(t) for t in self.coords]}

    @staticmethod
    def from_json(obj: dict) -> "SimplexPoint":
        return SimplexPoint(coords=_readonly(np.asarray(obj["coords"], dtype=float)))


@dataclass(frozen=True)
class OrbitGram:
    """Pullback metric data of the torus orbit over a simplex point.

    gram         : Gram matrix of the phase-direction tangent vectors,
                   indexed by the non-pivot coordinates
    edge_lengths : lengths 2π·√(gram_ii) of the fundamental-domain edges
    angles       : pairwise angles between edge directions (NaN where an
                   edge degenerates to length zero)
    pivot        : the gauge index the non-pivot axes are relative to
    axes         : the non-pivot coordinate indices, in order
    """

    gram: np.ndarray
    edge_lengths: np.ndarray
    angles: np.ndarray
    pivot: int
    axes: tuple[int, ...]

    @property
    def rank(self) -> int:
        if self.gram.size == 0:
            return 0
        return int(np.linalg.matrix_rank(self.gram, tol=1e-12))


def validate_simplex(coords, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Check and return barycentric coordinates as a float array."""
    t = np.asarray(coords, dtype=float)
    if t.ndim != 1 or t.size == 0:
        raise SimplexError("simplex point must be a 1-d coordinate vector")
    if np.any(t < -tol.tol_geom):
        raise SimplexError("simplex coordinates must be non-negative")
    if abs(float(t.sum()) - 1.0) > tol.tol_geom:
        raise SimplexError(f"simplex coordinates sum to {t.sum()!r}, expected 1")
    return t


def validate_toric_point(tp: ToricPoint, tol: Tolerances = DEFAULT_TOL) -> None:
    """Raise ``InvalidToricPointError`` unless all structural invariants hold."""
    p, th, df = tp.convex, tp.phases, tp.defined
    d = p.size
    if not (th.size == d and df.size == d):
        raise InvalidToricPointError("field lengths disagree")
    if not 0 <= tp.pivot < d:
        raise InvalidToricPointError("pivot out of range")
    if np.any(p < -tol.tol_norm) or np.any(p > 1 + tol.tol_norm):
        raise InvalidToricPointError("probabilities must lie in [0, 1]")
    if abs(float(p.sum()) - 1.0) > tol.tol_norm:
        raise InvalidToricPointError(f"probabilities sum to {p.sum()!r}")
    if not df[tp.pivot] or th[tp.pivot] != 0.0:
        raise InvalidToricPointError("pivot phase must be 0 and defined")
    expected_mask = p > tol.tol_zero
    if not np.array_equal(df, expected_mask):
        raise InvalidToricPointError("defined mask must match convex > tol_zero")
    if np.any(th[~df] != 0.0):
        raise InvalidToricPointError("masked phases must be the canonical 0")
    if np.any(th < 0.0) or np.any(th >= TWO_PI):
        raise InvalidToricPointError("phases must lie in [0, 2π)")


def decompose(state, tol: Tolerances = DEFAULT_TOL) -> ToricPoint:
    """Split a unit state into convex and periodic toric coordinates.

    The pivot is the smallest index whose probability exceeds
    ``tol_zero``; phases are taken relative to the pivot's argument so
    the result is constant on each phase-equivalence class.

    Parameters
    ----------
    state : array_like
        Unit-norm complex vector of dimension 2, 3 or 4.

    Returns
    -------
    ToricPoint
    """
    s = as_state(state, tol)
    if s.size not in (2, 3, 4):
        raise ShapeError(f"toric coordinates support dim 2/3/4, got {s.size}")
    p = np.abs(s) ** 2
    defined = p > tol.tol_zero
    pivots = np.flatnonzero(defined)
    if pivots.size == 0:
        raise NormError("state has no component above tol_zero")
    pivot = int(pivots[0])
    phases = np.zeros(s.size)
    ref = np.angle(s[pivot])
    phases[defined] = np.mod(np.angle(s[defined]) - ref, TWO_PI)
    # mod can return 2π when the argument is a hair below zero
    phases[phases >= TWO_PI] = 0.0
    phases[pivot] = 0.0
    return ToricPoint(
        convex=_readonly(p),
        phases=_readonly(phases),
        defined=_readonly(defined),
        pivot=pivot,
    )


def reconstruct(tp: ToricPoint, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse of :func:`decompose` up to global phase.

    Returns the unit vector with entries ``√p_i · e^{iθ_i}``.
    """
    validate_toric_point(tp, tol)
    v = np.sqrt(np.clip(tp.convex, 0.0, None)) * np.exp(1j * tp.phases)
    return v / np.linalg.norm(v)


def _octant_unit(x, tol: Tolerances) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ShapeError("expected a 1-d real vector")
    if np.any(v < 0.0):
        raise OctantError("point must lie in the non-negative octant")
    if abs(np.linalg.norm(v) - 1.0) > tol.tol_norm:
        raise NormError("point must lie on the unit sphere")
    return v


def squared_map(x, tol: Tolerances = DEFAULT_TOL) -> SimplexPoint:
    """Map an octant sphere point to the simplex of its squared lengths.

    This is the raw measurement-probability map t_i = x_i².  Useful but
    geometrically crude: great circles do not map to straight lines.
    """
    v = _octant_unit(x, tol)
    return SimplexPoint(coords=_readonly(v**2))


def gnomonic(x, tol: Tolerances = DEFAULT_TOL) -> SimplexPoint:
    """Central projection of an octant sphere point onto the simplex plane.

    Projects from the sphere's center onto the affine hull Σt = 1 of the
    standard simplex, so arcs of great circles land on straight lines.
    """
    v = _octant_unit(x, tol)
    s = float(v.sum())
    if s <= 0.0:
        raise OctantError("cannot project the zero direction")
    return SimplexPoint(coords=_readonly(v / s))


def stereographic(x, pole_axis: int, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Angle-preserving projection onto the tangent hyperplane at ``e_k``.

    Projects from the antipode ``−e_k`` onto the hyperplane ``y_k = 1``:
    ``y_i = 2 x_i / (1 + x_k)`` for i ≠ k.  Conformal, unlike the
    gnomonic map, at the price of bending great circles.
    """
    v = _octant_unit(x, tol)
    k = int(pole_axis)
    if not 0 <= k < v.size:
        raise ShapeError(f"pole_axis {k} out of range for dim {v.size}")
    y = 2.0 * v / (1.0 + v[k])
    y[k] = 1.0
    return y


def orbit_gram(convex, pivot: int, tol: Tolerances = DEFAULT_TOL) -> OrbitGram:
    """Fubini-Study metric pulled back to the torus orbit over ``convex``.

    In the pivot gauge the non-pivot phases are coordinates on the orbit;
    their tangent Gram matrix is ``g_ii = p_i − p_i²`` and
    ``g_ij = −p_i p_j``.  The rank drops by one for every vanishing
    non-pivot probability, and the orbit over a vertex is a point.
    """
    if isinstance(convex, SimplexPoint):
        t = validate_simplex(convex.coords, tol)
    else:
        t = validate_simplex(convex, tol)
    d = t.size
    k = int(pivot)
    if not 0 <= k < d:
        raise SimplexError(f"pivot {k} out of range for dim {d}")
    axes = tuple(i for i in range(d) if i != k)
    p = t[list(axes)]
    gram = np.diag(p) - np.outer(p, p)
    edge = TWO_PI * np.sqrt(np.clip(np.diag(gram), 0.0, None))
    n = len(axes)
    angles = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            denom = np.sqrt(gram[i, i] * gram[j, j])
            if denom <= 0.0:
                angles[i, j] = np.nan
            else:
                angles[i, j] = float(np.arccos(np.clip(gram[i, j] / denom, -1, 1)))
    return OrbitGram(
        gram=_readonly(gram),
        edge_lengths=_readonly(edge),
        angles=_readonly(angles),
        pivot=k,
        axes=axes,
    )


def hopf(z0: complex, z1: complex) -> complex:
    """Quotient map of the 3-sphere onto the extended complex plane.

    ``(z0, z1) ↦ z0/z1`` with the pole ``z1 = 0`` sent to
    :data:`HOPF_INFINITY`.  The comparison with zero is exact.
    """
    z0, z1 = complex(z0), complex(z1)
    if z0 == 0 and z1 == 0:
        raise NormError("hopf map is undefined at the origin")
    if z1 == 0:
        return HOPF_INFINITY
    return z0 / z1
