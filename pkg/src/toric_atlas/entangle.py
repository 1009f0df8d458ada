"""Two-qubit entanglement geometry in toric coordinates.

Amplitudes are ordered (z₀₀, z₀₁, z₁₀, z₁₁) in the math reading; the
engineering reading is accepted everywhere via the ``notation`` flag and
converted by bit reversal before any formula is applied.

The separable states sit over the surface p₀₀p₁₁ = p₀₁p₁₀ of the
3-simplex (with matching phase sum), the maximally entangled states over
the segment p₀₀ = p₁₁, p₀₁ = p₁₀ (with opposite phase sum).  These
locus predicates are validated against the spectral classification in
the tests rather than asserted as given facts.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import optimize

from .errors import ShapeError
from .gatecat import Notation, bit_reverse_state
from .qlinalg import DEFAULT_TOL, Tolerances, as_state
from .toric import ToricPoint, decompose

TWO_PI = 2.0 * np.pi


class EntanglementClass(str, Enum):
    SEPARABLE = "separable"
    PARTIAL = "partial"
    MAXIMAL = "maximal"


@dataclass(frozen=True)
class EntanglementReport:
    """Classification of a pure two-qubit state."""

    concurrence: float
    schmidt: tuple[float, float]
    klass: EntanglementClass
    simplex_on_me_segment: bool
    simplex_on_sep_surface: bool

    def to_json(self) -> dict:
        return {
            "concurrence": self.concurrence,
            "schmidt": list(self.schmidt),
            "class": self.klass.value,
            "simplex_on_me_segment": self.simplex_on_me_segment,
            "simplex_on_sep_surface": self.simplex_on_sep_surface,
        }


def _amplitude_matrix(s, notation, tol) -> np.ndarray:
    v = as_state(s, tol)
    if v.size != 4:
        raise ShapeError(f"two-qubit operations need dim 4, got {v.size}")
    if Notation(notation) is Notation.ENGINEERING:
        v = bit_reverse_state(v)
    return v.reshape(2, 2)


def concurrence(s, notation=Notation.MATH, tol: Tolerances = DEFAULT_TOL) -> float:
    """2·|z₀₀z₁₁ − z₀₁z₁₀|, in [0, 1]; 0 separable, 1 maximally entangled."""
    z = _amplitude_matrix(s, notation, tol)
    return float(2.0 * abs(z[0, 0] * z[1, 1] - z[0, 1] * z[1, 0]))


def schmidt(s, notation=Notation.MATH, tol: Tolerances = DEFAULT_TOL) -> tuple[float, float]:
    """Singular values (λ₁ ≥ λ₂) of the 2×2 amplitude matrix."""
    z = _amplitude_matrix(s, notation, tol)
    sv = np.linalg.svd(z, compute_uv=False)
    return float(sv[0]), float(sv[1])


def classify(
    s,
    tol_class: float = 1e-9,
    notation=Notation.MATH,
    tol: Tolerances = DEFAULT_TOL,
) -> EntanglementReport:
    """Full entanglement report for a unit two-qubit state.

    A state is separable when its concurrence is at most ``tol_class``
    and maximal when it is at least ``1 − tol_class``; everything else is
    partially entangled.  The simplex flags record whether the convex
    coordinate lies on the maximal segment / separable surface.
    """
    z = _amplitude_matrix(s, notation, tol)
    v = z.reshape(4)
    c = float(2.0 * abs(z[0, 0] * z[1, 1] - z[0, 1] * z[1, 0]))
    sv = np.linalg.svd(z, compute_uv=False)
    if c <= tol_class:
        klass = EntanglementClass.SEPARABLE
    elif c >= 1.0 - tol_class:
        klass = EntanglementClass.MAXIMAL
    else:
        klass = EntanglementClass.PARTIAL
    p = np.abs(v) ** 2
    on_me = abs(p[0] - p[3]) <= tol.tol_geom and abs(p[1] - p[2]) <= tol.tol_geom
    on_sep = abs(p[0] * p[3] - p[1] * p[2]) <= tol.tol_geom
    if klass is EntanglementClass.MAXIMAL and np.all(p > tol.tol_zero):
        # Consistency: interior maximal states carry opposite phase pairs,
        # arg(z₀₀z₁₁) − arg(z₀₁z₁₀) ≡ π.  Concurrence ≥ 1 − ε only forces
        # 4ab(1 + cos φ) ≤ ~ε (a, b the two amplitude products), so the
        # check uses exactly that implied bound plus float slack.
        a = float(np.sqrt(p[0] * p[3]))
        b = float(np.sqrt(p[1] * p[2]))
        phi = np.angle(z[0, 0] * z[1, 1]) - np.angle(z[0, 1] * z[1, 0])
        if 4.0 * a * b * (1.0 + np.cos(phi)) > 2.0 * tol_class + 1e-9:
            raise ArithmeticError("maximal state failed the phase-sum check")
    return EntanglementReport(
        concurrence=c,
        schmidt=(float(sv[0]), float(sv[1])),
        klass=klass,
        simplex_on_me_segment=bool(on_me),
        simplex_on_sep_surface=bool(on_sep),
    )


def _wrap_pi(theta: float) -> float:
    """Wrap an angle to (−π, π]."""
    out = np.mod(theta + np.pi, TWO_PI) - np.pi
    return float(np.pi) if out == -np.pi else float(out)


def _phase_sum_defect(tp: ToricPoint, target: float) -> float:
    """|θ₁₁ − θ₀₁ − θ₁₀ − target| on the circle, pivot-0 gauge."""
    th = tp.phases
    return abs(_wrap_pi(float(th[3] - th[1] - th[2]) - target))


def me_locus_contains(tp: ToricPoint, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Membership in the maximally entangled locus.

    Convex test: p₀₀ = p₁₁ and p₀₁ = p₁₀.  Over interior points the
    fiber condition θ₁₁ − θ₀₁ − θ₁₀ ≡ π must hold as well; over the two
    segment endpoints the whole phase circle qualifies.
    """
    if tp.dim != 4:
        raise ShapeError("maximal-entanglement locus lives at radix 4")
    p = tp.convex
    if abs(p[0] - p[3]) > tol.tol_geom or abs(p[1] - p[2]) > tol.tol_geom:
        return False
    pair_a = min(p[0], p[3]) > tol.tol_zero
    pair_b = min(p[1], p[2]) > tol.tol_zero
    if pair_a and pair_b:
        return _phase_sum_defect(tp, np.pi) <= tol.tol_geom
    return True


def sep_locus_contains(tp: ToricPoint, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Membership in the separable locus.

    Convex test: p₀₀p₁₁ = p₀₁p₁₀ (the ruled surface).  When every
    component is positive the fiber condition θ₁₁ ≡ θ₀₁ + θ₁₀ applies;
    on boundary strata both products vanish and separability follows
    from the convex equality alone.
    """
    if tp.dim != 4:
        raise ShapeError("separable locus lives at radix 4")
    p = tp.convex
    if abs(p[0] * p[3] - p[1] * p[2]) > tol.tol_geom:
        return False
    if np.all(p > tol.tol_zero):
        return _phase_sum_defect(tp, 0.0) <= tol.tol_geom
    return True


def min_distance_to_separable(
    s, notation=Notation.MATH, tol: Tolerances = DEFAULT_TOL
) -> float:
    """Fubini-Study distance to the nearest product state.

    The nearest product state realizes overlap λ₁ (the larger Schmidt
    value), so the distance is arccos λ₁ — at most π/4, with equality
    exactly on the maximally entangled states.
    """
    l1, _ = schmidt(s, notation, tol)
    return float(np.arccos(min(1.0, l1)))


def _product_state(params) -> np.ndarray:
    a, b, g, d = params
    u = np.array([np.cos(a), np.exp(1j * b) * np.sin(a)])
    v = np.array([np.cos(g), np.exp(1j * d) * np.sin(g)])
    return np.kron(u, v)


def _overlap_objective(v: np.ndarray):
    """Scalar-math fs_distance to the product state with given parameters.

    Plain complex arithmetic keeps the objective cheap enough for many
    thousands of optimizer evaluations.
    """
    c0, c1, c2, c3 = (complex(z) for z in np.conj(v))

    def objective(x) -> float:
        a, b, g, d = float(x[0]), float(x[1]), float(x[2]), float(x[3])
        u0, u1 = math.cos(a), cmath.exp(1j * b) * math.sin(a)
        w0, w1 = math.cos(g), cmath.exp(1j * d) * math.sin(g)
        overlap = abs(c0 * u0 * w0 + c1 * u0 * w1 + c2 * u1 * w0 + c3 * u1 * w1)
        return math.acos(min(1.0, overlap))

    return objective


def _product_bank(n_samples: int, rng: np.random.Generator):
    """Haar-random product states plus their factor parameters."""
    u0 = rng.normal(size=(n_samples, 2)) + 1j * rng.normal(size=(n_samples, 2))
    u1 = rng.normal(size=(n_samples, 2)) + 1j * rng.normal(size=(n_samples, 2))
    u0 /= np.linalg.norm(u0, axis=1, keepdims=True)
    u1 /= np.linalg.norm(u1, axis=1, keepdims=True)
    bank = np.einsum("ni,nj->nij", u0, u1).reshape(n_samples, 4)
    return bank, u0, u1


def _refine(v: np.ndarray, x0: np.ndarray, start: float) -> float:
    result = optimize.minimize(
        _overlap_objective(v),
        x0,
        method="Nelder-Mead",
        options={"xatol": 1e-6, "fatol": 1e-10, "maxiter": 160},
    )
    return float(min(start, result.fun))


def _bank_minimum(v, bank, u0, u1, refine: bool) -> float:
    overlaps = np.abs(bank @ v.conj())
    best = int(np.argmax(overlaps))
    dist = float(np.arccos(min(1.0, float(overlaps[best]))))
    if not refine:
        return dist
    x0 = np.array(
        [
            np.arccos(min(1.0, abs(u0[best, 0]))),
            np.angle(u0[best, 1]) - np.angle(u0[best, 0]),
            np.arccos(min(1.0, abs(u1[best, 0]))),
            np.angle(u1[best, 1]) - np.angle(u1[best, 0]),
        ]
    )
    return _refine(v, x0, dist)


def sampled_min_distance(
    s,
    n_samples: int = 100_000,
    seed: int = 0,
    refine: bool = True,
    notation=Notation.MATH,
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Independent oracle: minimize fs_distance over sampled product states.

    Draws ``n_samples`` Haar product states, takes the best, and (by
    default) polishes it with a direct Nelder-Mead minimization of the
    distance over the four product-state parameters.  Deliberately
    avoids the Schmidt decomposition so it can cross-check it.
    """
    v = as_state(s, tol)
    if v.size != 4:
        raise ShapeError("product-state distance needs dim 4")
    if Notation(notation) is Notation.ENGINEERING:
        v = bit_reverse_state(v)
    bank, u0, u1 = _product_bank(n_samples, np.random.default_rng(seed))
    return _bank_minimum(v, bank, u0, u1, refine)


def sampled_min_distance_batch(
    states,
    n_samples: int = 100_000,
    seed: int = 0,
    refine: bool = True,
    tol: Tolerances = DEFAULT_TOL,
) -> np.ndarray:
    """Batch form of :func:`sampled_min_distance` sharing one sample bank."""
    bank, u0, u1 = _product_bank(n_samples, np.random.default_rng(seed))
    out = np.empty(len(states))
    for i, s in enumerate(states):
        v = as_state(s, tol)
        out[i] = _bank_minimum(v, bank, u0, u1, refine)
    return out


def bell_basis(notation=Notation.MATH) -> list[np.ndarray]:
    """The four maximally entangled basis states Φ⁺, Φ⁻, Ψ⁺, Ψ⁻."""
    r = 1 / np.sqrt(2.0)
    states = [
        np.array([r, 0, 0, r], dtype=np.complex128),
        np.array([r, 0, 0, -r], dtype=np.complex128),
        np.array([0, r, r, 0], dtype=np.complex128),
        np.array([0, r, -r, 0], dtype=np.complex128),
    ]
    if Notation(notation) is Notation.ENGINEERING:
        states = [bit_reverse_state(v) for v in states]
    return states


def report_with_point(
    s,
    tol_class: float = 1e-9,
    notation=Notation.MATH,
    tol: Tolerances = DEFAULT_TOL,
) -> tuple[EntanglementReport, ToricPoint]:
    """Classification plus toric coordinates in the caller's frame."""
    report = classify(s, tol_class, notation, tol)
    return report, decompose(as_state(s, tol), tol)
