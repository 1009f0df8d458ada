"""Dense complex linear algebra substrate for state dimensions 2, 3 and 4.

Vectors and matrices are plain ``numpy`` arrays of ``complex128``; the
helpers here add the validation, phase-equivalence and Fubini-Study
machinery the rest of the package builds on.  All functions are pure and
all tolerances are absolute: after normalization every matrix entry in
play has modulus at most 1, so absolute comparisons suffice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NormError, ShapeError

# Principal cube root of unity.  Fixed once here; every omega in the gate
# catalog refers to this constant.
OMEGA = np.exp(2j * np.pi / 3)


@dataclass(frozen=True)
class Tolerances:
    """Absolute tolerances used throughout the package.

    tol_norm : unit-norm checks on state vectors
    tol_mat  : entrywise matrix comparisons (unitarity, phase equivalence)
    tol_geom : geometric predicates (distances, collinearity, loci)
    tol_zero : probability threshold below which a component counts as
               exactly zero (controls phase masking in toric coordinates)
    """

    tol_norm: float = 1e-12
    tol_mat: float = 1e-12
    tol_geom: float = 1e-9
    tol_zero: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("tol_norm", "tol_mat", "tol_geom", "tol_zero"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOL = Tolerances()


def as_cvec(entries) -> np.ndarray:
    """Coerce to a 1-d complex128 array."""
    v = np.asarray(entries, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise ShapeError("expected a non-empty 1-d complex vector")
    return v


def as_cmat(entries) -> np.ndarray:
    """Coerce to a 2-d complex128 array."""
    m = np.asarray(entries, dtype=np.complex128)
    if m.ndim != 2 or m.size == 0:
        raise ShapeError("expected a non-empty 2-d complex matrix")
    return m


def as_state(entries, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Coerce to a unit-norm state vector, raising ``NormError`` otherwise."""
    v = as_cvec(entries)
    if abs(np.linalg.norm(v) - 1.0) > tol.tol_norm:
        raise NormError(f"state vector has norm {np.linalg.norm(v)!r}, expected 1")
    return v


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Complex matrix product ``a @ b`` with an explicit shape check."""
    a, b = as_cmat(a), as_cmat(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product ``a ⊗ b``.

    Block order follows the mathematics reading convention: the first
    factor owns the most significant index, so ``tensor(I, H)`` puts a
    copy of ``H`` in each diagonal block.  The engineering reading is
    obtained downstream by bit-reversal conjugation, never here.
    """
    return np.kron(as_cmat(a), as_cmat(b))


def is_unitary(m: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff ``max |M†M − I| ≤ tol_mat``. Raises ``ShapeError`` if non-square."""
    m = as_cmat(m)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"unitarity test needs a square matrix, got {m.shape}")
    defect = m.conj().T @ m - np.eye(m.shape[0])
    return float(np.max(np.abs(defect))) <= tol.tol_mat


def phase_equivalent(
    a: np.ndarray, b: np.ndarray, tol: Tolerances = DEFAULT_TOL
) -> complex | None:
    """Return unit scalar ``λ`` with ``a = λ·b`` entrywise, or ``None``.

    The witness is ``tr(b†a)/|tr(b†a)|``; if the trace vanishes (possible
    only for traceless profiles) the first usable entry ratio is taken
    instead.  The candidate is always verified entrywise, so a returned
    scalar is a proof, not a guess.
    """
    a, b = as_cmat(a), as_cmat(b)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    t = np.trace(b.conj().T @ a)
    if abs(t) > tol.tol_mat:
        lam = t / abs(t)
    else:
        candidates = np.flatnonzero(np.abs(b.ravel()) > 0.5 / max(b.shape))
        lam = None
        for idx in candidates:
            ratio = a.ravel()[idx] / b.ravel()[idx]
            if abs(ratio) > tol.tol_mat:
                lam = ratio / abs(ratio)
                break
        if lam is None:
            return None
    if float(np.max(np.abs(a - lam * b))) <= tol.tol_mat:
        return complex(lam)
    return None


def fs_distance(u: np.ndarray, v: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> float:
    """Fubini-Study distance ``arccos |⟨u, v⟩|`` between unit vectors.

    Values lie in ``[0, π/2]``; the distance is symmetric and blind to
    independent global phases on either argument.  Small distances are
    computed through the orthogonal residual (an arcsine), because the
    arccosine of a rounded overlap near 1 would inflate dot-product
    roundoff into ~1e-8 of spurious angle.
    """
    u, v = as_cvec(u), as_cvec(v)
    if u.shape != v.shape:
        raise ShapeError(f"dimension mismatch {u.size} vs {v.size}")
    for w in (u, v):
        if abs(np.linalg.norm(w) - 1.0) > tol.tol_norm:
            raise NormError("fs_distance requires unit-norm inputs")
    overlap = np.vdot(u, v)
    a = abs(overlap)
    if a <= np.sqrt(0.5):
        return float(np.arccos(a))
    residual = v - overlap * u
    return float(np.arcsin(min(1.0, float(np.linalg.norm(residual)))))
