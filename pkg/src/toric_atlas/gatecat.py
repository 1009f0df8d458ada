"""Named gate catalog for radices 2, 3 and 4, plus gate-level predicates.

Catalog matrices are stored normalized (unitary).  Because the printed
sources of these gates suppress normalization, every entry also carries
its *printed* integer/root-of-unity form together with the scalar that
recovers the unitary matrix from it.  Exact checks (orders, permutation
squares, the four-by-four composite identity) run on the printed forms,
where arithmetic on small integers and cube roots of unity can be done
without rounding.

Notation: two-qubit amplitude strings can be read left-to-right
("math", the default here) or right-to-left ("engineering").  The two
readings differ by the bit-reversal permutation of indices 1 and 2; the
engineering form of any math-frame matrix is its conjugation by that
permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import (
    NotPeriodicError,
    NotUniformizingError,
    ShapeError,
    UnitaryError,
)
from .qlinalg import (
    DEFAULT_TOL,
    OMEGA,
    Tolerances,
    as_cmat,
    as_state,
    is_unitary,
    phase_equivalent,
)
from .toric import ToricPoint, decompose

SQRT2 = float(np.sqrt(2.0))
SQRT3 = float(np.sqrt(3.0))


class Notation(str, Enum):
    """Amplitude-string reading order for two-qubit states."""

    MATH = "math"
    ENGINEERING = "engineering"


@dataclass(frozen=True)
class GateMatrix:
    """A catalog gate.

    matrix is the stored unitary; printed is the exact unnormalized form
    (integer / root-of-unity entries) satisfying
    ``matrix = printed_scalar * printed``.
    """

    name: str
    radix: int
    matrix: np.ndarray
    printed: np.ndarray
    printed_scalar: float
    tags: frozenset[str]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "radix": self.radix,
            "tags": sorted(self.tags),
            "printed_scalar": self.printed_scalar,
            "entries": [
                [[float(z.real), float(z.imag)] for z in row] for row in self.matrix
            ],
        }


def _gate(name, radix, printed, scalar, tags) -> GateMatrix:
    printed = as_cmat(printed)
    printed.setflags(write=False)
    matrix = scalar * printed
    matrix.setflags(write=False)
    return GateMatrix(
        name=name,
        radix=radix,
        matrix=matrix,
        printed=printed,
        printed_scalar=float(scalar),
        tags=frozenset(tags),
    )


# ──────────────────────────────────────────────────────────────────────
# radix 2
# ──────────────────────────────────────────────────────────────────────

def _radix2_catalog() -> list[GateMatrix]:
    h = [[1, 1], [1, -1]]
    sx = [[(1 + 1j) / 2, (1 - 1j) / 2], [(1 - 1j) / 2, (1 + 1j) / 2]]
    return [
        _gate("I", 2, [[1, 0], [0, 1]], 1.0, ()),
        _gate("X", 2, [[0, 1], [1, 0]], 1.0, ("pauli",)),
        _gate("Y", 2, [[0, -1j], [1j, 0]], 1.0, ("pauli",)),
        _gate("Z", 2, [[1, 0], [0, -1]], 1.0, ("pauli", "diagonal")),
        _gate("H", 2, h, 1 / SQRT2, ("uniformizer",)),
        _gate("S", 2, [[1, 0], [0, 1j]], 1.0, ("rotation", "diagonal")),
        _gate("T", 2, [[1, 0], [0, np.exp(1j * np.pi / 4)]], 1.0, ("rotation", "diagonal")),
        # principal square root of X; the other root would flip the
        # extracted phase of the H = S·√X·S factorization to e^{-iπ/4}
        _gate("SX", 2, sx, 1.0, ("rotation", "uniformizer")),
    ]


# ──────────────────────────────────────────────────────────────────────
# radix 3
# ──────────────────────────────────────────────────────────────────────

# Unnormalized uniformizer entries as powers of ω (ω = e^{2πi/3}).
# CH1 is the radix-3 Fourier transform; CH2 and CH3 are its conjugates
# by the two cyclic basis permutations, with order 4 and transposition
# squares.  U1..U3 and U4..U6 are the two non-Fourier families.
_CHRESTENSON_EXP = {
    "QFT3": ((0, 0, 0), (0, 1, 2), (0, 2, 1)),
    "QFT3_012": ((1, 0, 2), (0, 0, 0), (2, 0, 1)),
    "QFT3_021": ((1, 2, 0), (2, 1, 0), (0, 0, 0)),
}
_OTHER_UNIFORMIZER_EXP = {
    "U1": ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    "U2": ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    "U3": ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    "U4": ((0, 0, 2), (0, 2, 0), (2, 0, 0)),
    "U5": ((0, 2, 0), (2, 0, 0), (0, 0, 2)),
    "U6": ((2, 0, 0), (0, 0, 2), (0, 2, 0)),
}

# The six allowed diagonal entries: sixth roots of unity ζ^k, ζ = e^{iπ/3}.
ZETA6 = np.exp(1j * np.pi / 3)
SIXTH_ROOT_NAMES = {0: "1", 1: "-w2", 2: "w", 3: "-1", 4: "w2", 5: "-w"}
SIXTH_ROOT_EXPONENTS = {v: k for k, v in SIXTH_ROOT_NAMES.items()}


def _omega_matrix(exps) -> np.ndarray:
    return np.array([[OMEGA**e for e in row] for row in exps], dtype=np.complex128)


def diagonal_gate_name(a_exp: int, b_exp: int) -> str:
    return f"D(1,{SIXTH_ROOT_NAMES[a_exp % 6]},{SIXTH_ROOT_NAMES[b_exp % 6]})"


def _radix3_catalog() -> list[GateMatrix]:
    gates = [
        _gate("I", 3, np.eye(3), 1.0, ()),
        _gate("SHIFT+1", 3, [[0, 0, 1], [1, 0, 0], [0, 1, 0]], 1.0, ("shift",)),
        _gate("SHIFT+2", 3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]], 1.0, ("shift",)),
    ]
    for name, exps in _CHRESTENSON_EXP.items():
        gates.append(
            _gate(name, 3, _omega_matrix(exps), 1 / SQRT3, ("chrestenson", "uniformizer"))
        )
    for name, exps in _OTHER_UNIFORMIZER_EXP.items():
        gates.append(_gate(name, 3, _omega_matrix(exps), 1 / SQRT3, ("uniformizer",)))
    for a in range(6):
        for b in range(6):
            m = np.diag([1.0, ZETA6**a, ZETA6**b])
            gates.append(_gate(diagonal_gate_name(a, b), 3, m, 1.0, ("diagonal",)))
    return gates


# ──────────────────────────────────────────────────────────────────────
# radix 4
# ──────────────────────────────────────────────────────────────────────

# Verbatim two-qubit CNOT with control on the second amplitude symbol,
# as used in the composite identity below; differs from the textbook
# control-on-first form, which the catalog carries separately.
CNOT_PAPER_PRINTED = np.array(
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=np.complex128
)
CNOT_TEXTBOOK_PRINTED = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)
IXH_PRINTED = np.array(
    [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 1, -1]], dtype=np.complex128
)
EPR_PRINTED = np.array(
    [[1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1], [1, -1, 0, 0]], dtype=np.complex128
)

# Index permutation swapping the two middle amplitudes; conjugating by it
# converts between the math and engineering readings.
BIT_REVERSAL = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
)


def bit_reverse_state(s: np.ndarray) -> np.ndarray:
    """Swap the two middle amplitudes of a 4-vector (frame conversion)."""
    s = np.asarray(s, dtype=np.complex128)
    if s.shape[-1] != 4:
        raise ShapeError("bit reversal applies to 4-dimensional states")
    return s[..., [0, 2, 1, 3]]


def to_engineering(m: np.ndarray) -> np.ndarray:
    """Conjugate a math-frame 4×4 matrix into the engineering frame."""
    m = as_cmat(m)
    if m.shape != (4, 4):
        raise ShapeError("notation conversion applies to 4×4 matrices")
    return BIT_REVERSAL @ m @ BIT_REVERSAL


def _radix4_catalog() -> list[GateMatrix]:
    return [
        _gate("I", 4, np.eye(4), 1.0, ()),
        _gate("CNOT_paper", 4, CNOT_PAPER_PRINTED, 1.0, ("controlled",)),
        _gate("CNOT", 4, CNOT_TEXTBOOK_PRINTED, 1.0, ("controlled",)),
        _gate("IxH", 4, IXH_PRINTED, 1 / SQRT2, ("composite",)),
        epr_compose(Notation.MATH),
        epr_compose(Notation.ENGINEERING),
    ]


@lru_cache(maxsize=None)
def catalog(radix: int) -> tuple[GateMatrix, ...]:
    """Full named catalog for one radix, in stable order."""
    if radix == 2:
        gates = _radix2_catalog()
    elif radix == 3:
        gates = _radix3_catalog()
    elif radix == 4:
        gates = _radix4_catalog()
    else:
        raise ShapeError(f"no catalog for radix {radix}")
    return tuple(gates)


def get_gate(radix: int, name: str) -> GateMatrix:
    for g in catalog(radix):
        if g.name == name:
            return g
    raise KeyError(f"no gate named {name!r} at radix {radix}")


def catalog_json(radix: int) -> list[dict]:
    return [g.to_json() for g in catalog(radix)]


# ──────────────────────────────────────────────────────────────────────
# operations
# ──────────────────────────────────────────────────────────────────────

def apply(g: GateMatrix, s, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Apply a catalog gate to a unit state, returning a unit state."""
    v = as_state(s, tol)
    if v.size != g.radix:
        raise ShapeError(f"gate radix {g.radix} cannot act on dim {v.size}")
    out = g.matrix @ v
    return out / np.linalg.norm(out)


def is_uniformizing(m, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff every entry has modulus 1/√d.

    Equivalently: each basis state maps to a superposition with uniform
    measurement probabilities.
    """
    m = as_cmat(m)
    if m.shape[0] != m.shape[1]:
        raise ShapeError("uniformization test needs a square matrix")
    if not is_unitary(m, tol):
        raise UnitaryError("uniformization test requires a unitary matrix")
    d = m.shape[0]
    return bool(np.all(np.abs(np.abs(m) - 1 / np.sqrt(d)) <= tol.tol_mat))


# -- exact arithmetic over Z[ω] (ω² = −1−ω) for order/square checks ----

def _to_zw(z: complex) -> tuple[int, int]:
    b = round(z.imag / (SQRT3 / 2))
    a = round(z.real + b / 2)
    if abs((a + b * OMEGA) - z) > 1e-9:
        raise ShapeError("entry is not an integer combination of 1 and ω")
    return int(a), int(b)


def _zw_mul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c - b * d)


def _zw_matmul(m1, m2):
    n = len(m1)
    out = [[(0, 0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = (0, 0)
            for k in range(n):
                p = _zw_mul(m1[i][k], m2[k][j])
                acc = (acc[0] + p[0], acc[1] + p[1])
            out[i][j] = acc
    return out


def _zw_identity(n):
    return [[(1, 0) if i == j else (0, 0) for j in range(n)] for i in range(n)]


def _zw_is_scalar_multiple_of_permutation(m):
    """Return (scalar, permutation σ) if m = scalar·P_σ exactly, else None."""
    n = len(m)
    sigma = [None] * n
    scalar = None
    for j in range(n):
        rows = [i for i in range(n) if m[i][j] != (0, 0)]
        if len(rows) != 1:
            return None
        i = rows[0]
        if scalar is None:
            scalar = m[i][j]
        elif m[i][j] != scalar:
            return None
        sigma[j] = i
    if sorted(sigma) != list(range(n)):
        return None
    return scalar, tuple(sigma)


@dataclass(frozen=True)
class ChrestensonReport:
    """Order and square structure of a radix-3 catalog gate."""

    order: int
    square_is_permutation: bool
    square_cycle: tuple[int, ...] | None


def is_transposition(sigma: tuple[int, ...]) -> bool:
    moved = [i for i, s in enumerate(sigma) if s != i]
    return len(moved) == 2 and sigma[moved[0]] == moved[1] and sigma[moved[1]] == moved[0]


def chrestenson_properties(c: GateMatrix, max_order: int = 8) -> ChrestensonReport:
    """Exact order and square analysis of a radix-3 gate.

    Works in integer arithmetic on the printed form: powers of the gate
    equal the identity exactly when the printed power is the appropriate
    integer multiple of I (3^{k/2}·I for the 1/√3-normalized gates).
    Raises ``NotPeriodicError`` if no power up to ``max_order`` returns
    to the identity.
    """
    if c.radix != 3:
        raise ShapeError("order analysis implemented for radix-3 gates")
    zw = [[_to_zw(complex(z)) for z in row] for row in c.printed]
    third_normalized = abs(c.printed_scalar - 1 / SQRT3) < 1e-15
    if not third_normalized and abs(c.printed_scalar - 1.0) > 1e-15:
        raise ShapeError("unsupported printed scalar for exact order analysis")

    def power_is_identity(mk, k):
        if third_normalized:
            if k % 2 != 0:
                return False  # 3^{k/2} is irrational, cannot cancel integrally
            target = 3 ** (k // 2)
        else:
            target = 1
        ident = [[(target, 0) if i == j else (0, 0) for j in range(3)] for i in range(3)]
        return mk == ident

    order = None
    mk = _zw_identity(3)
    for k in range(1, max_order + 1):
        mk = _zw_matmul(mk, zw)
        if power_is_identity(mk, k):
            order = k
            break
    if order is None:
        raise NotPeriodicError(f"no power up to {max_order} equals the identity")

    square = _zw_matmul(zw, zw)
    expected = (3, 0) if third_normalized else (1, 0)
    hit = _zw_is_scalar_multiple_of_permutation(square)
    if hit is not None and hit[0] == expected:
        return ChrestensonReport(order=order, square_is_permutation=True, square_cycle=hit[1])
    return ChrestensonReport(order=order, square_is_permutation=False, square_cycle=None)


def barycenter_image(
    gateset: list[GateMatrix], tol: Tolerances = DEFAULT_TOL
) -> list[ToricPoint]:
    """Toric coordinates of every basis-state image, gate-major order.

    All gates must be radix-3 uniformizers; every returned point then has
    convex part (1/3, 1/3, 1/3), i.e. sits in the fiber over the
    barycenter, and only the phase marks distinguish the images.
    """
    points: list[ToricPoint] = []
    for g in gateset:
        if g.radix != 3 or not is_uniformizing(g.matrix, tol):
            raise NotUniformizingError(f"gate {g.name!r} is not a radix-3 uniformizer")
        for j in range(3):
            basis = np.zeros(3, dtype=np.complex128)
            basis[j] = 1.0
            points.append(decompose(apply(g, basis, tol), tol))
    return points


def epr_compose(notation: Notation | str = Notation.MATH) -> GateMatrix:
    """The entangling composite: identity⊗Hadamard followed by CNOT.

    In the math frame this is exactly the integer product
    ``CNOT_paper · (I⊗H)`` with suppressed scalar 1/√2; the engineering
    frame is its bit-reversal conjugate.
    """
    notation = Notation(notation)
    printed = CNOT_PAPER_PRINTED @ IXH_PRINTED
    if notation is Notation.ENGINEERING:
        printed = BIT_REVERSAL @ printed @ BIT_REVERSAL
        name = "EPR_eng"
    else:
        name = "EPR_math"
    return _gate(name, 4, printed, 1 / SQRT2, ("composite",))


@dataclass(frozen=True)
class Eq1Report:
    """Result of checking the H = S·√X·S factorization."""

    holds: bool
    phase: complex | None


def verify_eq1(tol: Tolerances = DEFAULT_TOL) -> Eq1Report:
    """Check that S·√X·S is the Hadamard gate up to a global phase.

    The product with the principal square root of X equals
    ``e^{iπ/4}·H``; the report carries the extracted phase.
    """
    s = get_gate(2, "S").matrix
    sx = get_gate(2, "SX").matrix
    h = get_gate(2, "H").matrix
    product = s @ sx @ s
    lam = phase_equivalent(product, h, tol)
    return Eq1Report(holds=lam is not None, phase=lam)
