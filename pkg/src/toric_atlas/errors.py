"""Error types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI and the
HTTP service can map failures onto exit codes / status payloads without
string matching.
"""

from __future__ import annotations


class AtlasError(ValueError):
    """Base class for all domain errors raised by this package."""

    code = "error"


class ShapeError(AtlasError):
    """Dimension or shape mismatch between operands."""

    code = "shape"


class NormError(AtlasError):
    """A vector that must be unit norm (or non-zero) is not."""

    code = "norm"


class OctantError(AtlasError):
    """A point expected in the non-negative hyperoctant has a negative entry."""

    code = "octant"


class SimplexError(AtlasError):
    """Barycentric coordinates do not describe a simplex point."""

    code = "simplex"


class InvalidToricPointError(AtlasError):
    """A toric coordinate tuple violates its structural invariants."""

    code = "invalid toric point"


class UnitaryError(AtlasError):
    """A matrix that must be unitary is not."""

    code = "unitary"


class NotUniformizingError(AtlasError):
    """A gate required to be uniformizing is not."""

    code = "not uniformizing"


class ForeignGeneratorError(AtlasError):
    """A generator is not an element of the diagonal gate group."""

    code = "foreign generator"


class NotAGroupError(AtlasError):
    """Closure/inverse verification of an enumerated gate set failed."""

    code = "not a group"


class NotPeriodicError(AtlasError):
    """No power of the gate up to the search bound equals the identity."""

    code = "not periodic"


class UnsupportedError(AtlasError):
    """A requested mode/kind combination is not implemented."""

    code = "unsupported"
