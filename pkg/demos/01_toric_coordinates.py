"""Walk through the simplex-times-torus coordinates of small state spaces.

A pure state of a d-level system, taken up to global phase, splits into
a probability vector over the measurement basis (a point of the standard
simplex) and a tuple of relative phases (a point of the torus fiber over
that simplex point).  This script decomposes a few states, shows how the
fiber geometry shrinks toward the boundary, and evaluates the classic
quotient map of the 3-sphere.
"""

import numpy as np

from toric_atlas import OMEGA, decompose, hopf, orbit_gram, reconstruct

# ── a qutrit state with uniform probabilities ─────────────────────────
state = np.array([1, OMEGA, OMEGA**2]) / np.sqrt(3)
tp = decompose(state)
print("state      :", np.round(state, 4))
print("convex part:", tp.convex, "(the barycenter of the 2-simplex)")
print("phases     :", np.round(tp.phases, 4), "= (0, 2π/3, 4π/3)")
print("pivot      :", tp.pivot)

# the decomposition inverts up to global phase
rebuilt = reconstruct(tp)
print("reconstruct:", np.round(rebuilt, 4))
print()

# ── boundary states lose phase degrees of freedom ─────────────────────
pole = decompose(np.array([0, 1], dtype=complex))
print("the pole (0,1): convex =", pole.convex, ", defined mask =", [bool(b) for b in pole.defined])
print("its orbit is a single point, not a circle")
print()

# ── orbit geometry: the fiber metric over different base points ───────
# Over the qubit equator the orbit is a great circle of length π; the
# circles shrink as the base point moves toward a vertex.
for p0 in (0.5, 0.75, 0.95, 1.0):
    og = orbit_gram(np.array([p0, 1 - p0]), 0)
    print(f"qubit orbit over p = ({p0:.2f}, {1 - p0:.2f}): length {og.edge_lengths[0]:.4f}")
print()

# Over the qutrit barycenter the fiber is a rhombus with a 120° angle.
og = orbit_gram(np.ones(3) / 3, 0)
print("qutrit barycenter fiber:")
print("  edge lengths:", np.round(og.edge_lengths, 4))
print("  angle       :", round(np.degrees(og.angles[0, 1]), 2), "degrees")
print()

# ── the quotient map of the 3-sphere onto the extended plane ──────────
print("hopf(1, 0)          =", hopf(1, 0), "   (the pole maps to infinity)")
print("hopf(0, 1)          =", hopf(0, 1))
print("hopf(1/√2, 1/√2)    =", hopf(1 / np.sqrt(2), 1 / np.sqrt(2)))
print("hopf(1/√2, i/√2)    =", np.round(hopf(1 / np.sqrt(2), 1j / np.sqrt(2)), 12))
