"""Tour the gate catalog: uniformizers, diagonal gates, factorizations.

Radix 3 has no single Hadamard analogue: nine distinct gates map every
basis state to a uniform superposition (three Fourier variants plus two
families of three).  This script surveys the catalog, checks the
order-4/transposition algebra of the Fourier variants, verifies the
single-qubit factorization H = S·√X·S, and shows where the basis states
land in the torus fiber above the barycenter.
"""

import numpy as np

from toric_atlas import (
    barycenter_image,
    catalog,
    chrestenson_properties,
    epr_compose,
    get_gate,
    is_uniformizing,
    verify_eq1,
)

# ── catalog census ────────────────────────────────────────────────────
for radix in (2, 3, 4):
    gates = catalog(radix)
    print(f"radix {radix}: {len(gates)} gates:", ", ".join(g.name for g in gates[:12]),
          "..." if len(gates) > 12 else "")
print()

uniformizers = [g for g in catalog(3) if is_uniformizing(g.matrix)]
print(f"{len(uniformizers)} radix-3 uniformizers:", [g.name for g in uniformizers])
diagonals = [g for g in catalog(3) if "diagonal" in g.tags]
print(f"{len(diagonals)} diagonal gates diag(1, a, b) with sixth-root entries")
print()

# ── the three Fourier variants have order 4, transposition squares ────
for name in ("QFT3", "QFT3_012", "QFT3_021"):
    report = chrestenson_properties(get_gate(3, name))
    print(f"{name:>9}: order {report.order}, square is the permutation {report.square_cycle}")
print()

# ── H = S·√X·S up to the phase e^{iπ/4} ──────────────────────────────
report = verify_eq1()
print("H = S·√X·S holds:", report.holds, " extracted phase:", np.round(report.phase, 12))
print()

# ── where do basis states land? ───────────────────────────────────────
# Every uniformizer sends all three basis states into the fiber above
# the barycenter; only the phases differ.
print("barycenter-torus phase marks (θ1, θ2) of the basis images:")
for name in ("QFT3", "QFT3_012", "QFT3_021", "U1"):
    points = barycenter_image([get_gate(3, name)])
    marks = [tuple(np.round(tp.phases[1:], 4)) for tp in points]
    print(f"  {name:>9}: |0> -> {marks[0]}, |1> -> {marks[1]}, |2> -> {marks[2]}")
print("(the three Fourier triangles coincide as sets; conjugating by the")
print(" cyclic shift rotates the labels by one step, a 2π/3 turn in the")
print(" rhombus picture)")
print()

# ── the entangling composite at radix 4 ───────────────────────────────
epr = epr_compose("math")
print("composite gate:", epr.name, " suppressed scalar:", round(epr.printed_scalar, 6))
print(np.round(epr.printed.real).astype(int))
ket00 = np.array([1, 0, 0, 0], dtype=complex)
print("EPR @ |00> =", np.round(epr.matrix @ ket00, 6), " (the first Bell state)")
