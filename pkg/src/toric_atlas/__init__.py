"""Toric-geometry atlas of pure quantum state spaces at radix 2, 3 and 4.

The state space of a d-level system splits into a simplex of measurement
probabilities with a torus of relative phases over each interior point.
This package computes that decomposition, carries the gate catalogs and
diagonal-group machinery for the three radices, classifies two-qubit
entanglement against its toric loci, and renders the standard views as
deterministic SVG.  A CLI (``toric-atlas``) and an HTTP JSON service
expose everything to non-Python clients.
"""

from .entangle import (
    EntanglementClass,
    EntanglementReport,
    bell_basis,
    classify,
    concurrence,
    me_locus_contains,
    min_distance_to_separable,
    sampled_min_distance,
    schmidt,
    sep_locus_contains,
)
from .errors import AtlasError
from .gatecat import (
    GateMatrix,
    Notation,
    apply,
    barycenter_image,
    catalog,
    chrestenson_properties,
    epr_compose,
    get_gate,
    is_uniformizing,
    verify_eq1,
)
from .gategroup import (
    CayleyGraph,
    GroupElement,
    build_cayley,
    enumerate_group,
    export_dot,
    shortest_word,
)
from .qlinalg import (
    OMEGA,
    DEFAULT_TOL,
    Tolerances,
    fs_distance,
    is_unitary,
    matmul,
    phase_equivalent,
    tensor,
)
from .render import FigureScene, Mark, scene_simplex, scene_torus_fiber, to_svg
from .toric import (
    OrbitGram,
    SimplexPoint,
    ToricPoint,
    decompose,
    gnomonic,
    hopf,
    orbit_gram,
    reconstruct,
    squared_map,
    stereographic,
)

__version__ = "0.1.0"

__all__ = [
    "AtlasError",
    "CayleyGraph",
    "DEFAULT_TOL",
    "EntanglementClass",
    "EntanglementReport",
    "FigureScene",
    "GateMatrix",
    "GroupElement",
    "Mark",
    "Notation",
    "OMEGA",
    "OrbitGram",
    "SimplexPoint",
    "Tolerances",
    "ToricPoint",
    "apply",
    "barycenter_image",
    "bell_basis",
    "build_cayley",
    "catalog",
    "chrestenson_properties",
    "classify",
    "concurrence",
    "decompose",
    "enumerate_group",
    "epr_compose",
    "export_dot",
    "fs_distance",
    "get_gate",
    "gnomonic",
    "hopf",
    "is_uniformizing",
    "is_unitary",
    "matmul",
    "me_locus_contains",
    "min_distance_to_separable",
    "orbit_gram",
    "phase_equivalent",
    "reconstruct",
    "sampled_min_distance",
    "scene_simplex",
    "scene_torus_fiber",
    "schmidt",
    "sep_locus_contains",
    "shortest_word",
    "squared_map",
    "stereographic",
    "tensor",
    "to_svg",
    "verify_eq1",
]
