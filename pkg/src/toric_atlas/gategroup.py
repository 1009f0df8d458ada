"""The 36-element group of diagonal radix-3 gates and its Cayley graphs.

Elements are diag(1, a, b) with a and b sixth roots of unity, stored as
integer exponent pairs of ζ = e^{iπ/3}.  All group arithmetic is exact
(addition mod 6); floating-point matrices are derived on demand.  The
group is abelian, isomorphic to μ₆ × μ₆.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import ForeignGeneratorError, NotAGroupError
from .gatecat import SIXTH_ROOT_EXPONENTS, SIXTH_ROOT_NAMES, ZETA6


@dataclass(frozen=True, order=True)
class GroupElement:
    """diag(1, ζ^a, ζ^b) as the exponent pair (a, b) mod 6."""

    a_exp: int
    b_exp: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_exp", self.a_exp % 6)
        object.__setattr__(self, "b_exp", self.b_exp % 6)

    @property
    def key(self) -> str:
        return f"1,{SIXTH_ROOT_NAMES[self.a_exp]},{SIXTH_ROOT_NAMES[self.b_exp]}"

    @property
    def matrix(self) -> np.ndarray:
        return np.diag([1.0 + 0j, ZETA6**self.a_exp, ZETA6**self.b_exp])


IDENTITY = GroupElement(0, 0)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    return GroupElement(g.a_exp + h.a_exp, g.b_exp + h.b_exp)


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(-g.a_exp, -g.b_exp)


def parse_key(key: str) -> GroupElement:
    """Parse a canonical key like ``"1,w,-w2"`` into a group element."""
    parts = [p.strip() for p in key.split(",")]
    if len(parts) != 3 or parts[0] != "1":
        raise ForeignGeneratorError(f"malformed diagonal gate key {key!r}")
    try:
        return GroupElement(SIXTH_ROOT_EXPONENTS[parts[1]], SIXTH_ROOT_EXPONENTS[parts[2]])
    except KeyError as exc:
        raise ForeignGeneratorError(f"entry {exc.args[0]!r} is not a sixth root name") from exc


def from_matrix(m, tol: float = 1e-9) -> GroupElement:
    """Match a 3×3 matrix against the group, or raise ``ForeignGeneratorError``."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (3, 3):
        raise ForeignGeneratorError("diagonal gate group lives at radix 3")
    if np.max(np.abs(m - np.diag(np.diag(m)))) > tol or abs(m[0, 0] - 1) > tol:
        raise ForeignGeneratorError("matrix is not diagonal with unit (1,1) entry")

    def match(z: complex) -> int:
        for k in range(6):
            if abs(z - ZETA6**k) <= tol:
                return k
        raise ForeignGeneratorError(f"entry {z!r} is not a sixth root of unity")

    return GroupElement(match(m[1, 1]), match(m[2, 2]))


def enumerate_group() -> list[GroupElement]:
    """All 36 elements, verified closed under composition and inverse."""
    elements = [GroupElement(a, b) for a in range(6) for b in range(6)]
    universe = set(elements)
    for g in elements:
        if inverse(g) not in universe:
            raise NotAGroupError(f"inverse of {g.key} missing")
        for h in elements:
            if compose(g, h) not in universe:
                raise NotAGroupError(f"product {g.key}·{h.key} missing")
    return elements


@dataclass(frozen=True)
class CayleyGraph:
    """Cayley graph of the subgroup generated by ``generators``.

    edges hold (vertex key, generator index, product key) for every
    vertex and generator; distances are BFS word lengths from the
    identity.  full_group flags whether all 36 elements were reached.
    """

    vertices: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...]
    edges: tuple[tuple[str, int, str], ...]
    distances: dict[str, int]
    full_group: bool

    def to_json(self) -> dict:
        return {
            "vertices": [v.key for v in self.vertices],
            "generators": [g.key for g in self.generators],
            "edges": [list(e) for e in self.edges],
            "distances": dict(self.distances),
            "full_group": self.full_group,
        }


# Small set that generates the whole group.  The ω-stepping gate plus
# the two sign flips only reach the index-3 subgroup with ω-exponents
# summing to 0 mod 3 (12 elements); diag(1,ω,1) breaks that invariant
# and completes generation.
DEFAULT_GENERATOR_KEYS = ("1,w,w2", "1,-1,1", "1,1,-1", "1,w,1")


def _coerce_generator(gen) -> GroupElement:
    if isinstance(gen, GroupElement):
        return gen
    if isinstance(gen, str):
        return parse_key(gen)
    return from_matrix(gen)


def build_cayley(generators) -> CayleyGraph:
    """Breadth-first Cayley graph of the generated subgroup.

    Vertices are discovered in BFS order (which, with generators tried in
    index order, discovers each element through its lexicographically
    smallest minimal word).
    """
    gens = tuple(_coerce_generator(g) for g in generators)
    if not gens:
        raise ForeignGeneratorError("at least one generator is required")
    order: list[GroupElement] = [IDENTITY]
    dist = {IDENTITY.key: 0}
    queue = deque([IDENTITY])
    while queue:
        v = queue.popleft()
        for g in gens:
            w = compose(v, g)
            if w.key not in dist:
                dist[w.key] = dist[v.key] + 1
                order.append(w)
                queue.append(w)
    edges = tuple(
        (v.key, i, compose(v, g).key) for v in order for i, g in enumerate(gens)
    )
    return CayleyGraph(
        vertices=tuple(order),
        generators=gens,
        edges=edges,
        distances=dist,
        full_group=len(order) == 36,
    )


def shortest_word(target, graph: CayleyGraph) -> list[int] | None:
    """Minimum-length generator word composing to ``target``.

    Ties are broken toward the lexicographically smallest index
    sequence; returns ``None`` when the target lies outside the
    generated subgroup, and the empty word for the identity.
    """
    target = _coerce_generator(target)
    if target.key not in graph.distances:
        return None
    # Parent-pointer BFS, generators in index order: first discovery of a
    # vertex is via its lexicographically smallest minimal word.
    parent: dict[str, tuple[str, int] | None] = {IDENTITY.key: None}
    lookup = {v.key: v for v in graph.vertices}
    queue = deque([IDENTITY])
    while queue:
        v = queue.popleft()
        for i, g in enumerate(graph.generators):
            w = compose(v, g)
            if w.key not in parent and w.key in lookup:
                parent[w.key] = (v.key, i)
                queue.append(w)
    word: list[int] = []
    cursor = target.key
    while parent[cursor] is not None:
        prev, i = parent[cursor]
        word.append(i)
        cursor = prev
    word.reverse()
    return word


def compose_word(word: list[int], graph: CayleyGraph) -> GroupElement:
    """Multiply out a generator-index word (left to right)."""
    out = IDENTITY
    for i in word:
        out = compose(out, graph.generators[i])
    return out


def export_dot(graph: CayleyGraph) -> str:
    """Deterministic DOT digraph: sorted nodes, labeled generator edges."""
    lines = ["digraph cayley {"]
    for v in sorted(graph.vertices, key=lambda e: (e.a_exp, e.b_exp)):
        label = v.key + f" (d={graph.distances[v.key]})"
        lines.append(f'  "{v.key}" [label="{label}"];')
    for src, gi, dst in sorted(graph.edges):
        gen_key = graph.generators[gi].key
        lines.append(f'  "{src}" -> "{dst}" [label="{gen_key}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
