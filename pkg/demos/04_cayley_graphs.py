"""Explore the 36-element diagonal gate group through its Cayley graphs.

The diagonal gates diag(1, a, b) with sixth-root entries form an abelian
group; word length in a Cayley graph is the natural circuit-cost proxy
for sequences of such gates.  This script enumerates the group, builds
graphs for several generator choices, and extracts shortest words.
"""

from collections import Counter

from toric_atlas import build_cayley, enumerate_group, export_dot, shortest_word
from toric_atlas.gategroup import DEFAULT_GENERATOR_KEYS, parse_key

elements = enumerate_group()
print(f"group order: {len(elements)}")
print("sample keys:", ", ".join(e.key for e in elements[:8]), "...")
print()

# ── the default generating set reaches everything ─────────────────────
graph = build_cayley(DEFAULT_GENERATOR_KEYS)
print("generators:", ", ".join(g.key for g in graph.generators))
print("reached vertices:", len(graph.vertices), "(full group:", graph.full_group, ")")
print("word-length histogram:", dict(sorted(Counter(graph.distances.values()).items())))
print()

# ── a proper subgroup: the ω-step plus the sign flips ─────────────────
# These three preserve the sum of the ω-exponents mod 3, so they only
# reach a 12-element subgroup.
trio = build_cayley(("1,w,w2", "1,-1,1", "1,1,-1"))
print("ω-step + sign flips reach", len(trio.vertices), "elements; full:", trio.full_group)
print()

# ── shortest words ────────────────────────────────────────────────────
for target_key in ("1,w2,1", "1,-w,w2", "1,-1,-1"):
    word = shortest_word(parse_key(target_key), graph)
    applied = [graph.generators[i].key for i in word]
    print(f"shortest word for {target_key:>9}: length {len(word)} via {applied}")
print()

# ── DOT export for graph tooling ──────────────────────────────────────
small = build_cayley(("1,w,1",))
print("DOT export of the 3-cycle generated by diag(1, ω, 1):")
print(export_dot(small))
