"""Tests for the diagonal gate group and its Cayley graphs."""

import numpy as np
import pytest

from toric_atlas.errors import ForeignGeneratorError
from toric_atlas.gategroup import (
    DEFAULT_GENERATOR_KEYS,
    IDENTITY,
    GroupElement,
    build_cayley,
    compose,
    compose_word,
    enumerate_group,
    export_dot,
    from_matrix,
    inverse,
    parse_key,
    shortest_word,
)


class TestGroupStructure:
    def test_thirty_six_elements(self):
        assert len(enumerate_group()) == 36

    def test_identity_present(self):
        assert IDENTITY in enumerate_group()
        assert IDENTITY.key == "1,1,1"

    def test_sixth_root_product_example(self):
        """diag(1,ω,ω²)·diag(1,−1,1) = diag(1,−ω,ω²)."""
        g = parse_key("1,w,w2")
        h = parse_key("1,-1,1")
        assert compose(g, h).key == "1,-w,w2"
        assert compose(g, h) in set(enumerate_group())

    def test_matrix_round_trip(self):
        for e in enumerate_group():
            assert from_matrix(e.matrix) == e

    def test_abelian(self):
        elements = enumerate_group()
        for g in elements:
            for h in elements:
                assert compose(g, h) == compose(h, g)

    def test_inverses_and_associativity_spot_checks(self, rng):
        elements = enumerate_group()
        for g in elements:
            assert compose(g, inverse(g)) == IDENTITY
        for _ in range(100):
            g, h, k = (elements[i] for i in rng.integers(0, 36, size=3))
            assert compose(compose(g, h), k) == compose(g, compose(h, k))

    def test_exact_arithmetic_matches_float_matrices(self, rng):
        elements = enumerate_group()
        for _ in range(50):
            g, h = (elements[i] for i in rng.integers(0, 36, size=2))
            assert np.max(np.abs(compose(g, h).matrix - g.matrix @ h.matrix)) <= 1e-12

    def test_foreign_matrix_rejected(self):
        with pytest.raises(ForeignGeneratorError):
            from_matrix(np.diag([1.0, 0.5, 1.0]))
        with pytest.raises(ForeignGeneratorError):
            parse_key("1,q,w")


class TestBuildCayley:
    def test_default_generators_reach_the_full_group(self):
        graph = build_cayley(DEFAULT_GENERATOR_KEYS)
        assert graph.full_group
        assert len(graph.vertices) == 36
        assert len(graph.edges) == 36 * len(DEFAULT_GENERATOR_KEYS)

    def test_omega_step_trio_only_reaches_index_three_subgroup(self):
        """The ω-step plus the two sign flips preserve the sum of the
        ω-exponents mod 3, so they generate 12 of the 36 elements."""
        graph = build_cayley(("1,w,w2", "1,-1,1", "1,1,-1"))
        assert not graph.full_group
        assert len(graph.vertices) == 12

    def test_three_generators_can_reach_everything(self):
        graph = build_cayley(("1,-w2,1", "1,1,-w2", "1,w,w2"))
        assert graph.full_group
        assert len(graph.vertices) == 36
        assert len(graph.edges) == 108

    def test_single_omega_generator_gives_three_cycle(self):
        graph = build_cayley(("1,w,1",))
        assert len(graph.vertices) == 3
        assert sorted(graph.distances.values()) == [0, 1, 2]

    def test_identity_generator(self):
        graph = build_cayley((IDENTITY,))
        assert len(graph.vertices) == 1
        assert graph.distances == {"1,1,1": 0}

    def test_out_degree_equals_generator_count(self):
        graph = build_cayley(DEFAULT_GENERATOR_KEYS)
        out = {}
        for src, _, _ in graph.edges:
            out[src] = out.get(src, 0) + 1
        assert set(out.values()) == {len(DEFAULT_GENERATOR_KEYS)}

    def test_bfs_optimality_along_edges(self):
        """dist(dst) ≤ dist(src) + 1 on every directed edge; with an
        inverse-closed generator set the bound holds both ways."""
        graph = build_cayley(DEFAULT_GENERATOR_KEYS)
        for src, _, dst in graph.edges:
            assert graph.distances[dst] <= graph.distances[src] + 1
        closed = build_cayley(("1,w,1", "1,w2,1", "1,-1,1"))
        for src, _, dst in closed.edges:
            assert abs(closed.distances[src] - closed.distances[dst]) <= 1

    def test_empty_generators_rejected(self):
        with pytest.raises(ForeignGeneratorError):
            build_cayley(())


class TestShortestWord:
    def test_identity_needs_empty_word(self):
        graph = build_cayley(DEFAULT_GENERATOR_KEYS)
        assert shortest_word(IDENTITY, graph) == []

    def test_omega_squared_takes_two_steps(self):
        graph = build_cayley(("1,w,1",))
        word = shortest_word(parse_key("1,w2,1"), graph)
        assert word == [0, 0]

    def test_unreachable_target_is_missing(self):
        graph = build_cayley(("1,w,1",))
        assert shortest_word(parse_key("1,1,-1"), graph) is None

    def test_words_compose_to_their_targets(self, rng):
        graph = build_cayley(DEFAULT_GENERATOR_KEYS)
        elements = enumerate_group()
        for e in elements:
            word = shortest_word(e, graph)
            assert word is not None
            assert len(word) <= 36
            assert compose_word(word, graph) == e
            assert len(word) == graph.distances[e.key]

    def test_lexicographic_tie_break(self):
        """Two generators that commute to the same product: the word
        [0, 1] must win over [1, 0]."""
        graph = build_cayley(("1,w,1", "1,1,w"))
        word = shortest_word(parse_key("1,w,w"), graph)
        assert word == [0, 1]

    def test_distance_symmetric_under_inversion_for_closed_generators(self):
        graph = build_cayley(("1,w,1", "1,w2,1", "1,1,w", "1,1,w2"))
        for e in graph.vertices:
            assert graph.distances[e.key] == graph.distances[inverse(e).key]


class TestExportDot:
    def test_single_vertex_self_loops(self):
        graph = build_cayley((IDENTITY,))
        dot = export_dot(graph)
        assert dot.startswith("digraph cayley {")
        assert '"1,1,1" -> "1,1,1"' in dot

    def test_three_cycle(self):
        graph = build_cayley(("1,w,1",))
        dot = export_dot(graph)
        assert dot.count(" -> ") == 3
        assert dot.count("[label=") >= 6  # 3 nodes + 3 edges

    def test_full_graph_edge_count(self):
        graph = build_cayley(("1,-w2,1", "1,1,-w2", "1,w,w2"))
        dot = export_dot(graph)
        assert dot.count(" -> ") == 108

    def test_deterministic(self):
        g1 = export_dot(build_cayley(DEFAULT_GENERATOR_KEYS))
        g2 = export_dot(build_cayley(DEFAULT_GENERATOR_KEYS))
        assert g1 == g2

    def test_json_export_shape(self):
        graph = build_cayley(("1,w,1",))
        payload = graph.to_json()
        assert payload["vertices"] == ["1,1,1", "1,w,1", "1,w2,1"]
        assert payload["distances"]["1,w2,1"] == 2
        assert payload["full_group"] is False
