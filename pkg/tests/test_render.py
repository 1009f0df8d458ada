"""Tests for scene construction and deterministic SVG emission."""

import numpy as np
import pytest

from toric_atlas import figures
from toric_atlas.errors import ShapeError, SimplexError, UnsupportedError
from toric_atlas.render import (
    FigureScene,
    Mark,
    embed_simplex,
    scene_simplex,
    scene_torus_fiber,
    to_svg,
    validate_scene,
)
from toric_atlas.toric import decompose, orbit_gram

TWO_PI = 2 * np.pi


class TestSceneSimplex:
    def test_maximal_segment_scene(self):
        a, b = (0.5, 0.0, 0.0, 0.5), (0.0, 0.5, 0.5, 0.0)
        scene = scene_simplex(4, marks=[Mark(a, "P"), Mark(b, "Q")], segments=[(a, b)])
        assert scene.kind == "simplex"
        assert len(scene.marks) == 2
        assert len(scene.segments) == 1

    def test_barycenter_mark_lands_at_centroid(self):
        p = embed_simplex(3, np.ones(3) / 3)
        verts = [embed_simplex(3, e) for e in np.eye(3)]
        assert np.allclose(p, sum(verts) / 3, atol=1e-12)

    def test_qubit_segment_parameter(self):
        p = embed_simplex(2, [0.36, 0.64])
        assert p[0] == pytest.approx(0.64, abs=1e-15)

    def test_invalid_mark_rejected(self):
        with pytest.raises(SimplexError):
            scene_simplex(3, marks=[Mark((0.5, 0.2, 0.2))])

    def test_embedding_is_linear_on_midpoints(self, rng):
        for radix in (2, 3, 4):
            for _ in range(20):
                a = rng.random(radix)
                a /= a.sum()
                b = rng.random(radix)
                b /= b.sum()
                mid = embed_simplex(radix, (a + b) / 2)
                assert np.allclose(
                    mid, (embed_simplex(radix, a) + embed_simplex(radix, b)) / 2, atol=1e-12
                )


class TestSceneTorusFiber:
    def test_barycenter_affine_mode_is_a_rhombus(self):
        from toric_atlas.render import _fiber_frame
        from toric_atlas.qlinalg import DEFAULT_TOL

        tp = decompose(np.ones(3, dtype=complex) / np.sqrt(3))
        scene = scene_torus_fiber(tp, mode="affine")
        e1, e2 = _fiber_frame(scene, DEFAULT_TOL)
        assert np.linalg.norm(e1) == pytest.approx(np.linalg.norm(e2), abs=1e-9)
        cos_angle = (e1 @ e2) / (np.linalg.norm(e1) * np.linalg.norm(e2))
        assert np.degrees(np.arccos(cos_angle)) == pytest.approx(120.0, abs=1e-6)

    def test_affine_edge_lengths_match_orbit_gram(self, rng):
        from toric_atlas.render import _fiber_frame
        from toric_atlas.qlinalg import DEFAULT_TOL

        for _ in range(10):
            v = rng.normal(size=3) + 1j * rng.normal(size=3)
            v /= np.linalg.norm(v)
            tp = decompose(v)
            if not np.all(tp.defined):
                continue
            scene = scene_torus_fiber(tp, mode="affine")
            frame = _fiber_frame(scene, DEFAULT_TOL)
            og = orbit_gram(tp.convex, tp.pivot)
            for edge, expected in zip(frame, og.edge_lengths):
                assert np.linalg.norm(edge) == pytest.approx(expected, abs=1e-6)

    def test_vertex_fiber_degenerates_to_point(self):
        tp = decompose(np.array([1, 0, 0], dtype=complex))
        scene = scene_torus_fiber(tp)
        assert scene.marks[0].position == ()
        svg = to_svg(scene)
        assert "point fiber" in svg

    def test_affine_mode_rejected_for_radix4(self):
        tp = decompose(np.ones(4, dtype=complex) / 2)
        with pytest.raises(UnsupportedError):
            scene_torus_fiber(tp, mode="affine")

    def test_radix4_unit_cube(self):
        tp = decompose(np.array([1, 1j, -1, -1j], dtype=complex) / 2)
        svg = to_svg(scene_torus_fiber(tp))
        assert svg.count("<line") >= 12  # cube wireframe


class TestToSvg:
    def test_empty_simplex_scene_has_outline_and_labels_only(self):
        svg = to_svg(scene_simplex(3))
        assert svg.count("<line") == 3
        assert svg.count("<text") == 3
        assert "<circle" not in svg
        assert svg.startswith('<?xml version="1.0"')
        assert 'version="1.1"' in svg

    def test_byte_identical_across_runs(self):
        scene = figures.paper_figure_scene("19")
        assert to_svg(scene) == to_svg(scene)

    def test_json_round_trip_preserves_output(self):
        scene = figures.paper_figure_scene("13")
        clone = FigureScene.from_json(scene.to_json())
        assert to_svg(clone) == to_svg(scene)

    def test_rejects_nonpositive_dimensions(self):
        with pytest.raises(ShapeError):
            to_svg(scene_simplex(3), width_px=0)

    def test_validate_scene_rejects_bad_fiber_base(self):
        scene = FigureScene(
            kind="torus_fiber",
            radix=3,
            marks=(Mark((0.0, 0.0)),),
            fiber_base=None,
        )
        with pytest.raises(SimplexError):
            validate_scene(scene)

    def test_validate_scene_rejects_out_of_range_phase(self):
        base = figures.paper_figure_scene("13").fiber_base
        scene = FigureScene(
            kind="torus_fiber",
            radix=3,
            marks=(Mark((0.0, 7.0)),),
            fiber_base=base,
        )
        with pytest.raises(ShapeError):
            validate_scene(scene)


class TestPaperFigures:
    def test_fig13_marks_sit_at_fourier_phases(self):
        scene = figures.paper_figure_scene("13")
        positions = {tuple(np.round(m.position, 9)) for m in scene.marks}
        expected = {
            (0.0, 0.0),
            tuple(np.round((TWO_PI / 3, 2 * TWO_PI / 3), 9)),
            tuple(np.round((2 * TWO_PI / 3, TWO_PI / 3), 9)),
        }
        assert positions == expected
        assert [m.label for m in scene.marks] == ["A", "B", "C"]

    def test_fig16_holds_the_maximal_segment(self):
        scene = figures.paper_figure_scene("16")
        assert scene.segments == (((0.5, 0.0, 0.0, 0.5), (0.0, 0.5, 0.5, 0.0)),)

    def test_fig17_wireframe_has_fixed_grid(self):
        scene = figures.paper_figure_scene("17")
        grid = figures.SURFACE_GRID
        assert len(scene.segments) == 2 * grid * (grid - 1)
        for a, b in scene.segments:
            for p in (a, b):
                assert abs(p[0] * p[3] - p[1] * p[2]) <= 1e-12

    def test_fig19_bell_marks(self):
        scene = figures.paper_figure_scene("19")
        labels = [m.label for m in scene.marks]
        assert labels == ["Phi+", "Phi-", "Psi+", "Psi-"]
        assert np.allclose(scene.marks[0].position, [0.5, 0, 0, 0.5], atol=1e-12)
        assert np.allclose(scene.marks[2].position, [0, 0.5, 0.5, 0], atol=1e-12)

    def test_fig20_report_is_exact(self):
        report = figures.epr_product_report()
        assert report["product_equals_epr"] is True
        assert report["epr"][1] == [0, 0, 1, -1]

    def test_unknown_figure_number(self):
        with pytest.raises(KeyError):
            figures.paper_figure_scene("42")
