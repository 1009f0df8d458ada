"""Tests for the command-line interface."""

import json

import numpy as np
import pytest

from toric_atlas.cli import main

PSI_PLUS = "0,0,0.70710678,0,0.70710678,0,0,0"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestToricCommands:
    def test_decompose_bell_state(self, capsys):
        code, out, _ = run(capsys, "toric", "decompose", "--state", PSI_PLUS)
        assert code == 0
        payload = json.loads(out)
        assert np.allclose(payload["convex"], [0, 0.5, 0.5, 0], atol=1e-8)
        assert payload["pivot"] == 1
        assert payload["defined"] == [False, True, True, False]

    def test_reconstruct_round_trip(self, capsys):
        code, out, _ = run(
            capsys,
            "toric",
            "reconstruct",
            "--convex",
            "0.333333333333,0.333333333333,0.333333333334",
            "--phases",
            "0,2.0943951023931953,4.1887902047863905",
        )
        assert code == 0
        state = json.loads(out)["state"]
        w = np.exp(2j * np.pi / 3)
        expected = np.array([1, w, w**2]) / np.sqrt(3)
        got = np.array([complex(re, im) for re, im in state])
        assert np.allclose(got, expected, atol=1e-6)

    def test_project_gnomonic(self, capsys):
        code, out, _ = run(
            capsys, "toric", "project", "--map", "gnomonic", "--x", "0.6,0.8"
        )
        assert code == 0
        assert np.allclose(json.loads(out)["coords"], [3 / 7, 4 / 7])

    def test_project_stereographic(self, capsys):
        code, out, _ = run(
            capsys,
            "toric",
            "project",
            "--map",
            "stereographic",
            "--x",
            "1,0",
            "--pole-axis",
            "1",
        )
        assert code == 0
        assert np.allclose(json.loads(out)["point"], [2, 1])

    def test_malformed_state_exits_two(self, capsys):
        code, _, err = run(capsys, "toric", "decompose", "--state", "not,numbers")
        assert code == 2
        assert json.loads(err)["code"] == "norm"

    def test_unnormalized_state_exits_two(self, capsys):
        code, _, err = run(capsys, "toric", "decompose", "--state", "1,0,1,0")
        assert code == 2
        assert json.loads(err)["code"] == "norm"


class TestGatesCommands:
    def test_verify_eq1_payload(self, capsys):
        code, out, _ = run(capsys, "gates", "verify-eq1")
        assert code == 0
        payload = json.loads(out)
        assert payload["holds"] is True
        assert np.allclose(payload["phase"], [np.sqrt(2) / 2, np.sqrt(2) / 2])

    def test_list_radix3(self, capsys):
        code, out, _ = run(capsys, "gates", "list", "--radix", "3")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["gates"]) == 48

    def test_apply_shift(self, capsys):
        code, out, _ = run(
            capsys,
            "gates",
            "apply",
            "--radix",
            "3",
            "--gate",
            "SHIFT+1",
            "--state",
            "1,0,0,0,0,0",
        )
        assert code == 0
        assert json.loads(out)["new_state"] == [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]]

    def test_uniform_check(self, capsys):
        code, out, _ = run(
            capsys, "gates", "uniform-check", "--radix", "3", "--gate", "QFT3"
        )
        assert code == 0
        assert json.loads(out)["uniformizing"] is True

    def test_uniform_check_with_raw_matrix(self, capsys):
        h = 1 / np.sqrt(2)
        matrix = f"{h},0,{h},0,{h},0,{-h},0"
        code, out, _ = run(
            capsys, "gates", "uniform-check", "--radix", "2", "--matrix", matrix
        )
        assert code == 0
        assert json.loads(out)["uniformizing"] is True

    def test_epr_engineering(self, capsys):
        code, out, _ = run(capsys, "gates", "epr", "--notation", "engineering")
        assert code == 0
        assert json.loads(out)["name"] == "EPR_eng"

    def test_unknown_gate_exits_two(self, capsys):
        code, _, err = run(
            capsys, "gates", "apply", "--radix", "3", "--gate", "NOPE", "--state", "1,0,0,0,0,0"
        )
        assert code == 2

    def test_notation_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("TORIC_ATLAS_NOTATION", "engineering")
        code, out, _ = run(capsys, "gates", "epr")
        assert code == 0
        assert json.loads(out)["name"] == "EPR_eng"


class TestGroupCommands:
    def test_enum(self, capsys):
        code, out, _ = run(capsys, "group", "enum")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 36
        assert "1,1,1" in payload["elements"]

    def test_cayley_dot(self, capsys):
        code, out, _ = run(capsys, "group", "cayley", "--generators", "1,w,1")
        assert code == 0
        assert out.startswith("digraph cayley {")
        assert out.count(" -> ") == 3

    def test_cayley_json(self, capsys):
        code, out, _ = run(
            capsys, "group", "cayley", "--generators", "1,w,1", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["full_group"] is False

    def test_word(self, capsys):
        code, out, _ = run(
            capsys, "group", "word", "--target", "1,w2,1", "--generators", "1,w,1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["word"] == [0, 0]
        assert payload["length"] == 2

    def test_bad_generator_exits_two(self, capsys):
        code, _, err = run(capsys, "group", "cayley", "--generators", "1,bogus,1")
        assert code == 2
        assert json.loads(err)["code"] == "foreign generator"


class TestEntangleCommands:
    def test_classify_bell(self, capsys):
        code, out, _ = run(
            capsys, "entangle", "classify", "--state", "0.70710678,0,0,0,0,0,0.70710678,0"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["report"]["class"] == "maximal"

    def test_min_sep_distance_with_oracle(self, capsys):
        code, out, _ = run(
            capsys,
            "entangle",
            "min-sep-distance",
            "--state",
            "0.70710678,0,0,0,0,0,0.70710678,0",
            "--oracle",
            "--samples",
            "20000",
            "--seed",
            "3",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["distance"] == pytest.approx(np.pi / 4, abs=1e-7)
        assert payload["oracle_distance"] == pytest.approx(np.pi / 4, abs=1e-3)

    def test_bell_list(self, capsys):
        code, out, _ = run(capsys, "entangle", "bell")
        assert code == 0
        payload = json.loads(out)
        assert payload["names"] == ["Phi+", "Phi-", "Psi+", "Psi-"]
        assert len(payload["states"]) == 4


class TestFigureCommands:
    def test_paper_fig_13_svg(self, capsys):
        code, out, _ = run(capsys, "figure", "paper-fig", "13")
        assert code == 0
        assert out.startswith('<?xml version="1.0"')

    def test_paper_fig_20_is_json_only(self, capsys):
        code, out, _ = run(capsys, "figure", "paper-fig", "20", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["product_equals_epr"] is True
        code, _, _ = run(capsys, "figure", "paper-fig", "20")
        assert code == 2

    def test_figure_fiber_from_state(self, capsys):
        code, out, _ = run(
            capsys,
            "figure",
            "fiber",
            "--state",
            "0.57735027,0,0.57735027,0,0.57735027,0",
            "--mode",
            "affine",
        )
        assert code == 0
        assert "<svg" in out

    def test_figure_simplex_with_marks(self, capsys):
        marks = json.dumps([{"position": [1 / 3, 1 / 3, 1 / 3], "label": "B"}])
        code, out, _ = run(
            capsys, "figure", "simplex", "--radix", "3", "--marks", marks
        )
        assert code == 0
        assert "<circle" in out
        assert ">B</text>" in out

    def test_figure_out_file(self, capsys, tmp_path):
        target = tmp_path / "fig.svg"
        code, out, _ = run(
            capsys, "figure", "paper-fig", "16", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8").startswith("<?xml")

    def test_unknown_subcommand_exits_two(self, capsys):
        code, _, _ = run(capsys, "figure", "nonsense")
        assert code == 2


class TestFormatsAndDeterminism:
    def test_paper_figures_byte_stable(self, capsys):
        outputs = []
        for _ in range(2):
            code, out, _ = run(capsys, "figure", "paper-fig", "17")
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1]

    def test_json_round_trips_through_schema(self, capsys):
        code, out, _ = run(capsys, "toric", "decompose", "--state", PSI_PLUS)
        payload = json.loads(out)
        from toric_atlas.toric import ToricPoint, reconstruct

        tp = ToricPoint.from_json(payload)
        assert np.allclose(np.abs(reconstruct(tp)) ** 2, payload["convex"], atol=1e-12)
