"""Tests for the complex linear algebra substrate."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_atlas import gatecat, qlinalg
from toric_atlas.errors import NormError, ShapeError
from toric_atlas.qlinalg import (
    OMEGA,
    DEFAULT_TOL,
    Tolerances,
    fs_distance,
    is_unitary,
    matmul,
    phase_equivalent,
    tensor,
)

from conftest import random_state, random_unitary


class TestMatmul:
    def test_fig20_product_is_exact(self):
        """The controlled-NOT times I⊗H composite, in integer form."""
        product = matmul(gatecat.CNOT_PAPER_PRINTED, gatecat.IXH_PRINTED)
        assert np.array_equal(product, gatecat.EPR_PRINTED)

    def test_identity_multiplication(self, rng):
        m = random_unitary(rng, 3)
        assert np.allclose(matmul(np.eye(3), m), m)

    def test_s_squared_is_pauli_z(self):
        s = gatecat.get_gate(2, "S").matrix
        assert np.allclose(matmul(s, s), np.diag([1, -1]), atol=1e-15)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            matmul(np.eye(2), np.eye(3))


class TestTensor:
    def test_i_tensor_h_matches_printed_block_matrix(self):
        h_unnormalized = np.array([[1, 1], [1, -1]], dtype=complex)
        assert np.array_equal(tensor(np.eye(2), h_unnormalized), gatecat.IXH_PRINTED)

    def test_identity_tensor_identity(self):
        assert np.array_equal(tensor(np.eye(2), np.eye(2)), np.eye(4))

    def test_x_tensor_x_permutes_basis(self):
        x = gatecat.get_gate(2, "X").matrix
        ket00 = np.array([1, 0, 0, 0], dtype=complex)
        ket11 = np.array([0, 0, 0, 1], dtype=complex)
        assert np.allclose(tensor(x, x) @ ket00, ket11)

    def test_mixed_product_identity(self, rng):
        """tensor(A,B)·tensor(C,D) = tensor(AC, BD) on random unitaries."""
        for _ in range(20):
            a, b, c, d = (random_unitary(rng, 2) for _ in range(4))
            lhs = tensor(a, b) @ tensor(c, d)
            rhs = tensor(a @ c, b @ d)
            assert np.max(np.abs(lhs - rhs)) <= 1e-12


class TestIsUnitary:
    def test_normalized_fourier_gate(self):
        assert is_unitary(gatecat.get_gate(3, "QFT3").matrix)

    def test_unnormalized_fourier_gate_is_not(self):
        assert not is_unitary(gatecat.get_gate(3, "QFT3").printed)

    def test_zero_matrix(self):
        assert not is_unitary(np.zeros((3, 3)))

    def test_non_square_raises(self):
        with pytest.raises(ShapeError):
            is_unitary(np.ones((2, 3)))

    def test_closure_under_product_over_catalog(self):
        for radix in (2, 3, 4):
            gates = gatecat.catalog(radix)
            for g in gates[:8]:
                for h in gates[:8]:
                    assert is_unitary(g.matrix @ h.matrix)


class TestPhaseEquivalent:
    def test_hadamard_factorization_phase(self):
        s = gatecat.get_gate(2, "S").matrix
        sx = gatecat.get_gate(2, "SX").matrix
        h = gatecat.get_gate(2, "H").matrix
        lam = phase_equivalent(s @ sx @ s, h)
        assert lam is not None
        assert abs(lam - np.exp(1j * np.pi / 4)) <= 1e-12

    def test_self_equivalence(self, rng):
        m = random_unitary(rng, 3)
        assert phase_equivalent(m, m) == pytest.approx(1.0)

    def test_inequivalent_gates(self):
        i2 = np.eye(2)
        x = gatecat.get_gate(2, "X").matrix
        assert phase_equivalent(i2, x) is None

    def test_symmetry_gives_conjugate_phase(self, rng):
        for _ in range(10):
            m = random_unitary(rng, 2)
            lam = np.exp(1j * rng.uniform(0, 2 * np.pi))
            fwd = phase_equivalent(lam * m, m)
            back = phase_equivalent(m, lam * m)
            assert fwd is not None and back is not None
            assert abs(fwd - np.conj(back)) <= 1e-12

    def test_traceless_fallback(self):
        """Pauli-X is traceless; the trace witness degenerates."""
        x = gatecat.get_gate(2, "X").matrix
        lam = phase_equivalent(1j * x, x)
        assert lam is not None
        assert abs(lam - 1j) <= 1e-12


class TestFsDistance:
    def test_orthogonal_basis_states(self):
        e0 = np.array([1, 0], dtype=complex)
        e1 = np.array([0, 1], dtype=complex)
        assert fs_distance(e0, e1) == pytest.approx(np.pi / 2, abs=1e-15)

    def test_coincident_states(self, rng):
        v = random_state(rng, 3)
        assert fs_distance(v, v) <= 1e-12

    def test_diagonal_superposition(self):
        e0 = np.array([1, 0], dtype=complex)
        plus = np.array([1, 1], dtype=complex) / np.sqrt(2)
        assert fs_distance(e0, plus) == pytest.approx(np.pi / 4, abs=1e-14)

    def test_rejects_unnormalized(self):
        with pytest.raises(NormError):
            fs_distance(np.array([1.0, 1.0]), np.array([1.0, 0.0]))

    @given(
        st.lists(st.floats(-1, 1), min_size=6, max_size=6),
        st.floats(0, 2 * np.pi),
        st.floats(0, 2 * np.pi),
    )
    @settings(max_examples=60, deadline=None)
    def test_phase_invariance(self, raw, alpha, beta):
        v = np.array(raw[:3]) + 1j * np.array(raw[3:])
        if np.linalg.norm(v) < 0.1:
            return
        v = v / np.linalg.norm(v)
        w = np.roll(v, 1)
        d0 = fs_distance(v, w)
        d1 = fs_distance(np.exp(1j * alpha) * v, np.exp(1j * beta) * w)
        assert abs(d0 - d1) <= 1e-12

    def test_unitary_invariance(self, rng):
        for _ in range(30):
            u = random_unitary(rng, 3)
            v, w = random_state(rng, 3), random_state(rng, 3)
            assert abs(fs_distance(u @ v, u @ w) - fs_distance(v, w)) <= DEFAULT_TOL.tol_geom


class TestTolerances:
    def test_defaults(self):
        t = Tolerances()
        assert (t.tol_norm, t.tol_mat, t.tol_geom) == (1e-12, 1e-12, 1e-9)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Tolerances(tol_norm=0.0)

    def test_omega_is_principal_cube_root(self):
        assert OMEGA == pytest.approx(np.exp(2j * np.pi / 3))
        assert OMEGA**3 == pytest.approx(1.0)
