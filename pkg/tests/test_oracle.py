"""Reference implementations: cyclic Jacobi, bracketed cubic roots, residuals."""

import math

import numpy as np
import pytest

from symdiag import (
    ComplexRootsDetected,
    CubicCoeffs,
    SymMat2,
    SymMat3,
    cubic_roots_reference,
    diagonalize3,
    jacobi_eigen,
    reconstruct,
    residuals,
    rot2,
)
from conftest import random_sym3


class TestJacobi:
    def test_already_diagonal_no_sweeps(self):
        res = jacobi_eigen(SymMat3(3.0, 2.0, 1.0, 0.0, 0.0, 0.0))
        assert res.sweeps == 0
        np.testing.assert_allclose(np.sort(res.eigenvalues), [1.0, 2.0, 3.0])

    def test_identity(self):
        res = jacobi_eigen(SymMat3(1.0, 1.0, 1.0, 0.0, 0.0, 0.0))
        np.testing.assert_allclose(res.eigenvalues, [1.0, 1.0, 1.0])

    def test_off_diagonal_ones(self):
        res = jacobi_eigen(SymMat3(0.0, 0.0, 0.0, 1.0, 1.0, 1.0))
        np.testing.assert_allclose(np.sort(res.eigenvalues), [-1.0, -1.0, 2.0],
                                   atol=1e-12)

    def test_accepts_plain_arrays_and_2x2(self):
        res = jacobi_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
        np.testing.assert_allclose(np.sort(res.eigenvalues), [1.0, 3.0])
        res2 = jacobi_eigen(SymMat2(2.0, 2.0, 1.0))
        np.testing.assert_allclose(np.sort(res2.eigenvalues), [1.0, 3.0])

    def test_matches_numpy_eigh(self):
        rng = np.random.default_rng(51)
        for _ in range(300):
            m = random_sym3(rng)
            res = jacobi_eigen(m)
            ref = np.linalg.eigvalsh(m.to_array())
            assert np.max(np.abs(np.sort(res.eigenvalues) - ref)) < 1e-12
            # eigenvectors diagonalize the matrix
            v = res.eigenvectors
            off = v.T @ m.to_array() @ v - np.diag(res.eigenvalues)
            assert np.linalg.norm(off) < 1e-12

    def test_tol_validation(self):
        with pytest.raises(ValueError):
            jacobi_eigen(SymMat2(1.0, 2.0, 0.5), tol=0.0)


class TestCubicRootsReference:
    def test_triple_root(self):
        assert cubic_roots_reference(CubicCoeffs(3.0, 3.0, -1.0)) == (
            1.0, 1.0, 1.0)

    def test_distinct_integers(self):
        roots = sorted(cubic_roots_reference(CubicCoeffs(6.0, 11.0, -6.0)))
        assert roots == pytest.approx([1.0, 2.0, 3.0], abs=1e-12)

    def test_double_root(self):
        roots = sorted(cubic_roots_reference(CubicCoeffs(0.0, -3.0, -2.0)))
        assert roots == pytest.approx([-1.0, -1.0, 2.0], abs=1e-10)

    def test_matches_numpy_roots(self):
        rng = np.random.default_rng(52)
        for _ in range(300):
            m = random_sym3(rng)
            a = m.to_array()
            poly = np.poly(a)
            coeffs = CubicCoeffs(b=-poly[1], c=poly[2], d=poly[3])
            got = np.sort(cubic_roots_reference(coeffs))
            ref = np.sort(np.real(np.roots(poly)))
            assert np.max(np.abs(got - ref)) < 1e-9

    def test_complex_roots_rejected(self):
        # l^3 + l has roots 0, +-i
        with pytest.raises(ComplexRootsDetected):
            cubic_roots_reference(CubicCoeffs(b=0.0, c=1.0, d=0.0))


class TestReconstruct:
    def test_diagonal(self):
        np.testing.assert_allclose(
            reconstruct(np.eye(3), (3.0, 2.0, 1.0)),
            np.diag([3.0, 2.0, 1.0]))

    def test_quarter_pi_2x2(self):
        np.testing.assert_allclose(
            reconstruct(rot2(0.25 * math.pi), (3.0, 1.0)),
            [[2.0, 1.0], [1.0, 2.0]], atol=1e-15)

    def test_non_orthogonal_rejected(self):
        with pytest.raises(ValueError):
            reconstruct(np.array([[1.0, 0.0], [1.0, 1.0]]), (1.0, 2.0))

    def test_roundtrip_with_solver(self):
        rng = np.random.default_rng(53)
        for _ in range(200):
            m = random_sym3(rng)
            dec = diagonalize3(m)
            recon = reconstruct(dec.d, dec.lambdas)
            assert np.linalg.norm(recon - m.to_array()) < 1e-10 * m.scale()


class TestResiduals:
    def test_exact_diagonal_decomposition(self):
        m = SymMat3(3.0, 2.0, 1.0, 0.0, 0.0, 0.0)
        dec = diagonalize3(m)
        recon, ortho, eigvec = residuals(m, dec)
        assert recon < 1e-15
        assert ortho < 1e-15
        assert max(eigvec) < 1e-15

    def test_perturbed_d_shows_in_ortho(self):
        m = SymMat3(3.0, 2.0, 1.0, 0.1, 0.0, 0.0)
        dec = diagonalize3(m)
        d = dec.d.copy()
        d[0, 0] += 1e-6
        object.__setattr__(dec, "d", d)
        _, ortho, _ = residuals(m, dec)
        assert 1e-7 < ortho < 1e-5

    def test_random_within_contract(self):
        rng = np.random.default_rng(54)
        for _ in range(300):
            m = random_sym3(rng)
            recon, ortho, eigvec = residuals(m, diagonalize3(m))
            assert recon < 1e-10
            assert ortho < 1e-12
            assert max(eigvec) < 1e-10
