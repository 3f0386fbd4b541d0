"""Value types, angle wrapping and rotation constructors."""

import math

import numpy as np
import pytest

from symdiag import (
    AngleOfZeroVector,
    Angles3,
    NonFiniteInput,
    SymMat2,
    SymMat3,
    angle_of,
    compose_rotation,
    rot2,
    rot3x,
    rot3y,
    rot3z,
    wrap_half_pi,
    wrap_pi,
    wrapped_diff_mod_pi,
)

SQ2 = math.sqrt(2.0) / 2.0


class TestWrapping:
    def test_wrap_pi_interval(self):
        for phi in np.linspace(-20.0, 20.0, 1001):
            r = wrap_pi(phi)
            assert -math.pi < r <= math.pi
            assert abs(math.remainder(r - phi, 2.0 * math.pi)) < 1e-12

    def test_wrap_pi_boundary(self):
        assert wrap_pi(math.pi) == math.pi
        assert wrap_pi(-math.pi) == math.pi
        assert wrap_pi(0.0) == 0.0

    def test_wrap_half_pi_interval(self):
        for phi in np.linspace(-20.0, 20.0, 1001):
            r = wrap_half_pi(phi)
            assert -0.5 * math.pi < r <= 0.5 * math.pi
            assert abs(math.remainder(r - phi, math.pi)) < 1e-12

    def test_wrap_half_pi_boundary(self):
        assert wrap_half_pi(0.5 * math.pi) == 0.5 * math.pi
        assert wrap_half_pi(-0.5 * math.pi) == 0.5 * math.pi

    def test_wrapped_diff_symmetric_and_periodic(self):
        assert wrapped_diff_mod_pi(0.3, 0.3 + math.pi) < 1e-15
        assert wrapped_diff_mod_pi(0.3, 0.4) == pytest.approx(0.1)
        assert wrapped_diff_mod_pi(1.5, -1.5) == pytest.approx(math.pi - 3.0)


class TestRot2:
    def test_identity(self):
        np.testing.assert_allclose(rot2(0.0), np.eye(2))

    def test_quarter_turn(self):
        np.testing.assert_allclose(rot2(0.5 * math.pi),
                                   [[0.0, -1.0], [1.0, 0.0]], atol=1e-16)

    def test_eighth_turn(self):
        np.testing.assert_allclose(rot2(0.25 * math.pi),
                                   [[SQ2, -SQ2], [SQ2, SQ2]], atol=1e-16)


class TestRot3:
    def test_rot3x_identity(self):
        np.testing.assert_allclose(rot3x(0.0), np.eye(3))

    def test_rot3y_quarter_turn_layout(self):
        # the +sin sits in the upper-right corner for the e2 axis
        np.testing.assert_allclose(
            rot3y(0.5 * math.pi),
            [[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [-1.0, 0.0, 0.0]], atol=1e-16)

    def test_rot3z_quarter_turn(self):
        np.testing.assert_allclose(
            rot3z(0.5 * math.pi),
            [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]], atol=1e-16)


class TestComposeRotation:
    def test_identity(self):
        np.testing.assert_allclose(compose_rotation((0.0, 0.0, 0.0)), np.eye(3))

    def test_single_factor(self):
        np.testing.assert_allclose(compose_rotation((0.5 * math.pi, 0.0, 0.0)),
                                   rot3x(0.5 * math.pi))

    def test_orthogonality_random(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            m = compose_rotation(tuple(rng.uniform(-math.pi, math.pi, 3)))
            assert np.linalg.norm(m.T @ m - np.eye(3)) < 1e-14

    def test_accepts_angles3(self):
        a = Angles3(0.1, 0.2, 0.3)
        np.testing.assert_allclose(compose_rotation(a),
                                   compose_rotation((0.1, 0.2, 0.3)))


class TestAngleOf:
    def test_axes(self):
        assert angle_of((1.0, 0.0)) == 0.0
        assert angle_of((0.0, -1.0)) == -0.5 * math.pi
        assert angle_of((-1.0, 0.0)) == math.pi  # half-open (-pi, pi]

    def test_zero_vector_raises(self):
        with pytest.raises(AngleOfZeroVector):
            angle_of((0.0, 0.0))


class TestValueTypes:
    def test_symmat3_roundtrip(self):
        m = SymMat3(1.0, 2.0, 3.0, 0.1, 0.2, 0.3)
        assert SymMat3.from_array(m.to_array()) == m

    def test_symmat3_from_array_symmetrizes(self):
        a = np.array([[1.0, 0.1, 0.0], [0.3, 2.0, 0.0], [0.0, 0.0, 3.0]])
        assert SymMat3.from_array(a).a12 == pytest.approx(0.2)

    def test_fro_norm(self):
        m = SymMat3(1.0, 2.0, 3.0, 0.1, 0.2, 0.3)
        assert m.fro_norm() == pytest.approx(np.linalg.norm(m.to_array()))
        m2 = SymMat2(1.0, 2.0, 0.5)
        assert m2.fro_norm() == pytest.approx(np.linalg.norm(m2.to_array()))

    def test_scale_floor_is_one(self):
        assert SymMat3(0.0, 0.0, 0.0, 0.0, 0.0, 0.0).scale() == 1.0

    def test_non_finite_rejected(self):
        with pytest.raises(NonFiniteInput):
            SymMat3(math.nan, 0, 0, 0, 0, 0)
        with pytest.raises(NonFiniteInput):
            SymMat2(math.inf, 0, 0)
        with pytest.raises(NonFiniteInput):
            Angles3(math.nan, 0.0, 0.0)

    def test_angles3_normalized_at_construction(self):
        a = Angles3(math.pi, 2.0, -2.0)
        assert abs(a.phi1) < 1e-15
        assert -0.5 * math.pi < a.phi2 <= 0.5 * math.pi
        assert -0.5 * math.pi < a.phi3 <= 0.5 * math.pi
