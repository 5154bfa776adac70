import math
import random
from fractions import Fraction

import pytest
from conftest import mat_vec, random_vector, rotation_matrix, vec_cross, vec_dot, vec_norm

from gacalc import (
    CollinearPlane,
    DimensionTooLarge,
    Multivector,
    NotAVector,
    NotUnitVersor,
    Signature,
    WrongSignature,
    ZeroVector,
    apply_versor,
    cross_product,
    rotate_in_plane,
    rotate_vec_to_vec,
    to_basis,
)

E1 = Multivector.basis(1)
E2 = Multivector.basis(2)
E3 = Multivector.basis(3)


def assert_close(mv, coords, tol=1e-9):
    got = [float(c) for c in mv.to_vector(3)]
    assert max(abs(g - c) for g, c in zip(got, coords)) < tol, (got, coords)


class TestCrossProduct:
    def test_basis_pairs(self):
        assert cross_product(E1, E2) == E3
        assert cross_product(E1, E3) == -E2

    def test_self_is_zero(self):
        v = 2 * E1 + 3 * E2
        assert cross_product(v, v).is_zero()

    def test_requires_vectors(self):
        with pytest.raises(NotAVector):
            cross_product(1 + E1, E2)

    def test_requires_three_dims(self):
        with pytest.raises(DimensionTooLarge):
            cross_product(Multivector.basis(4), E1)

    def test_requires_plus_signature(self):
        sig = Signature(2)
        with pytest.raises(WrongSignature):
            cross_product(Multivector.basis(1, signature=sig),
                          Multivector.basis(2, signature=sig))

    def test_magnitude_matches_outer(self):
        rng = random.Random(59)
        for _ in range(100):
            a = random_vector(rng, 3)
            b = random_vector(rng, 3)
            assert a.outer(b).norm_squared() == cross_product(a, b).norm_squared()


class TestRotateInPlane:
    def test_quarter_turn_counterclockwise(self):
        out = rotate_in_plane(E1 + E2 + E3, E1, E2, math.pi / 2)
        assert_close(out, (-1.0, 1.0, 1.0))

    def test_reversed_plane_is_clockwise(self):
        out = rotate_in_plane(E1 + E2 + E3, E2, E1, math.pi / 2)
        assert_close(out, (1.0, -1.0, 1.0))

    def test_zero_angle_identity(self):
        v = 3 * E1 - 2 * E3
        assert_close(rotate_in_plane(v, E1, E2, 0.0), (3.0, 0.0, -2.0))

    def test_collinear_plane_rejected(self):
        with pytest.raises(CollinearPlane):
            rotate_in_plane(E1, E2, 2 * E2, 1.0)

    def test_matches_rotation_matrix(self):
        rng = random.Random(61)
        for _ in range(50):
            v = random_vector(rng, 3)
            a = random_vector(rng, 3, nonzero=True)
            b = random_vector(rng, 3, nonzero=True)
            af = tuple(float(c) for c in a.to_vector(3))
            bf = tuple(float(c) for c in b.to_vector(3))
            axis = vec_cross(af, bf)
            if vec_norm(axis) < 1e-6:
                continue
            theta = rng.uniform(-3.0, 3.0)
            expected = mat_vec(rotation_matrix(axis, theta),
                               [float(c) for c in v.to_vector(3)])
            assert_close(rotate_in_plane(v, a, b, theta), expected, tol=1e-9)

    def test_preserves_magnitude(self):
        rng = random.Random(67)
        for _ in range(50):
            v = random_vector(rng, 3, nonzero=True)
            out = rotate_in_plane(v, E1, E3, rng.uniform(0, 6.28))
            assert abs(out.magnitude() - v.magnitude()) < 1e-9

    def test_angles_compose(self):
        v = E1 + 2 * E2
        t1, t2 = 0.7, 1.1
        once = rotate_in_plane(rotate_in_plane(v, E1, E2, t1), E1, E2, t2)
        both = rotate_in_plane(v, E1, E2, t1 + t2)
        assert_close(once, [float(c) for c in both.to_vector(3)], tol=1e-9)


class TestRotateVecToVec:
    def test_moves_axis_itself(self):
        assert_close(rotate_vec_to_vec(E3, E3, E1), (1.0, 0.0, 0.0))

    def test_identity_when_aligned(self):
        assert_close(rotate_vec_to_vec(E1, E3, E3), (1.0, 0.0, 0.0))

    def test_diagonal_target(self):
        target = (E1 + E3) / math.sqrt(2)
        out = rotate_vec_to_vec(E3, E3, target)
        assert_close(out, [float(c) for c in target.to_vector(3)], tol=1e-12)

    def test_matches_rotation_matrix(self):
        rng = random.Random(71)
        for _ in range(50):
            src = random_vector(rng, 3, nonzero=True)
            dst = random_vector(rng, 3, nonzero=True)
            s = tuple(float(c) for c in src.to_vector(3))
            d = tuple(float(c) for c in dst.to_vector(3))
            axis = vec_cross(s, d)
            if vec_norm(axis) < 1e-6:
                continue
            angle = math.atan2(vec_norm(axis),
                               vec_dot(s, d) / (vec_norm(s) * vec_norm(d))
                               * vec_norm(s) * vec_norm(d))
            x = random_vector(rng, 3)
            expected = mat_vec(rotation_matrix(axis, angle),
                               [float(c) for c in x.to_vector(3)])
            assert_close(rotate_vec_to_vec(x, src, dst), expected, tol=1e-9)

    def test_antipodal_uses_lowest_free_axis(self):
        # src along e1: the plane falls back to e1 ^ e2, so e3 is fixed
        out = rotate_vec_to_vec(E1, E1, -E1)
        assert_close(out, (-1.0, 0.0, 0.0))
        fixed = rotate_vec_to_vec(E3, E1, -E1)
        assert_close(fixed, (0.0, 0.0, 1.0))

    def test_preserves_magnitude(self):
        rng = random.Random(73)
        for _ in range(30):
            x = random_vector(rng, 3)
            src = random_vector(rng, 3, nonzero=True)
            dst = random_vector(rng, 3, nonzero=True)
            out = rotate_vec_to_vec(x, src, dst)
            assert abs(out.magnitude() - x.magnitude()) < 1e-9

    def test_zero_endpoint_rejected(self):
        with pytest.raises(ZeroVector):
            rotate_vec_to_vec(E1, Multivector.zero(), E2)


class TestApplyVersor:
    def test_single_reflection(self):
        assert apply_versor(E1 + E2, [E1]) == -E1 + E2

    def test_pair_matches_plane_rotation(self):
        theta = 1.3
        u1 = Multivector.basis(1, mode="float")
        u2 = math.cos(theta / 2) * E1.to_float() + math.sin(theta / 2) * E2.to_float()
        v = E1 + 2 * E2 + 3 * E3
        by_versor = apply_versor(v.to_float(), [u1, u2])
        by_rotor = rotate_in_plane(v, E1, E2, theta)
        assert_close(by_versor, [float(c) for c in by_rotor.to_vector(3)], tol=1e-9)

    def test_unit_condition_enforced(self):
        with pytest.raises(NotUnitVersor):
            apply_versor(E1, [E1 + E2])

    def test_factor_must_be_vector(self):
        with pytest.raises(NotAVector):
            apply_versor(E1, [1 + E2])

    def test_unit_condition_in_mixed_signature(self):
        sig = Signature(2)
        u = Multivector.basis(3, signature=sig)  # squares to -1: u u~ = -1
        with pytest.raises(NotUnitVersor):
            apply_versor(Multivector.basis(1, signature=sig), [u, u])

    def test_even_count_preserves_orientation(self):
        rng = random.Random(79)
        for _ in range(20):
            v = random_vector(rng, 3)
            out = apply_versor(v, [E1, E1])
            assert out == v
