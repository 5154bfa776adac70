import json
import random
from fractions import Fraction

import pytest
from conftest import random_multivector, random_vector

from gacalc import (
    EUCLIDEAN,
    FLOAT,
    RATIONAL,
    Multivector,
    Signature,
    SignatureMismatch,
    geometric_product,
    grade_of,
    inner_product,
    outer_product,
    to_basis,
)
from gacalc.errors import DimensionTooSmall, NotAVector

E1 = Multivector.basis(1)
E2 = Multivector.basis(2)
E3 = Multivector.basis(3)
E12 = Multivector.basis(1, 2)


class TestLinear:
    def test_add_cancels_to_zero(self):
        assert (E1 + (-E1)).is_zero()

    def test_scale_by_zero(self):
        a = Multivector({0: 1, 0b11: Fraction(1, 2)})
        assert a.scale(0).is_zero()

    def test_add_disjoint_terms(self):
        assert (1 + E1) + E12 == Multivector({0: 1, 0b1: 1, 0b11: 1})

    def test_signature_mismatch_raises(self):
        with pytest.raises(SignatureMismatch):
            E1 + Multivector.basis(1, signature=Signature(2))

    def test_mode_promotion(self):
        mixed = E1 + Multivector.scalar(0.5, EUCLIDEAN, FLOAT)
        assert mixed.mode == FLOAT
        assert mixed.coeff(0) == 0.5

    def test_immutable(self):
        with pytest.raises(AttributeError):
            E1.mode = FLOAT


class TestGeometricProduct:
    def test_zero_divisor_pair(self):
        assert ((1 + E1) * (1 - E1)).is_zero()

    def test_vector_product_splits(self):
        u, v = E1, E1 + E2
        assert u * v == 1 + E12
        assert u * v == u.inner(v) + u.outer(v)

    def test_disjoint_blades(self):
        a = Multivector({0b0011: 7})
        b = Multivector({0b1100: 1})
        assert a * b == Multivector({0b1111: 7})

    def test_folds_left_to_right(self):
        rng = random.Random(3)
        a = random_multivector(rng, 3)
        b = random_multivector(rng, 3)
        c = random_multivector(rng, 3)
        assert geometric_product(a, b, c) == (a * b) * c


class TestGradeProjection:
    def test_picks_single_grade(self):
        a = 1 + 2 * E1 + 3 * E12
        assert a.grade(1) == 2 * E1

    def test_missing_grade_is_zero(self):
        assert E12.grade(0).is_zero()

    def test_projections_sum_back(self):
        rng = random.Random(11)
        for _ in range(50):
            a = random_multivector(rng, 5)
            total = Multivector.zero()
            for r in range(7):
                total = total + a.grade(r)
            assert total == a
            assert a.grade(6).is_zero() or a.max_dimension() >= 6


class TestInnerOuter:
    def test_inner_of_unit_vectors(self):
        assert E1.inner(E1) == Multivector.scalar(1)

    def test_inner_contracts(self):
        # independent derivation: project the geometric product on |1-2|
        expected = (E1 * E12).grade(1)
        assert expected == E2
        assert E1.inner(E12) == expected

    def test_scalar_factor_gives_zero(self):
        assert Multivector.scalar(3).inner(E1).is_zero()

    def test_outer_of_generators(self):
        assert E1.outer(E2) == E12

    def test_outer_self_annihilates(self):
        rng = random.Random(5)
        for _ in range(50):
            v = random_vector(rng, 4)
            assert v.outer(v).is_zero()

    def test_outer_chain(self):
        expected = (E1 * E2 * E3).grade(3)
        assert outer_product(E1, E2, E3) == expected == Multivector.basis(1, 2, 3)

    def test_products_match_graded_sums(self):
        # both products re-derived from grade projections of the
        # geometric product, term pair by term pair
        rng = random.Random(23)
        for _ in range(40):
            a = random_multivector(rng, 4)
            b = random_multivector(rng, 4)
            inner = Multivector.zero()
            outer = Multivector.zero()
            for k in range(5):
                for l in range(5):
                    piece = a.grade(k) * b.grade(l)
                    outer = outer + piece.grade(k + l)
                    if k and l:
                        inner = inner + piece.grade(abs(k - l))
            assert inner_product(a, b) == inner
            assert outer_product(a, b) == outer


class TestReverse:
    def test_bivector_flips(self):
        assert E12.reverse() == -E12

    def test_trivector_flips(self):
        e123 = Multivector.basis(1, 2, 3)
        assert e123.reverse() == -e123

    def test_low_grades_fixed(self):
        a = 5 + E1
        assert a.reverse() == a

    def test_distributes_over_terms(self):
        rng = random.Random(9)
        for _ in range(30):
            a = random_multivector(rng, 5)
            total = Multivector.zero()
            for r in range(6):
                total = total + a.grade(r).reverse()
            assert a.reverse() == total


class TestNorms:
    def test_euclidean_vector(self):
        assert (E1 + E2).norm_squared() == 2

    def test_rotor_like_element(self):
        assert (1 + E12).norm_squared() == 2

    def test_negative_square_generator(self):
        e3m = Multivector.basis(3, signature=Signature(2))
        assert e3m.norm_squared() == -1
        assert e3m.magnitude() == 1.0

    def test_matches_scalar_part_of_gram(self):
        rng = random.Random(17)
        for sig in (EUCLIDEAN, Signature(2)):
            for _ in range(40):
                a = random_multivector(rng, 4, sig)
                gram = a.reverse() * a
                assert a.norm_squared() == gram.coeff(0)


class TestCoordinates:
    def test_to_basis(self):
        assert to_basis((3, 0, 5)) == 3 * E1 + 5 * E3

    def test_to_vector(self):
        assert (3 * E1 + 5 * E3).to_vector(3) == (3, 0, 5)

    def test_to_vector_rejects_mixed_grades(self):
        with pytest.raises(NotAVector):
            (1 + E1).to_vector(3)

    def test_to_vector_rejects_small_dim(self):
        with pytest.raises(DimensionTooSmall):
            E3.to_vector(2)

    def test_coeff(self):
        a = 3 + 4 * E12
        assert a.coeff((1, 2)) == 4
        assert a.coeff((1, 3)) == 0


class TestFormatting:
    def test_zero(self):
        assert str(Multivector.zero()) == "0"

    def test_sign_handling(self):
        assert str(-E1 + E2 + E3) == "-e1 + e2 + e3"

    def test_coefficients(self):
        a = Multivector({0: 3, 0b11: Fraction(1, 2)})
        assert str(a) == "3 + 1/2 e12"

    def test_braced_blades(self):
        a = Multivector({1 << 9: 1, (1 << 9) | 1: -2})
        assert str(a) == "e{10} - 2 e{1,10}"


class TestSerialization:
    def test_record_shape(self):
        a = Multivector({0: 3, 0b11: Fraction(-1, 2)}, Signature(2))
        assert a.to_record() == {
            "signature": {"p": 2},
            "mode": "rational",
            "terms": [{"indices": [], "coeff": "3/1"},
                      {"indices": [1, 2], "coeff": "-1/2"}],
        }

    def test_euclidean_tag(self):
        assert Multivector.zero().to_record()["signature"] == "euclidean"

    def test_terms_sorted_by_grade_then_indices(self):
        a = Multivector({0b111: 1, 0b1: 1, 0b110: 1, 0b101: 1})
        indices = [t["indices"] for t in a.to_record()["terms"]]
        assert indices == [[1], [1, 3], [2, 3], [1, 2, 3]]

    def test_round_trip_rational(self):
        rng = random.Random(29)
        for _ in range(50):
            a = random_multivector(rng, 5, Signature(3))
            assert Multivector.from_json(a.to_json()) == a

    def test_round_trip_float(self):
        a = Multivector({0b1: 0.125, 0b110: -2.5}, mode=FLOAT)
        b = Multivector.from_json(a.to_json())
        assert b == a and b.mode == FLOAT

    def test_json_is_valid(self):
        record = json.loads((1 + E12).to_json())
        assert record["mode"] == RATIONAL
