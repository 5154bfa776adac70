import itertools
import random

import pytest
from conftest import oracle_blade_product

from gacalc import (
    EUCLIDEAN,
    IndexOutOfRange,
    Signature,
    blade_indices,
    blade_product,
    grade_of,
    make_blade,
    max_dimension,
    metric_sign,
)


def bl(*indices):
    return make_blade(indices)


class TestMetricSign:
    def test_below_threshold(self):
        assert metric_sign(1, Signature(2)) == 1

    def test_above_threshold(self):
        assert metric_sign(3, Signature(2)) == -1

    def test_euclidean_default(self):
        assert metric_sign(5, EUCLIDEAN) == 1

    def test_rejects_index_zero(self):
        with pytest.raises(IndexOutOfRange):
            metric_sign(0, EUCLIDEAN)

    def test_rejects_negative_threshold(self):
        with pytest.raises(ValueError):
            Signature(-1)


class TestBladeBasics:
    def test_grade(self):
        assert grade_of(bl()) == 0
        assert grade_of(bl(1, 3, 4)) == 3
        assert grade_of(bl(2)) == 1

    def test_max_dimension(self):
        assert max_dimension(bl(1, 3, 4)) == 4
        assert max_dimension(bl()) == 0
        assert max_dimension(bl(7)) == 7

    def test_indices_round_trip(self):
        assert blade_indices(bl(2, 5, 9)) == (2, 5, 9)

    def test_rejects_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            make_blade([0])
        with pytest.raises(IndexOutOfRange):
            make_blade([65])
        with pytest.raises(IndexOutOfRange):
            make_blade([3, 3])


class TestBladeProduct:
    def test_generator_square(self):
        assert blade_product(bl(1), bl(1), EUCLIDEAN) == (1, bl())

    def test_anticommutation_pair(self):
        assert blade_product(bl(2), bl(1), EUCLIDEAN) == (-1, bl(1, 2))

    def test_negative_square(self):
        assert blade_product(bl(3), bl(3), Signature(2)) == (-1, bl())

    def test_disjoint_bivectors(self):
        # frozen from the bubble-sort oracle: no swaps are needed
        assert oracle_blade_product((1, 2), (3, 4)) == (1, (1, 2, 3, 4))
        assert blade_product(bl(1, 2), bl(3, 4), EUCLIDEAN) == (1, bl(1, 2, 3, 4))

    def test_matches_oracle_exhaustively(self):
        signatures = [EUCLIDEAN, Signature(0), Signature(2)]
        for a in range(32):
            for b in range(32):
                ia, ib = blade_indices(a), blade_indices(b)
                for sig in signatures:
                    coeff, blade = blade_product(a, b, sig)
                    assert (coeff, blade_indices(blade)) == \
                        oracle_blade_product(ia, ib, sig), (ia, ib, sig)

    def test_associative_exhaustively(self):
        sig = Signature(1)
        for a, b, c in itertools.product(range(32), repeat=3):
            s1, ab = blade_product(a, b, sig)
            s2, ab_c = blade_product(ab, c, sig)
            t1, bc = blade_product(b, c, sig)
            t2, a_bc = blade_product(a, bc, sig)
            assert ab_c == a_bc and s1 * s2 == t1 * t2

    def test_generators_anticommute(self):
        for i in range(1, 9):
            for j in range(1, 9):
                if i == j:
                    continue
                sij, bij = blade_product(bl(i), bl(j), EUCLIDEAN)
                sji, bji = blade_product(bl(j), bl(i), EUCLIDEAN)
                assert bij == bji and sij == -sji

    def test_grade_of_product(self):
        rng = random.Random(7)
        for _ in range(500):
            a = rng.randrange(256)
            b = rng.randrange(256)
            _, result = blade_product(a, b, EUCLIDEAN)
            shared = grade_of(a & b)
            assert grade_of(result) == grade_of(a) + grade_of(b) - 2 * shared


def test_basis_count_doubles_with_dimension():
    for n in range(7):
        blades = {b for b in range(1 << n) if max_dimension(b) <= n}
        assert len(blades) == 2 ** n
