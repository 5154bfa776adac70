import math
import random
from fractions import Fraction

import pytest
from conftest import random_multivector, random_vector

from gacalc import (
    EUCLIDEAN,
    FLOAT,
    Multivector,
    Signature,
    Singular,
    ZeroMultivector,
)
from gacalc.errors import DimensionTooSmall

E1 = Multivector.basis(1)
E12 = Multivector.basis(1, 2)
ONE = Multivector.scalar(1)


class TestInverse:
    def test_unit_vector(self):
        assert E1.inverse() == E1

    def test_scaled_vector(self):
        assert (2 * E1).inverse() == E1 / 2

    def test_rotor_like(self):
        assert (1 + E12).inverse() == (1 - E12) / 2
        assert (1 + E12) * (1 + E12).inverse() == ONE

    def test_zero_divisor_reports_witness(self):
        a = 1 + E1
        with pytest.raises(Singular) as info:
            a.inverse()
        witness = info.value.witness
        assert not witness.is_zero()
        assert (a * witness).is_zero()

    def test_zero_rejected(self):
        with pytest.raises(ZeroMultivector):
            Multivector.zero().inverse()

    def test_matrix_route_two_sided(self):
        # support on mixed grades pushes past the reverse shortcut
        a = 2 + E1 + Multivector.basis(2, 3)
        x = a.inverse()
        assert a * x == ONE and x * a == ONE

    def test_random_versors_invert_exactly(self):
        rng = random.Random(41)
        for sig in (EUCLIDEAN, Signature(2)):
            for _ in range(60):
                versor = Multivector.scalar(1, sig)
                for _ in range(rng.randint(1, 4)):
                    versor = versor * random_vector(rng, 4, sig, non_null=True)
                x = versor.inverse()
                one = Multivector.scalar(1, sig)
                assert versor * x == one and x * versor == one

    def test_random_general_inverse_or_witness(self):
        rng = random.Random(43)
        for _ in range(40):
            a = random_multivector(rng, 3, nonzero=True)
            try:
                x = a.inverse()
            except Singular as err:
                assert not err.witness.is_zero()
                assert (a * err.witness).is_zero()
            else:
                assert a * x == ONE and x * a == ONE

    def test_float_rotor(self):
        half = math.pi / 6
        rotor = Multivector({0: math.cos(half), 0b11: math.sin(half)}, mode=FLOAT)
        x = rotor.inverse()
        product = rotor * x
        assert abs(product.coeff(0) - 1.0) < 1e-12
        assert abs(product.coeff((1, 2))) < 1e-12


class TestDual:
    def test_vector_in_three_dims(self):
        assert E1.dual(3) == -Multivector.basis(2, 3)

    def test_scalar_in_two_dims(self):
        assert ONE.dual(2) == -E12

    def test_round_trip(self):
        rng = random.Random(47)
        pseudo = Multivector.basis(1, 2, 3, 4)
        for _ in range(30):
            a = random_multivector(rng, 4)
            assert a.dual(4) * pseudo == a

    def test_requires_enough_dimensions(self):
        with pytest.raises(DimensionTooSmall):
            Multivector.basis(3).dual(2)

    def test_division_by_multivector_uses_inverse(self):
        a = 3 + E12
        b = 1 + E12
        assert a / b == a * b.inverse()
