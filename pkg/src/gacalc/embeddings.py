"""Complex, quaternion, and Pauli/Dirac views of even subalgebras.

The complex plane sits inside the even part of the algebra of R^2 via
i = e1e2; quaternions sit inside the even part of R^3 via i = -e2e3,
j = e1e3, k = -e1e2; the Pauli relations live in the even part of the
p=3 algebra on e1..e4.  Every operation here round-trips through the
multivector kernel rather than reimplementing the arithmetic, which is
the point: the kernel supplies the number systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blades import EUCLIDEAN, SCALAR_BLADE, Signature
from .errors import NotInEvenSubalgebra, WrongSignature, ZeroMultivector, ZeroQuaternion
from .multivector import FLOAT, Multivector, Scalar

_E12 = 0b011
_E13 = 0b101
_E23 = 0b110

PAULI_SIGNATURE = Signature(3)


def _number(value) -> Scalar:
    return value if isinstance(value, float) else Fraction(value)


@dataclass(frozen=True)
class ComplexGA:
    """Complex number z = re + im*i with i realized as the bivector e1e2."""

    re: Scalar
    im: Scalar

    def __post_init__(self):
        object.__setattr__(self, "re", _number(self.re))
        object.__setattr__(self, "im", _number(self.im))


@dataclass(frozen=True)
class QuaternionGA:
    """Quaternion q0 + q1*i + q2*j + q3*k over the even subalgebra of R^3."""

    q0: Scalar
    q1: Scalar
    q2: Scalar
    q3: Scalar

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, _number(getattr(self, name)))


# -- complex numbers --------------------------------------------------------

def complex_to_mv(z: ComplexGA) -> Multivector:
    return Multivector({SCALAR_BLADE: z.re, _E12: z.im}, EUCLIDEAN)


def mv_to_complex(a: Multivector) -> ComplexGA:
    extra = [b for b in dict(a.terms()) if b not in (SCALAR_BLADE, _E12)]
    if extra:
        raise NotInEvenSubalgebra(
            "multivector has components outside span{1, e1e2}")
    return ComplexGA(a.coeff(SCALAR_BLADE), a.coeff(_E12))


def complex_product(z: ComplexGA, w: ComplexGA) -> ComplexGA:
    return mv_to_complex(complex_to_mv(z).geometric(complex_to_mv(w)))


def complex_conjugate(z: ComplexGA) -> ComplexGA:
    return mv_to_complex(complex_to_mv(z).reverse())


def complex_abs(z: ComplexGA) -> float:
    return complex_to_mv(z).magnitude()


def complex_re(z: ComplexGA) -> Scalar:
    return complex_to_mv(z).grade(0).scalar_part()


def complex_im(z: ComplexGA) -> Scalar:
    plane = Multivector({_E12: -1}, EUCLIDEAN)
    return complex_to_mv(z).grade(2).geometric(plane).scalar_part()


def complex_inverse(z: ComplexGA) -> ComplexGA:
    mv = complex_to_mv(z)
    if mv.is_zero():
        raise ZeroMultivector("zero has no inverse")
    return mv_to_complex(mv.inverse())


# -- quaternions -------------------------------------------------------------

def quaternion_to_mv(q: QuaternionGA) -> Multivector:
    """Embed via i = -e2e3, j = e1e3, k = -e1e2."""
    return Multivector({SCALAR_BLADE: q.q0, _E23: -q.q1, _E13: q.q2, _E12: -q.q3},
                       EUCLIDEAN)


def mv_to_quaternion(a: Multivector) -> QuaternionGA:
    allowed = (SCALAR_BLADE, _E12, _E13, _E23)
    extra = [b for b in dict(a.terms()) if b not in allowed]
    if extra:
        raise NotInEvenSubalgebra(
            "multivector has components outside the even subalgebra of R^3")
    return QuaternionGA(a.coeff(SCALAR_BLADE), -a.coeff(_E23),
                        a.coeff(_E13), -a.coeff(_E12))


def quaternion_product(p: QuaternionGA, q: QuaternionGA) -> QuaternionGA:
    return mv_to_quaternion(quaternion_to_mv(p).geometric(quaternion_to_mv(q)))


def quaternion_turn(q: QuaternionGA) -> QuaternionGA:
    """Quaternion conjugate: the kernel reverse negates the vector part."""
    return mv_to_quaternion(quaternion_to_mv(q).reverse())


def quaternion_magnitude(q: QuaternionGA) -> float:
    return quaternion_to_mv(q).magnitude()


def quaternion_inverse(q: QuaternionGA) -> QuaternionGA:
    mv = quaternion_to_mv(q)
    if mv.is_zero():
        raise ZeroQuaternion("the zero quaternion has no inverse")
    return mv_to_quaternion(mv.inverse())


# -- Pauli and Dirac bases ----------------------------------------------------

def _check_pauli_signature(signature: Signature) -> None:
    if signature != PAULI_SIGNATURE:
        raise WrongSignature(
            f"Pauli/Dirac identities need signature p=3, got {signature}")


def pauli_sigma(i: int, signature: Signature = PAULI_SIGNATURE) -> Multivector:
    """Pauli generator sigma_i = e_i e_4 in the p=3 algebra on e1..e4."""
    _check_pauli_signature(signature)
    if i not in (1, 2, 3):
        raise ValueError("Pauli index must be 1, 2 or 3")
    return Multivector.basis(i, 4, signature=signature)


def dirac_basis(signature: Signature = PAULI_SIGNATURE) -> list[Multivector]:
    """The four generators e1..e4 with e1..e3 squaring to +1, e4 to -1."""
    _check_pauli_signature(signature)
    return [Multivector.basis(i, signature=signature) for i in (1, 2, 3, 4)]
