"""Sparse multivectors over basis blades, with the full algebra on top.

A multivector is a map from blade (bitmask int, see ``blades``) to a
nonzero coefficient, tagged with the metric signature it was built
under.  Coefficients are exact ``Fraction`` values in ``"rational"``
mode or doubles in ``"float"`` mode; a single multivector never mixes
the two.  Operations between a rational and a float operand promote the
rational side to floats, like Python's own numeric tower.

Values are immutable: every operation returns a new multivector and the
term map is never exposed for writing, so sharing across threads needs
no coordination.
"""

from __future__ import annotations

import json
import math
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .blades import (
    EUCLIDEAN,
    SCALAR_BLADE,
    Signature,
    blade_indices,
    blade_product,
    grade_of,
    make_blade,
    max_dimension as blade_max_dimension,
)
from .errors import (
    CollinearPlane,
    DimensionTooLarge,
    DimensionTooSmall,
    NotAVector,
    NotUnitVersor,
    SignatureMismatch,
    Singular,
    WrongSignature,
    ZeroMultivector,
    ZeroVector,
)
from .linsolve import solve_or_witness

RATIONAL = "rational"
FLOAT = "float"

Scalar = Fraction | float


def _coerce(value, mode: str):
    if mode == FLOAT:
        return float(value)
    if isinstance(value, float):
        raise TypeError("float coefficient in a rational-mode multivector")
    return Fraction(value)


def _is_scalar_number(value) -> bool:
    return isinstance(value, (int, Fraction, float))


class Multivector:
    """Immutable sparse multivector over a fixed metric signature."""

    __slots__ = ("signature", "mode", "_terms")

    def __init__(self, terms: Mapping[int, object] | None = None,
                 signature: Signature = EUCLIDEAN, mode: str | None = None):
        if mode is None:
            mode = FLOAT if terms and any(
                isinstance(c, float) for c in terms.values()) else RATIONAL
        if mode not in (RATIONAL, FLOAT):
            raise ValueError(f"unknown coefficient mode {mode!r}")
        stored: dict[int, Scalar] = {}
        if terms:
            for blade, value in terms.items():
                coeff = _coerce(value, mode)
                if coeff != 0:
                    stored[int(blade)] = coeff
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "_terms", stored)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, signature: Signature = EUCLIDEAN, mode: str = RATIONAL) -> "Multivector":
        return cls({}, signature, mode)

    @classmethod
    def scalar(cls, value, signature: Signature = EUCLIDEAN,
               mode: str | None = None) -> "Multivector":
        return cls({SCALAR_BLADE: value}, signature, mode)

    @classmethod
    def blade(cls, indices: Iterable[int], coefficient=1,
              signature: Signature = EUCLIDEAN, mode: str | None = None) -> "Multivector":
        """Single term on the blade with the given (distinct) indices."""
        return cls({make_blade(indices): coefficient}, signature, mode)

    @classmethod
    def basis(cls, *indices: int, signature: Signature = EUCLIDEAN,
              mode: str | None = None) -> "Multivector":
        """Geometric product of generators in the order given.

        Repeated or out-of-order indices are folded into the sign/metric,
        so ``basis(2, 1)`` is -e1e2 and ``basis(1, 1)`` is the scalar
        e1 squared.
        """
        coeff = 1
        blade = SCALAR_BLADE
        for index in indices:
            sign, blade = blade_product(blade, make_blade([index]), signature)
            coeff *= sign
        return cls({blade: coeff}, signature, mode)

    # -- inspection ----------------------------------------------------

    def terms(self) -> Iterator[tuple[int, Scalar]]:
        """(blade, coefficient) pairs sorted by grade then indices."""
        return iter(sorted(self._terms.items(),
                           key=lambda kv: (grade_of(kv[0]), blade_indices(kv[0]))))

    def coeff(self, blade) -> Scalar:
        """Coefficient of a blade (bitmask or index iterable); 0 if absent."""
        if not isinstance(blade, int):
            blade = make_blade(blade)
        zero = 0.0 if self.mode == FLOAT else Fraction(0)
        return self._terms.get(blade, zero)

    def scalar_part(self) -> Scalar:
        return self.coeff(SCALAR_BLADE)

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({grade_of(b) for b in self._terms}))

    def max_dimension(self) -> int:
        """Largest generator index used anywhere; 0 for scalars and zero."""
        return max((blade_max_dimension(b) for b in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return not self._terms or set(self._terms) == {SCALAR_BLADE}

    def is_vector(self) -> bool:
        """True when every term has grade 1 (vacuously true for zero)."""
        return all(grade_of(b) == 1 for b in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if _is_scalar_number(other):
            other = Multivector.scalar(float(other) if isinstance(other, float)
                                       else other, self.signature,
                                       FLOAT if isinstance(other, float) else RATIONAL)
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.signature != other.signature:
            return False
        if set(self._terms) != set(other._terms):
            return False
        return all(self._terms[b] == other._terms[b] for b in self._terms)

    def __hash__(self) -> int:
        return hash((self.signature, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"<Multivector {self} [{self.signature}, {self.mode}]>"

    def __str__(self) -> str:
        return format_multivector(self)

    # -- linear structure ----------------------------------------------

    def to_float(self) -> "Multivector":
        if self.mode == FLOAT:
            return self
        return Multivector({b: float(c) for b, c in self._terms.items()},
                           self.signature, FLOAT)

    def _aligned(self, other: "Multivector") -> tuple["Multivector", "Multivector"]:
        if self.signature != other.signature:
            raise SignatureMismatch(
                f"cannot combine values built under {self.signature} and {other.signature}")
        if self.mode == other.mode:
            return self, other
        return self.to_float(), other.to_float()

    def _wrap(self, value) -> "Multivector":
        mode = FLOAT if isinstance(value, float) else self.mode
        return Multivector.scalar(value, self.signature, mode)

    def add(self, other: "Multivector") -> "Multivector":
        a, b = self._aligned(other)
        out = dict(a._terms)
        for blade, coeff in b._terms.items():
            out[blade] = out.get(blade, 0) + coeff
        return Multivector(out, a.signature, a.mode)

    def scale(self, factor) -> "Multivector":
        if isinstance(factor, float) and self.mode == RATIONAL:
            return self.to_float().scale(factor)
        return Multivector({b: c * factor for b, c in self._terms.items()},
                           self.signature, self.mode)

    def __add__(self, other):
        if _is_scalar_number(other):
            other = self._wrap(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.add(other)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return self.scale(-1)

    def __pos__(self) -> "Multivector":
        return self

    def __sub__(self, other):
        if _is_scalar_number(other):
            other = self._wrap(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.add(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    # -- products --------------------------------------------------------

    def geometric(self, other: "Multivector") -> "Multivector":
        """Geometric product, the double sum over term pairs."""
        a, b = self._aligned(other)
        out: dict[int, Scalar] = {}
        for ba, ca in a._terms.items():
            for bb, cb in b._terms.items():
                sign, blade = blade_product(ba, bb, a.signature)
                out[blade] = out.get(blade, 0) + sign * ca * cb
        return Multivector(out, a.signature, a.mode)

    def inner(self, other: "Multivector") -> "Multivector":
        """Grade-lowering product; terms with a scalar factor contribute 0."""
        a, b = self._aligned(other)
        out: dict[int, Scalar] = {}
        for ba, ca in a._terms.items():
            ga = grade_of(ba)
            if ga == 0:
                continue
            for bb, cb in b._terms.items():
                gb = grade_of(bb)
                if gb == 0:
                    continue
                sign, blade = blade_product(ba, bb, a.signature)
                if grade_of(blade) == abs(ga - gb):
                    out[blade] = out.get(blade, 0) + sign * ca * cb
        return Multivector(out, a.signature, a.mode)

    def outer(self, other: "Multivector") -> "Multivector":
        """Grade-raising product; scalars act as plain scale factors."""
        a, b = self._aligned(other)
        out: dict[int, Scalar] = {}
        for ba, ca in a._terms.items():
            for bb, cb in b._terms.items():
                if ba & bb:
                    continue  # shared index: the grade-(p+q) part is zero
                sign, blade = blade_product(ba, bb, a.signature)
                out[blade] = out.get(blade, 0) + sign * ca * cb
        return Multivector(out, a.signature, a.mode)

    def __mul__(self, other):
        if _is_scalar_number(other):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.geometric(other)

    def __rmul__(self, other):
        if _is_scalar_number(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar_number(other):
            if other == 0:
                raise ZeroDivisionError("division of a multivector by zero")
            if isinstance(other, float) or self.mode == FLOAT:
                return self.scale(1.0 / float(other))
            return self.scale(Fraction(1, 1) / Fraction(other))
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.geometric(other.inverse())

    def __rtruediv__(self, other):
        if _is_scalar_number(other):
            return self.inverse().scale(other)
        return NotImplemented

    def __xor__(self, other):
        if _is_scalar_number(other):
            other = self._wrap(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.outer(other)

    def __rxor__(self, other):
        if _is_scalar_number(other):
            return self._wrap(other).outer(self)
        return NotImplemented

    def __or__(self, other):
        if _is_scalar_number(other):
            other = self._wrap(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.inner(other)

    def __ror__(self, other):
        if _is_scalar_number(other):
            return self._wrap(other).inner(self)
        return NotImplemented

    def __invert__(self) -> "Multivector":
        return self.reverse()

    # -- involutions and norms --------------------------------------------

    def grade(self, r: int) -> "Multivector":
        """Projection onto grade r; zero multivector when no term matches."""
        if r < 0:
            raise ValueError("grade must be non-negative")
        kept = {b: c for b, c in self._terms.items() if grade_of(b) == r}
        return Multivector(kept, self.signature, self.mode)

    def reverse(self) -> "Multivector":
        """Reverse the factor order of every blade: sign (-1)^(k(k-1)/2)."""
        out = {}
        for blade, coeff in self._terms.items():
            k = grade_of(blade)
            out[blade] = -coeff if (k * (k - 1) // 2) & 1 else coeff
        return Multivector(out, self.signature, self.mode)

    def norm_squared(self) -> Scalar:
        """Scalar part of reverse(A) A; may be negative in mixed signature.

        Blade by blade the reversal sign and the reordering sign cancel,
        leaving the squared coefficient times the product of metric signs.
        """
        total = 0.0 if self.mode == FLOAT else Fraction(0)
        for blade, coeff in self._terms.items():
            metric = 1
            for index in blade_indices(blade):
                metric *= self.signature.sign(index)
            total += metric * coeff * coeff
        return total

    def magnitude(self) -> float:
        return math.sqrt(abs(float(self.norm_squared())))

    def inverse(self) -> "Multivector":
        """Multiplicative inverse, exact in rational mode.

        Versors (and every multivector whose reverse-gram is a nonzero
        scalar) invert as reverse(A)/norm.  Anything else is inverted by
        solving the left-multiplication linear system over the full
        2^n blade basis; if that system is singular the raised error
        carries a nonzero witness Y with A Y = 0.
        """
        if not self._terms:
            raise ZeroMultivector("the zero multivector has no inverse")
        rev = self.reverse()
        gram = rev.geometric(self)
        if gram.is_scalar() and not gram.is_zero():
            return rev / gram.scalar_part()
        n = self.max_dimension()
        size = 1 << n
        zero = 0.0 if self.mode == FLOAT else Fraction(0)
        matrix = [[zero] * size for _ in range(size)]
        for column in range(size):
            for blade, coeff in self._terms.items():
                sign, result = blade_product(blade, column, self.signature)
                matrix[result][column] += sign * coeff
        rhs = [zero] * size
        rhs[SCALAR_BLADE] = 1.0 if self.mode == FLOAT else Fraction(1)
        status, vec = solve_or_witness(matrix, rhs)
        result = Multivector({b: vec[b] for b in range(size)},
                             self.signature, self.mode)
        if status == "solution":
            return result
        raise Singular("multivector is a zero divisor and has no inverse",
                       witness=result)

    def dual(self, dim: int) -> "Multivector":
        """Right-multiplication by the inverse pseudoscalar of R^dim."""
        if dim < self.max_dimension():
            raise DimensionTooSmall(
                f"dual in dimension {dim} cannot hold e{self.max_dimension()}")
        if dim < 1:
            raise DimensionTooSmall("dual needs a positive dimension")
        pseudo = Multivector({(1 << dim) - 1: 1}, self.signature, self.mode)
        return self.geometric(pseudo.inverse())

    def to_vector(self, dim: int) -> tuple[Scalar, ...]:
        """Coordinates of a pure vector in R^dim."""
        if not self.is_vector():
            raise NotAVector("multivector has components of grade other than 1")
        if dim < self.max_dimension():
            raise DimensionTooSmall(
                f"vector uses e{self.max_dimension()}, beyond dimension {dim}")
        zero = 0.0 if self.mode == FLOAT else Fraction(0)
        return tuple(self._terms.get(1 << (i - 1), zero) for i in range(1, dim + 1))

    # -- serialization ----------------------------------------------------

    def to_record(self) -> dict:
        """Plain-data record: signature, mode, and sorted nonzero terms."""
        signature = "euclidean" if self.signature.p is None else {"p": self.signature.p}
        terms = []
        for blade, coeff in self.terms():
            if self.mode == RATIONAL:
                value = f"{coeff.numerator}/{coeff.denominator}"
            else:
                value = float(coeff)
            terms.append({"indices": list(blade_indices(blade)), "coeff": value})
        return {"signature": signature, "mode": self.mode, "terms": terms}

    @classmethod
    def from_record(cls, record: Mapping) -> "Multivector":
        raw_sig = record["signature"]
        if raw_sig == "euclidean":
            signature = EUCLIDEAN
        else:
            signature = Signature(int(raw_sig["p"]))
        mode = record["mode"]
        terms: dict[int, Scalar] = {}
        for entry in record["terms"]:
            blade = make_blade(entry["indices"])
            coeff = entry["coeff"]
            terms[blade] = float(coeff) if mode == FLOAT else Fraction(coeff)
        return cls(terms, signature, mode)

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    @classmethod
    def from_json(cls, text: str) -> "Multivector":
        return cls.from_record(json.loads(text))


# -- formatting -----------------------------------------------------------

def format_blade_symbol(blade: int) -> str:
    """Canonical text for a blade: e12 when all indices fit one digit."""
    indices = blade_indices(blade)
    if not indices:
        return "1"
    if indices[-1] <= 9:
        return "e" + "".join(str(i) for i in indices)
    return "e{" + ",".join(str(i) for i in indices) + "}"


def format_scalar(value: Scalar) -> str:
    """Scalar text that the expression language reads back exactly."""
    if isinstance(value, Fraction):
        return str(value)
    if value != value or value in (math.inf, -math.inf):
        return repr(value)
    # Fixed-point form of the shortest repr; the grammar has no exponent
    # notation, so 1e-05 must round-trip as 0.00001.
    text = format(Decimal(repr(value)), "f")
    if "." not in text:
        text += ".0"
    return text


def format_multivector(value: Multivector) -> str:
    """Terms sorted by grade then indices; unit coefficients suppressed."""
    parts: list[str] = []
    for blade, coeff in value.terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if blade == SCALAR_BLADE:
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = format_blade_symbol(blade)
        else:
            body = f"{format_scalar(magnitude)} {format_blade_symbol(blade)}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"


# -- module-level operations -----------------------------------------------

def geometric_product(first: Multivector, *rest: Multivector) -> Multivector:
    """Geometric product of two or more factors, folded left to right."""
    out = first
    for factor in rest:
        out = out.geometric(factor)
    return out


def inner_product(a: Multivector, b: Multivector) -> Multivector:
    return a.inner(b)


def outer_product(first: Multivector, *rest: Multivector) -> Multivector:
    out = first
    for factor in rest:
        out = out.outer(factor)
    return out


def grade_project(a: Multivector, r: int) -> Multivector:
    return a.grade(r)


def reverse(a: Multivector) -> Multivector:
    return a.reverse()


def norm_squared(a: Multivector) -> Scalar:
    return a.norm_squared()


def magnitude(a: Multivector) -> float:
    return a.magnitude()


def inverse(a: Multivector) -> Multivector:
    return a.inverse()


def dual(a: Multivector, dim: int) -> Multivector:
    return a.dual(dim)


def coeff(a: Multivector, blade) -> Scalar:
    return a.coeff(blade)


def to_basis(coords: Iterable, signature: Signature = EUCLIDEAN,
             mode: str | None = None) -> Multivector:
    """Vector from coordinates: (3, 0, 5) becomes 3e1 + 5e3."""
    terms = {1 << i: value for i, value in enumerate(coords)}
    return Multivector(terms, signature, mode)


def to_vector(a: Multivector, dim: int) -> tuple[Scalar, ...]:
    return a.to_vector(dim)


def _require_vector(value: Multivector, what: str) -> None:
    if not value.is_vector():
        raise NotAVector(f"{what} must be a pure vector")


def _require_r3(value: Multivector, what: str) -> None:
    if value.max_dimension() > 3:
        raise DimensionTooLarge(f"{what} must lie in the span of e1..e3")
    p = value.signature.p
    if p is not None and p < 3:
        raise WrongSignature(
            f"{what} needs e1..e3 squaring to +1; signature is {value.signature}")


def cross_product(a: Multivector, b: Multivector) -> Multivector:
    """Classical 3D cross product: -e1e2e3 times the outer product."""
    _require_vector(a, "cross product operand")
    _require_vector(b, "cross product operand")
    a2, b2 = a._aligned(b)
    _require_r3(a2, "cross product operand")
    _require_r3(b2, "cross product operand")
    i3 = Multivector({0b111: -1}, a2.signature, a2.mode)
    return i3.geometric(a2.outer(b2))


def rotate_in_plane(v: Multivector, a: Multivector, b: Multivector,
                    theta: float) -> Multivector:
    """Rotate v by theta radians in the oriented plane spanned by a, b.

    Builds the half-angle rotor cos(theta/2) + sin(theta/2) B/|B| from
    the plane bivector B = a ^ b and conjugates: reverse(U) v U.  The
    order of a and b fixes the sense of the rotation.
    """
    _require_vector(a, "plane vector")
    _require_vector(b, "plane vector")
    plane = a.outer(b)
    if plane.is_zero():
        raise CollinearPlane("plane vectors are collinear; a ^ b = 0")
    plane = plane.to_float()
    half = float(theta) / 2.0
    rotor = plane.scale(math.sin(half) / plane.magnitude()) + math.cos(half)
    return rotor.reverse().geometric(v.to_float()).geometric(rotor)


def rotate_vec_to_vec(x: Multivector, src: Multivector,
                      dst: Multivector) -> Multivector:
    """Apply the rotor that turns direction(src) into direction(dst).

    Uses the half-angle form U = (1 + s t)/|1 + s t| with s, t the unit
    vectors of src and dst, so reverse(U) s U = t.  Antipodal src/dst
    leave U undefined; then the rotation is by pi in the plane spanned
    by s and the lowest-index basis vector not collinear with it.
    """
    if src.is_zero() or dst.is_zero():
        raise ZeroVector("rotation endpoints must be nonzero vectors")
    _require_vector(src, "rotation endpoint")
    _require_vector(dst, "rotation endpoint")
    _require_r3(src, "rotation endpoint")
    _require_r3(dst, "rotation endpoint")
    s = src.to_float() / src.magnitude()
    t = dst.to_float() / dst.magnitude()
    u = s.geometric(t) + 1.0
    length = u.magnitude()
    if length < 1e-9:
        for index in (1, 2, 3):
            axis = Multivector({1 << (index - 1): 1.0}, s.signature, FLOAT)
            plane = s.outer(axis)
            if plane.magnitude() > 1e-9:
                u = plane
                length = plane.magnitude()
                break
    rotor = u / length
    return rotor.reverse().geometric(x.to_float()).geometric(rotor)


def apply_versor(v: Multivector, factors: Iterable[Multivector]) -> Multivector:
    """Isometry v -> (-1)^k reverse(U) v U for U a product of unit vectors.

    Even k is a rotation, odd k a reflection.  The factors must satisfy
    the unit condition U reverse(U) = 1, checked exactly in rational
    mode and to 1e-9 in float mode.
    """
    factors = list(factors)
    for factor in factors:
        _require_vector(factor, "versor factor")
    if not factors:
        return v
    u = factors[0]
    for factor in factors[1:]:
        u = u.geometric(factor)
    check = u.geometric(u.reverse())
    unit = (check - 1)
    if unit.mode == FLOAT:
        if unit.magnitude() > 1e-9:
            raise NotUnitVersor("versor factors do not multiply to a unit versor")
    elif not unit.is_zero():
        raise NotUnitVersor("versor factors do not multiply to a unit versor")
    out = u.reverse().geometric(v).geometric(u)
    return -out if len(factors) & 1 else out
