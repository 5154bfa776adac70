"""Metric-aware differential operators on 3D scalar and vector fields.

The operators act on symbolic expressions over the fixed coordinates
x1, x2, x3 (other names act as free parameters).  Each coordinate
direction carries the metric sign of its generator, so the gradient
picks up one sign per component, the divergence the sign squared, and
the component Laplacian the sign cubed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blades import EUCLIDEAN, Signature, metric_sign
from .errors import DegenerateNormal, SignatureMismatch
from .fieldexpr import (
    Expr,
    Sqrt,
    ZERO,
    add,
    const,
    diff,
    mul,
    power,
    quotient,
    simplify,
)

COORDINATES = ("x1", "x2", "x3")


@dataclass(frozen=True)
class VectorField:
    """Three symbolic components over x1..x3 plus the ambient signature."""

    components: tuple[Expr, Expr, Expr]
    signature: Signature = EUCLIDEAN

    def __post_init__(self):
        if len(self.components) != 3:
            raise ValueError("vector fields here are three-dimensional")


def geo_grad(g: Expr, signature: Signature = EUCLIDEAN) -> VectorField:
    """Gradient with one metric sign per component."""
    comps = tuple(mul(const(metric_sign(k, signature)), diff(g, COORDINATES[k - 1]))
                  for k in (1, 2, 3))
    return VectorField(comps, signature)


def geo_div(field: VectorField) -> Expr:
    """Divergence: metric signs enter squared (hence always +1)."""
    sig = field.signature
    return add(*(mul(const(metric_sign(k, sig) ** 2),
                     diff(field.components[k - 1], COORDINATES[k - 1]))
                 for k in (1, 2, 3)))


def geo_lap(field: VectorField) -> VectorField:
    """Componentwise Laplacian with metric signs entering cubed."""
    sig = field.signature
    comps = []
    for component in field.components:
        comps.append(add(*(mul(const(metric_sign(j, sig) ** 3),
                               diff(diff(component, COORDINATES[j - 1]),
                                    COORDINATES[j - 1]))
                           for j in (1, 2, 3))))
    return VectorField(tuple(comps), field.signature)


def field_inner(a: VectorField, b: VectorField) -> Expr:
    """Pointwise inner product: sum of metric_sign(k) * a_k * b_k."""
    if a.signature != b.signature:
        raise SignatureMismatch("vector fields carry different signatures")
    return add(*(mul(const(metric_sign(k, a.signature)),
                     a.components[k - 1], b.components[k - 1])
                 for k in (1, 2, 3)))


def gaussian_curvature(f: Expr, signature: Signature = EUCLIDEAN) -> Expr:
    """Gaussian curvature of the level surface f(x1,x2,x3) = 0.

    Uses (n . lap(n) + div(n)^2)/2 with n the normalized gradient.  The
    normalizing length is the formal square root of the signed quantity
    grad(f) . grad(f); only even powers of it survive, so the result is
    a rational expression and keeps the sign the indefinite metric
    dictates (negative curvature comes out negative).
    """
    grad = geo_grad(f, signature)
    if all(simplify(c) == ZERO for c in grad.components):
        raise DegenerateNormal("gradient of the surface function is identically zero")
    length_sq = simplify(field_inner(grad, grad))
    if length_sq == ZERO:
        raise DegenerateNormal("gradient of the surface function is null "
                               "under this metric")
    length = Sqrt(field_inner(grad, grad))
    normal = VectorField(tuple(quotient(c, length) for c in grad.components),
                         signature)
    curvature = mul(const(1) / 2,
                    add(field_inner(normal, geo_lap(normal)),
                        power(geo_div(normal), 2)))
    return simplify(curvature)
