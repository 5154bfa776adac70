"""Geometric algebra over arbitrary signatures, with exact coefficients.

The kernel is two primitives, the blade product and the grade
projection; everything else (inner/outer products, reverse, magnitude,
inverse, dual, cross product, rotors and versors) is derived from them.
On top sit the complex/quaternion/Pauli embeddings, a metric-aware
symbolic field calculus, an expression-language CLI, and an OBJ/SVG
scene exporter for multivectors of 3-space.
"""

from .blades import (
    EUCLIDEAN,
    MAX_INDEX,
    Signature,
    blade_indices,
    blade_product,
    grade_of,
    make_blade,
    max_dimension,
    metric_sign,
)
from .calculus import (
    VectorField,
    field_inner,
    gaussian_curvature,
    geo_div,
    geo_grad,
    geo_lap,
)
from .embeddings import (
    ComplexGA,
    QuaternionGA,
    complex_abs,
    complex_conjugate,
    complex_im,
    complex_inverse,
    complex_product,
    complex_re,
    complex_to_mv,
    dirac_basis,
    mv_to_complex,
    mv_to_quaternion,
    pauli_sigma,
    quaternion_inverse,
    quaternion_magnitude,
    quaternion_product,
    quaternion_to_mv,
    quaternion_turn,
)
from .errors import (
    CollinearPlane,
    DegenerateNormal,
    DimensionTooLarge,
    DimensionTooSmall,
    DomainError,
    EvalError,
    GaError,
    IndexOutOfRange,
    IoError,
    LexError,
    NotAVector,
    NotInEvenSubalgebra,
    NotUnitVersor,
    ParseError,
    SignatureMismatch,
    Singular,
    UnboundVariable,
    WrongSignature,
    ZeroMultivector,
    ZeroQuaternion,
    ZeroVector,
)
from .exporters import export_obj, export_svg, obj_text, svg_text
from .fieldexpr import Expr, diff, eval_expr, format_expr, simplify, sqrt_of, variable
from .multivector import (
    FLOAT,
    RATIONAL,
    Multivector,
    apply_versor,
    coeff,
    cross_product,
    dual,
    geometric_product,
    grade_project,
    inner_product,
    inverse,
    magnitude,
    norm_squared,
    outer_product,
    reverse,
    rotate_in_plane,
    rotate_vec_to_vec,
    to_basis,
    to_vector,
)
from .scene import Arrow, Cube, Patch, Scene, build_arrow_cone, scene_from_multivector
from .session import Session, eval_statement, format_value, value_record

__all__ = [name for name in dir() if not name.startswith("_")]
