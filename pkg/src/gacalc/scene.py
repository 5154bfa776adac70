"""Turn a multivector of 3-space into drawable primitives.

The grade-1 part becomes one arrow from the origin; each bivector
component becomes a square patch of matching area lying in its
coordinate plane, wound so the right-hand normal agrees with the
component's dual direction; the pseudoscalar part becomes an
origin-centered cube of matching volume.  The scalar part draws
nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DimensionTooLarge, WrongSignature, ZeroVector
from .multivector import FLOAT, Multivector, rotate_vec_to_vec, to_basis

Point = tuple[float, float, float]

ARROW_COLOR = "#c0392b"
PATCH_COLOR = "#2980b9"
CUBE_COLOR = "#7f8c8d"

# Cone template: base circle of radius 1/14 in the xy plane, apex on the
# z axis at 1/5, swept in 25 steps of 0.25 rad.  The template is scaled
# by |tip|/2, rotated from the z axis onto the arrow direction, and
# translated so the apex lands exactly on the tip.
_CONE_RADIUS = 1.0 / 14.0
_CONE_APEX = (0.0, 0.0, 1.0 / 5.0)
_CONE_STEP = 0.25
_CONE_STEPS = 25


@dataclass(frozen=True)
class Arrow:
    origin: Point
    tip: Point
    color: str = ARROW_COLOR


@dataclass(frozen=True)
class Patch:
    corners: tuple[Point, Point, Point, Point]
    positive: bool
    color: str = PATCH_COLOR


@dataclass(frozen=True)
class Cube:
    edge: float
    color: str = CUBE_COLOR


@dataclass
class Scene:
    arrows: list[Arrow] = field(default_factory=list)
    patches: list[Patch] = field(default_factory=list)
    cubes: list[Cube] = field(default_factory=list)
    show_axes: bool = False


# (blade, first axis, second axis); winding below keeps the right-hand
# normal of a positive component equal to its dual: e12 -> +e3,
# e13 -> -e2, e23 -> +e1.
_PLANES = ((0b011, 0, 1), (0b101, 0, 2), (0b110, 1, 2))


def scene_from_multivector(value: Multivector) -> Scene:
    if value.max_dimension() > 3:
        raise DimensionTooLarge("drawing is limited to the span of e1..e3")
    p = value.signature.p
    if p is not None and p < 3:
        raise WrongSignature("drawing expects e1..e3 to square to +1")
    floats = value.to_float()
    scene = Scene()

    vector = floats.grade(1)
    if not vector.is_zero():
        scene.arrows.append(Arrow((0.0, 0.0, 0.0), tuple(vector.to_vector(3))))

    for blade, axis_u, axis_v in _PLANES:
        coefficient = floats.coeff(blade)
        if coefficient == 0:
            continue
        half = math.sqrt(abs(coefficient)) / 2.0
        square = [(half, half), (-half, half), (-half, -half), (half, -half)]
        if coefficient < 0:
            square.reverse()
        corners = []
        for u, v in square:
            point = [0.0, 0.0, 0.0]
            point[axis_u] = u
            point[axis_v] = v
            corners.append(tuple(point))
        scene.patches.append(Patch(tuple(corners), coefficient > 0))

    volume = floats.coeff(0b111)
    if volume != 0:
        scene.cubes.append(Cube(abs(volume) ** (1.0 / 3.0)))
    return scene


def build_arrow_cone(tip: Point) -> list[tuple[Point, Point, Point]]:
    """Twenty-five triangles forming the arrowhead cone at ``tip``."""
    tip = tuple(float(c) for c in tip)
    length = math.sqrt(sum(c * c for c in tip))
    if length == 0.0:
        raise ZeroVector("arrow tip must not be the origin")
    scale = length / 2.0

    if tip[0] == 0.0 and tip[1] == 0.0:
        # Collinear with the template axis: no rotation is applied.
        def orient(point: Point) -> Point:
            return point
    else:
        z_axis = to_basis((0.0, 0.0, 1.0), mode=FLOAT)
        target = to_basis(tip, mode=FLOAT)

        def orient(point: Point) -> Point:
            rotated = rotate_vec_to_vec(to_basis(point, mode=FLOAT), z_axis, target)
            return tuple(rotated.to_vector(3))

    apex = orient(tuple(scale * c for c in _CONE_APEX))
    shift = tuple(t - a for t, a in zip(tip, apex))

    def place(point: Point) -> Point:
        moved = orient(tuple(scale * c for c in point))
        return tuple(m + s for m, s in zip(moved, shift))

    triangles = []
    for step in range(1, _CONE_STEPS + 1):
        t = _CONE_STEP * step
        rim_a = (math.sin(t) * _CONE_RADIUS, math.cos(t) * _CONE_RADIUS, 0.0)
        rim_b = (math.sin(t + _CONE_STEP) * _CONE_RADIUS,
                 math.cos(t + _CONE_STEP) * _CONE_RADIUS, 0.0)
        triangles.append((place(rim_a), place(rim_b), place(_CONE_APEX)))
    return triangles
