"""Write a Scene to Wavefront OBJ or SVG.

OBJ output is deterministic byte-for-byte: primitives are emitted as one
named object each (arrows, then patches, then cubes, in construction
order), vertices carry six decimal places, arrow shafts and patch
orientation ticks are ``l`` line elements, everything else ``f`` faces.

SVG is a convenience view: orthographic projection along a fixed
direction with painter's-algorithm sorting by primitive centroid depth,
in a fixed 800x800 viewport with a 10% auto-fit margin.
"""

from __future__ import annotations

import math

from .errors import IoError
from .scene import Cube, Scene, build_arrow_cone

_VIEWPORT = 800.0
_MARGIN = 0.10
_DEFAULT_VIEW = (1.0, 1.0, 1.0)


def _coord(value: float) -> str:
    return f"{value + 0.0:.6f}"  # adding 0.0 folds -0.0 into 0.0


def _cube_corners(edge: float):
    h = edge / 2.0
    return [(sx * h, sy * h, sz * h)
            for sx in (-1.0, 1.0) for sy in (-1.0, 1.0) for sz in (-1.0, 1.0)]


# Faces of the corner list above (index pattern: bit2=x, bit1=y, bit0=z),
# wound outward.
_CUBE_FACES = [(0, 1, 3, 2), (4, 6, 7, 5), (0, 4, 5, 1),
               (2, 3, 7, 6), (0, 2, 6, 4), (1, 5, 7, 3)]


def _patch_tick(patch):
    """Short boundary arrow on the first edge, encoding orientation."""
    a, b = patch.corners[0], patch.corners[1]
    end = tuple(pa + 0.25 * (pb - pa) for pa, pb in zip(a, b))
    return a, end


def obj_text(scene: Scene) -> str:
    lines = ["# gacalc scene export"]
    count = 0

    def vertex(point) -> int:
        nonlocal count
        lines.append("v " + " ".join(_coord(c) for c in point))
        count += 1
        return count

    for i, arrow in enumerate(scene.arrows):
        lines.append(f"o arrow_{i}")
        start = vertex(arrow.origin)
        end = vertex(arrow.tip)
        lines.append(f"l {start} {end}")
        for triangle in build_arrow_cone(arrow.tip):
            ids = [vertex(p) for p in triangle]
            lines.append("f " + " ".join(str(n) for n in ids))
    for i, patch in enumerate(scene.patches):
        lines.append(f"o patch_{i}")
        ids = [vertex(p) for p in patch.corners]
        lines.append("f " + " ".join(str(n) for n in ids))
        tick_start, tick_end = _patch_tick(patch)
        a = vertex(tick_start)
        b = vertex(tick_end)
        lines.append(f"l {a} {b}")
    for i, cube in enumerate(scene.cubes):
        lines.append(f"o cube_{i}")
        ids = [vertex(p) for p in _cube_corners(cube.edge)]
        for face in _CUBE_FACES:
            lines.append("f " + " ".join(str(ids[k]) for k in face))
    if scene.show_axes:
        lines.append("o axes")
        origin = vertex((0.0, 0.0, 0.0))
        for axis in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)):
            tip = vertex(axis)
            lines.append(f"l {origin} {tip}")
    return "\n".join(lines) + "\n"


def export_obj(scene: Scene, path) -> None:
    _write(path, obj_text(scene))


# -- SVG ---------------------------------------------------------------------

def _view_frame(direction):
    d = _normalize(direction)
    up = (0.0, 0.0, 1.0)
    u = _cross(up, d)
    if _norm(u) < 1e-9:
        u = _cross((0.0, 1.0, 0.0), d)
    u = _normalize(u)
    v = _cross(d, u)
    return u, v, d


def _norm(p):
    return math.sqrt(sum(c * c for c in p))


def _normalize(p):
    n = _norm(p)
    return tuple(c / n for c in p)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def svg_text(scene: Scene, view=_DEFAULT_VIEW) -> str:
    u, v, d = _view_frame(view)

    def project(point):
        return (_dot(point, u), _dot(point, v))

    def depth(points):
        return sum(_dot(p, d) for p in points) / len(points)

    # (depth, kind, 2d points, color) with kind "poly" or "line"
    shapes = []
    for arrow in scene.arrows:
        shapes.append((depth([arrow.origin, arrow.tip]), "line",
                       [project(arrow.origin), project(arrow.tip)], arrow.color))
        for tri in build_arrow_cone(arrow.tip):
            shapes.append((depth(tri), "poly", [project(p) for p in tri],
                           arrow.color))
    for patch in scene.patches:
        shapes.append((depth(patch.corners), "poly",
                       [project(p) for p in patch.corners], patch.color))
        tick = _patch_tick(patch)
        shapes.append((depth(tick), "line", [project(p) for p in tick], "#000000"))
    for cube in scene.cubes:
        corners = _cube_corners(cube.edge)
        for face in _CUBE_FACES:
            pts = [corners[k] for k in face]
            shapes.append((depth(pts), "poly", [project(p) for p in pts],
                           cube.color))
    if scene.show_axes:
        for axis in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)):
            shapes.append((depth([axis]), "line",
                           [project((0.0, 0.0, 0.0)), project(axis)], "#999999"))

    xs = [x for _, _, pts, _ in shapes for x, _ in pts]
    ys = [y for _, _, pts, _ in shapes for _, y in pts]
    if xs:
        min_x, max_x = min(xs), max(xs)
        min_y, max_y = min(ys), max(ys)
        extent = max(max_x - min_x, max_y - min_y, 1e-9)
        scale = _VIEWPORT * (1.0 - 2.0 * _MARGIN) / extent
        mid_x, mid_y = (min_x + max_x) / 2.0, (min_y + max_y) / 2.0
    else:
        scale, mid_x, mid_y = 1.0, 0.0, 0.0

    def place(pt):
        x = _VIEWPORT / 2.0 + (pt[0] - mid_x) * scale
        y = _VIEWPORT / 2.0 - (pt[1] - mid_y) * scale
        return f"{x:.3f},{y:.3f}"

    body = []
    for _, kind, pts, color in sorted(shapes, key=lambda s: s[0]):
        if kind == "poly":
            body.append(f'<polygon points="{" ".join(place(p) for p in pts)}" '
                        f'fill="{color}" fill-opacity="0.6" stroke="{color}"/>')
        else:
            a, b = place(pts[0]), place(pts[1])
            x1, y1 = a.split(",")
            x2, y2 = b.split(",")
            body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                        f'stroke="{color}" stroke-width="2"/>')
    size = int(_VIEWPORT)
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
            f'height="{size}" viewBox="0 0 {size} {size}">\n'
            + "\n".join(body) + "\n</svg>\n")


def export_svg(scene: Scene, path, view=_DEFAULT_VIEW) -> None:
    _write(path, svg_text(scene, view))


def _write(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as err:
        raise IoError(f"cannot write {path}: {err}") from err
