"""Shared oracles and random generators for the test suite.

The oracles here are deliberately independent of the library's own
computation paths: the blade product is re-derived by bubble-sorting
concatenated index sequences, quaternion and complex arithmetic come
from their textbook component formulas, rotations from explicit 3x3
matrices, and derivatives from central finite differences.
"""

from __future__ import annotations

import math
from fractions import Fraction

from gacalc import EUCLIDEAN, Multivector, Signature, metric_sign


def oracle_blade_product(a_indices, b_indices, signature=EUCLIDEAN):
    """Reference blade product: concatenate the index sequences, bubble
    the result into increasing order flipping the sign per adjacent
    swap, then contract equal adjacent indices through the metric."""
    seq = list(a_indices) + list(b_indices)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    out = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq) and seq[i] == seq[i + 1]:
            sign *= metric_sign(seq[i], signature)
            i += 2
        else:
            out.append(seq[i])
            i += 1
    return sign, tuple(out)


def random_fraction(rng, span=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_multivector(rng, max_dim, signature=EUCLIDEAN, max_terms=6,
                       nonzero=False):
    universe = list(range(1 << max_dim))
    low = 1 if nonzero else 0
    count = rng.randint(low, min(max_terms, len(universe)))
    terms = {}
    for blade in rng.sample(universe, count):
        terms[blade] = random_fraction(rng)
    mv = Multivector(terms, signature)
    if nonzero and mv.is_zero():
        return random_multivector(rng, max_dim, signature, max_terms, nonzero=True)
    return mv


def random_vector(rng, dim, signature=EUCLIDEAN, nonzero=False, non_null=False):
    terms = {1 << i: random_fraction(rng) for i in range(dim)}
    vec = Multivector(terms, signature)
    if (nonzero or non_null) and vec.is_zero():
        return random_vector(rng, dim, signature, nonzero, non_null)
    if non_null and vec.norm_squared() == 0:
        return random_vector(rng, dim, signature, nonzero, non_null)
    return vec


# -- quaternion / complex component formulas ---------------------------------

def quaternion_components_product(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def complex_components_product(z, w):
    a, b = z
    c, d = w
    return (a * c - b * d, a * d + b * c)


# -- 3x3 rotation matrices ----------------------------------------------------

def rotation_matrix(axis, angle):
    x, y, z = axis
    n = math.sqrt(x * x + y * y + z * z)
    x, y, z = x / n, y / n, z / n
    c, s = math.cos(angle), math.sin(angle)
    t = 1.0 - c
    return [[t * x * x + c, t * x * y - s * z, t * x * z + s * y],
            [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
            [t * x * z - s * y, t * y * z + s * x, t * z * z + c]]


def mat_vec(matrix, vec):
    return tuple(sum(row[j] * vec[j] for j in range(3)) for row in matrix)


def vec_cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def vec_dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_norm(a):
    return math.sqrt(vec_dot(a, a))


# -- finite differences --------------------------------------------------------

def central_difference(fn, point, name, h=1e-5):
    up = dict(point)
    down = dict(point)
    up[name] = float(up[name]) + h
    down[name] = float(down[name]) - h
    return (fn(up) - fn(down)) / (2.0 * h)
