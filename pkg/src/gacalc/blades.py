"""Basis blades as bitmasks, metric signatures, and the blade product.

A blade is a product of distinct anticommuting generators e_i written in
increasing index order.  It is stored as a plain ``int``: bit ``i - 1``
set means e_i is a factor, ``0`` is the scalar blade.  With this
encoding the product of two blades is again (a signed multiple of) a
blade: the index sets combine by symmetric difference (XOR), and the
coefficient collects one factor -1 per transposition needed to
interleave the two index sequences plus one metric sign per index the
operands share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import IndexOutOfRange

# Generators are numbered 1..64 so any blade fits in one machine word.
MAX_INDEX = 64

SCALAR_BLADE = 0


@dataclass(frozen=True)
class Signature:
    """Metric rule for generator squares: +1 for index <= p, -1 above.

    ``p=None`` (exposed as ``EUCLIDEAN``) makes every generator square
    to +1 regardless of index.
    """

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and self.p < 0:
            raise ValueError(f"signature threshold must be >= 0, got {self.p}")

    def sign(self, index: int) -> int:
        if not 1 <= index <= MAX_INDEX:
            raise IndexOutOfRange(f"generator index {index} outside 1..{MAX_INDEX}")
        if self.p is None or index <= self.p:
            return 1
        return -1

    def __str__(self) -> str:
        return "euclidean" if self.p is None else f"p={self.p}"


EUCLIDEAN = Signature()


def metric_sign(index: int, signature: Signature) -> int:
    """Square of the generator e_index under the given signature."""
    return signature.sign(index)


def make_blade(indices: Iterable[int]) -> int:
    """Blade with exactly the given generator indices (must be distinct)."""
    blade = 0
    for index in indices:
        if not 1 <= index <= MAX_INDEX:
            raise IndexOutOfRange(f"generator index {index} outside 1..{MAX_INDEX}")
        bit = 1 << (index - 1)
        if blade & bit:
            raise IndexOutOfRange(f"generator index {index} repeated in blade")
        blade |= bit
    return blade


def blade_indices(blade: int) -> tuple[int, ...]:
    """Generator indices of a blade, strictly increasing."""
    return tuple(_iter_indices(blade))


def _iter_indices(blade: int) -> Iterator[int]:
    while blade:
        low = blade & -blade
        yield low.bit_length()
        blade ^= low


def grade_of(blade: int) -> int:
    """Number of generators in the blade."""
    return blade.bit_count()


def max_dimension(blade: int) -> int:
    """Largest generator index present; 0 for the scalar blade."""
    return blade.bit_length()


def blade_product(a: int, b: int, signature: Signature = EUCLIDEAN) -> tuple[int, int]:
    """Geometric product of two blades: ``(coefficient, blade)``.

    The result blade is the symmetric difference of the operands' index
    sets.  The coefficient is (-1)**swaps times the metric sign of every
    index present in both operands, where ``swaps`` counts the pairs
    (i in b, j in a, i < j): exactly the adjacent transpositions needed
    to merge a's factors, kept left, with b's into increasing order.
    """
    if a < 0 or b < 0 or (a | b) >> MAX_INDEX:
        raise IndexOutOfRange("blade uses generator indices outside 1..64")
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        swaps += (a >> low.bit_length()).bit_count()
        rest ^= low
    coefficient = -1 if swaps & 1 else 1
    shared = a & b
    while shared:
        low = shared & -shared
        coefficient *= signature.sign(low.bit_length())
        shared ^= low
    return coefficient, a ^ b
