"""Classical Jaccard similarity on bit masks; ground truth for the circuits.

Python ints are arbitrary precision, so vectors of any length are handled
as a single mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circuits import BitVector, _pair


@dataclass(frozen=True)
class ClassicalJaccard:
    and_count: int
    or_count: int
    xor_count: int

    @property
    def ratio(self) -> Fraction | None:
        return Fraction(self.and_count, self.or_count) if self.or_count else None


def popcount_and(x: BitVector | str, y: BitVector | str) -> int:
    x, y = _pair(x, y)
    return (x.bits & y.bits).bit_count()


def popcount_or(x: BitVector | str, y: BitVector | str) -> int:
    x, y = _pair(x, y)
    return (x.bits | y.bits).bit_count()


def popcount_xor(x: BitVector | str, y: BitVector | str) -> int:
    x, y = _pair(x, y)
    return (x.bits ^ y.bits).bit_count()


def jaccard_classical(x: BitVector | str, y: BitVector | str) -> ClassicalJaccard:
    return ClassicalJaccard(popcount_and(x, y), popcount_or(x, y), popcount_xor(x, y))
